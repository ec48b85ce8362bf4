#include "promisecc/errors.hpp"
