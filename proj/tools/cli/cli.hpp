#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "promisecc/bounds.hpp"
#include "promisecc/promise.hpp"
#include "promisecc/rational.hpp"

namespace promisecc::cli {

enum class Mode { kExact, kSample };
enum class Format { kJson, kCsv };

struct RunConfig {
  std::string command;  ///< e.g. "protocol run", "bounds mnl"
  std::string problem = "eqk";
  std::string protocol;  ///< empty picks the family default
  std::vector<int> n;
  std::string n_range;  ///< "a:b" or "a:b:step"
  std::optional<int> k;
  std::optional<int> l;
  std::string lambda = "1/4";
  std::string epsilon = "1/3";
  std::string x;
  std::string y;
  std::string word;
  Mode mode = Mode::kExact;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;
  Format format = Format::kJson;
  bool exhaustive = false;
  bool summary = false;
  bool allow_off_promise = false;
  bool with_states = false;
  std::string instances;
  std::optional<int> sample_size;
  std::optional<int> rounds;
  std::uint64_t count = 0;
  std::string dj_promise = "eq";
  std::string algorithm = "quantum";
  std::string rule = "quarter";
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// One sweep_report request; param is k for eqk/disjp and lambda for disj.
struct SweepSpec {
  Family family = Family::kEqK;
  std::string protocol;
  std::vector<int> n;
  std::optional<int> k;
  Rational lambda{1, 4};
  double epsilon = 1.0 / 3.0;
  std::optional<int> sample_size;
  std::optional<int> rounds;
};

inline constexpr const char* kSweepHeader =
    "n,param,instances,min_yes_prob,max_yes_prob,max_no_prob,qubit_cost,bit_cost";

/// One CSV row per n, exhaustive over promise inputs. Rows follow spec.n.
std::string sweep_report(const SweepSpec& spec);

/// Routes a parsed configuration. Returns 0 on success, 2 on a promise
/// violation, 1 on usage or parameter errors.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace promisecc::cli
