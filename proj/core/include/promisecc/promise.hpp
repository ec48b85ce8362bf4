#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promisecc/bitstring.hpp"
#include "promisecc/rational.hpp"
#include "promisecc/rng.hpp"

namespace promisecc {

enum class Family { kEqK, kDjK, kDisjLambda, kDisjPrimeK };
enum class Label { kYes, kNo, kOffPromise };

/// Which NO-set the Deutsch-Jozsa family uses. The one-query quantum and
/// n-k+1 classical results hold for W(x) == k; the strict ">k" variant is
/// kept for comparison.
enum class DjPromise { kWeightEqualsK, kWeightAboveK };

std::string_view to_string(Family f);
std::string_view to_string(Label l);
std::string_view to_string(DjPromise p);
Family parse_family(std::string_view text);

struct PromiseParams {
  Family family = Family::kEqK;
  int n = 0;
  int k = 0;
  Rational lambda{1, 4};
  DjPromise dj_promise = DjPromise::kWeightEqualsK;

  static PromiseParams eqk(int n, int k);
  static PromiseParams djk(int n, int k, DjPromise promise = DjPromise::kWeightEqualsK);
  static PromiseParams disj(int n, Rational lambda);
  static PromiseParams disj_prime(int n, int k);

  bool two_party() const { return family != Family::kDjK; }
  /// Throws ParameterError when the parameters violate the family's constraints.
  void validate() const;
};

struct PromiseInstance {
  PromiseParams params;
  BitString x;
  std::optional<BitString> y;
  Label label = Label::kOffPromise;
};

/// Label from precomputed Hamming statistics; parameters are assumed valid.
Label classify_stats(const PromiseParams& params, const HammingStats& stats);

Label classify(const PromiseParams& params, const BitString& x);
Label classify(const PromiseParams& params, const BitString& x, const BitString& y);
Label classify(const PromiseInstance& instance);

/// Largest n accepted by exhaustive operations: 12, or PROMISE_CC_MAX_N when set.
int exhaustive_limit();

/// Every on-promise input (pair) of a family, lexicographic on (x, y).
/// Restartable: each begin() starts a fresh pass.
class PromiseEnumeration {
 public:
  explicit PromiseEnumeration(PromiseParams params);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PromiseInstance;
    using difference_type = std::ptrdiff_t;
    using pointer = const PromiseInstance*;
    using reference = const PromiseInstance&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.cursor_ == b.cursor_; }

   private:
    friend class PromiseEnumeration;
    iterator(const PromiseEnumeration* owner, std::uint64_t cursor);
    void settle();

    const PromiseEnumeration* owner_ = nullptr;
    std::uint64_t cursor_ = 0;
    PromiseInstance current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, end_); }
  const PromiseParams& params() const { return params_; }

 private:
  PromiseParams params_;
  std::uint64_t end_ = 0;
};

/// Throws LimitExceeded when n is above exhaustive_limit().
PromiseEnumeration enumerate_promise(const PromiseParams& params);

/// Random on-promise instances, YES and NO with equal probability when both
/// sets are non-empty.
std::vector<PromiseInstance> sample_promise(const PromiseParams& params, std::size_t count,
                                            Rng& rng);

}  // namespace promisecc
