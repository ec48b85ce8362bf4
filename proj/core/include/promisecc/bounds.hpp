#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "promisecc/bitstring.hpp"
#include "promisecc/rational.hpp"

namespace promisecc {

/// A maximum family of n-bit strings, no two distinct members of which
/// conflict. For the plain M(n,l) search the conflict is |x AND y| == l.
struct ConflictFamilyResult {
  int n = 0;
  int forbidden_l = 0;
  std::size_t universe_size = 0;
  std::size_t max_size = 0;
  std::vector<BitString> witness;
  std::uint64_t search_nodes = 0;
  /// False when the node budget ran out; max_size is then only the best
  /// family found and upper_bound the certified ceiling.
  bool exact = true;
  std::size_t upper_bound = 0;
};

/// Search nodes allowed per exact search unless the caller says otherwise.
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

using ConflictPredicate = std::function<bool(std::uint64_t, std::uint64_t)>;

/// Exact maximum family inside `universe` (masks, MSB = x_1) with respect to
/// a symmetric conflict predicate. forbidden_l is only recorded. Set
/// `transitive` only when the conflict graph is vertex-transitive.
ConflictFamilyResult max_family(int n, const std::vector<std::uint64_t>& universe,
                                const ConflictPredicate& conflict, int forbidden_l = -1,
                                std::uint64_t node_budget = kDefaultNodeBudget, bool transitive = false);

/// M(n,l) over all of {0,1}^n; node_budget 0 means unlimited. Throws LimitExceeded when n > exhaustive_limit().
ConflictFamilyResult max_family_avoiding(int n, int l, std::uint64_t node_budget = kDefaultNodeBudget);

struct RectangleBound {
  int n = 0;
  std::uint64_t fooling_points = 0;  ///< |E|
  ConflictFamilyResult family;       ///< largest conflict-free subset of E
  /// ceil(|E| / family.upper_bound): sound even when the search was cut short.
  std::uint64_t c1_lower = 1;
  int bit_lower = 0;
};

/// Diagonal points (x,x) with W(x) = floor(n/2); two of them conflict when
/// |x AND z| = floor((n-k)/2), i.e. their Hamming distance is k.
RectangleBound eqk_rectangle_bound(int n, int k, std::uint64_t node_budget = kDefaultNodeBudget);

enum class DisjConflictRule {
  kQuarterIntersection,  ///< |x AND z| == n/4
  kRectangle,            ///< (x, not z) or (z, not x) is a NO input
};

/// Points (x, not x) for x in F_lambda = {x : lambda*n <= W(x) <= (1-lambda)*n}.
RectangleBound disj_rectangle_bound(int n, const Rational& lambda,
                                    DisjConflictRule rule = DisjConflictRule::kQuarterIntersection,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

/// 1.99^n, reported next to disj bounds for comparison only.
double disj_reference_threshold(int n);

nlohmann::json to_json(const ConflictFamilyResult& r);
nlohmann::json to_json(const RectangleBound& r);

}  // namespace promisecc
