#include "promisecc/bounds.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "promisecc/errors.hpp"
#include "promisecc/independent_set.hpp"
#include "promisecc/promise.hpp"

namespace promisecc {
namespace {

void check_limit(int n) {
  if (n < 1) throw ParameterError("n must be positive");
  if (n > exhaustive_limit()) {
    throw LimitExceeded("exact search over {0,1}^" + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(exhaustive_limit()) + "; set PROMISE_CC_MAX_N to raise it");
  }
}

int and_weight(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b); }

std::uint64_t binomial(int n, int r) {
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

RectangleBound finish(int n, std::uint64_t points, ConflictFamilyResult family) {
  RectangleBound b;
  b.n = n;
  b.fooling_points = points;
  b.family = std::move(family);
  const std::uint64_t m = b.family.upper_bound;
  b.c1_lower = m == 0 ? 1 : std::max<std::uint64_t>(1, (points + m - 1) / m);
  b.bit_lower = ceil_log2(b.c1_lower);
  return b;
}

}  // namespace

ConflictFamilyResult max_family(int n, const std::vector<std::uint64_t>& universe,
                                const ConflictPredicate& conflict, int forbidden_l, std::uint64_t node_budget,
                                bool transitive) {
  BitGraph g(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      if (universe[i] != universe[j] && conflict(universe[i], universe[j])) g.add_edge(i, j);
    }
  }
  const auto mis = transitive ? maximum_independent_set_transitive(g, node_budget)
                              : maximum_independent_set(g, node_budget);
  ConflictFamilyResult r;
  r.n = n;
  r.forbidden_l = forbidden_l;
  r.universe_size = universe.size();
  r.max_size = mis.vertices.size();
  r.search_nodes = mis.search_nodes;
  r.exact = mis.exact;
  r.upper_bound = mis.upper_bound;
  for (auto v : mis.vertices) r.witness.push_back(BitString::from_mask(static_cast<std::size_t>(n), universe[v]));
  return r;
}

ConflictFamilyResult max_family_avoiding(int n, int l, std::uint64_t node_budget) {
  check_limit(n);
  if (l < 0 || l > n) throw ParameterError("l must lie in [0, n]");
  std::vector<std::uint64_t> universe(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < universe.size(); ++m) universe[m] = m;
  return max_family(n, universe, [l](std::uint64_t a, std::uint64_t b) { return and_weight(a, b) == l; }, l,
                    node_budget);
}

RectangleBound eqk_rectangle_bound(int n, int k, std::uint64_t node_budget) {
  check_limit(n);
  if (k % 2 != 0) throw ParameterError("eqk bound needs even k");
  if (k > n || 2 * k < n) throw ParameterError("eqk bound needs n/2 <= k <= n");
  const int half = n / 2;
  const int l = (n - k) / 2;
  std::vector<std::uint64_t> layer;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) == half) layer.push_back(m);
  }
  // Coordinate permutations act transitively on the layer and keep |x AND z|.
  auto family = max_family(
      n, layer, [l](std::uint64_t a, std::uint64_t b) { return and_weight(a, b) == l; }, l, node_budget, true);
  return finish(n, binomial(n, half), std::move(family));
}

RectangleBound disj_rectangle_bound(int n, const Rational& lambda, DisjConflictRule rule,
                                    std::uint64_t node_budget) {
  if (n < 4 || n % 4 != 0) throw ParameterError("disj bound needs n divisible by 4");
  check_limit(n);
  const auto params = PromiseParams::disj(n, lambda);
  params.validate();
  std::vector<std::uint64_t> f;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const int w = std::popcount(m);
    if (lambda * n <= Rational(w) && Rational(w) <= (1 - lambda) * n) f.push_back(m);
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  ConflictPredicate conflict;
  int forbidden = -1;
  if (rule == DisjConflictRule::kQuarterIntersection) {
    forbidden = n / 4;
    conflict = [forbidden](std::uint64_t a, std::uint64_t b) { return and_weight(a, b) == forbidden; };
  } else {
    conflict = [params, full](std::uint64_t a, std::uint64_t b) {
      const HammingStats s1{std::popcount(a), std::popcount(full & ~b), 0, and_weight(a, full & ~b)};
      const HammingStats s2{std::popcount(b), std::popcount(full & ~a), 0, and_weight(b, full & ~a)};
      return classify_stats(params, s1) == Label::kNo || classify_stats(params, s2) == Label::kNo;
    };
  }
  auto family = max_family(n, f, conflict, forbidden, node_budget);
  return finish(n, f.size(), std::move(family));
}

double disj_reference_threshold(int n) { return std::pow(1.99, n); }

nlohmann::json to_json(const ConflictFamilyResult& r) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& w : r.witness) witness.push_back(w.to_string());
  nlohmann::json j{{"n", r.n}, {"universe_size", r.universe_size}, {"max_size", r.max_size},
                   {"witness", witness}, {"search_nodes", r.search_nodes},
                   {"exact", r.exact}, {"upper_bound", r.upper_bound}};
  if (r.forbidden_l >= 0) j["l"] = r.forbidden_l;
  return j;
}

nlohmann::json to_json(const RectangleBound& r) {
  return {{"n", r.n},
          {"fooling_points", r.fooling_points},
          {"max_size", r.family.max_size},
          {"family", to_json(r.family)},
          {"c1_lower", r.c1_lower},
          {"bit_lower", r.bit_lower}};
}

}  // namespace promisecc
