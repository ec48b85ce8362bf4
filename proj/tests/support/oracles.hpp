#pragma once

// Independent reference implementations used only by the tests.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "promisecc/dfa.hpp"

namespace oracle {

inline int popcount(std::uint64_t v) { return std::popcount(v); }

/// Exact binomial coefficient via Pascal's triangle, n <= 62.
inline std::uint64_t choose(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][r];
}

/// Probability that s draws without replacement from W items, m of them
/// marked, avoid every marked item. Computed as a product of per-draw
/// survival ratios.
inline double hypergeometric_miss(int w, int m, int s) {
  if (s > w) s = w;
  double p = 1.0;
  for (int i = 0; i < s; ++i) p *= static_cast<double>(w - m - i) / static_cast<double>(w - i);
  return p < 0.0 ? 0.0 : p;
}

using ConflictFn = std::function<bool(std::uint64_t, std::uint64_t)>;

/// Largest conflict-free subset by trying every subset of `universe`
/// (at most 20 members).
inline std::size_t mis_by_subsets(const std::vector<std::uint64_t>& universe, const ConflictFn& conflict) {
  const std::size_t m = universe.size();
  std::vector<std::uint32_t> bad(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && conflict(universe[i], universe[j])) bad[i] |= 1U << j;
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if ((s >> i & 1U) && (bad[i] & s)) ok = false;
    if (ok) best = static_cast<std::size_t>(std::popcount(s));
  }
  return best;
}

/// Maximum independent set by max-degree branching on a graph with at most
/// 64 vertices: take every isolated vertex, else branch on excluding or
/// including the highest-degree vertex.
inline std::size_t mis_by_branching(const std::vector<std::uint64_t>& universe, const ConflictFn& conflict) {
  const std::size_t m = universe.size();
  std::vector<std::uint64_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && conflict(universe[i], universe[j])) adj[i] |= std::uint64_t{1} << j;
  std::function<std::size_t(std::uint64_t)> solve = [&](std::uint64_t p) -> std::size_t {
    if (!p) return 0;
    int best_v = -1;
    int best_d = -1;
    for (std::uint64_t q = p; q; q &= q - 1) {
      const int v = std::countr_zero(q);
      const int d = std::popcount(adj[v] & p);
      if (d > best_d) {
        best_d = d;
        best_v = v;
      }
    }
    if (best_d == 0) return static_cast<std::size_t>(std::popcount(p));
    const std::uint64_t bit = std::uint64_t{1} << best_v;
    if (best_d == 1) return 1 + solve(p & ~bit & ~adj[best_v]);
    const std::size_t without = solve(p & ~bit);
    const std::size_t with = 1 + solve(p & ~bit & ~adj[best_v]);
    return std::max(without, with);
  };
  return solve(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

/// Minimal-effort DFA for the x#y#x promise language of disjointness: it
/// memorizes x, remembers whether y hits a 1 of x, then skips the repeated x.
/// States are discovered breadth-first from the start state.
inline promisecc::Dfa disjointness_dfa(int n) {
  // (phase, position, x prefix, hit); phase 3 is the dead state.
  using Key = std::tuple<int, int, std::uint64_t, bool>;
  std::map<Key, int> ids;
  std::vector<Key> keys;
  auto id = [&](const Key& k) {
    auto [it, fresh] = ids.emplace(k, static_cast<int>(keys.size()));
    if (fresh) keys.push_back(k);
    return it->second;
  };
  const Key dead{3, 0, 0, false};
  auto next = [&](const Key& k, char c) -> Key {
    auto [phase, pos, x, hit] = k;
    if (phase == 3) return dead;
    if (c == '#') {
      if (pos != n || phase == 2) return dead;
      return phase == 0 ? Key{1, 0, x, false} : Key{2, 0, 0, hit};
    }
    if (pos == n) return dead;
    const int bit = c - '0';
    if (phase == 0) return {0, pos + 1, (x << 1) | static_cast<std::uint64_t>(bit), false};
    if (phase == 1) {
      const bool x_bit = (x >> (n - 1 - pos)) & 1U;
      return {1, pos + 1, x, hit || (x_bit && bit)};
    }
    return {2, pos + 1, 0, hit};
  };
  const std::string alphabet = "01#";
  id(Key{0, 0, 0, false});
  std::vector<int> table;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    for (char c : alphabet) table.push_back(id(next(keys[s], c)));
  }
  std::vector<bool> accepting(keys.size(), false);
  for (std::size_t s = 0; s < keys.size(); ++s) {
    auto [phase, pos, x, hit] = keys[s];
    accepting[s] = phase == 2 && pos == n && !hit;
  }
  return promisecc::Dfa(static_cast<int>(keys.size()), alphabet, table, 0, accepting);
}

/// |psi> amplitudes of the equality protocol before measurement, by direct
/// matrix algebra in plain std::complex (no library operators).
inline double eqk_accept_direct(const std::string& x, const std::string& y, int k) {
  const int n = static_cast<int>(x.size());
  const double c = std::sqrt((2.0 * k - n) / (2.0 * k));
  const double s = std::sqrt(static_cast<double>(n) / (2.0 * k));
  // U_h U_k |0> = c|0> + s/sqrt(n) sum_i |i>; phases; then <0| (U_h U_k)^dag.
  std::complex<double> amp = c * c;
  for (int i = 0; i < n; ++i) {
    const int sign = ((x[i] - '0') + (y[i] - '0')) % 2 ? -1 : 1;
    amp += sign * s * s / n;
  }
  return std::norm(amp);
}

}  // namespace oracle
