#include <bit>
#include <cmath>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "promisecc/bounds.hpp"
#include "promisecc/errors.hpp"
#include "promisecc/independent_set.hpp"
#include "promisecc/promise.hpp"
#include "promisecc/rng.hpp"
#include "oracles.hpp"

using namespace promisecc;

namespace {

std::vector<std::uint64_t> cube(int n) {
  std::vector<std::uint64_t> v(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

void expect_pairwise_ok(const ConflictFamilyResult& r, int l) {
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
      ASSERT_NE(r.witness[i], r.witness[j]);
      ASSERT_NE(hamming_stats(r.witness[i], r.witness[j]).and_weight, l);
    }
  ASSERT_EQ(r.witness.size(), r.max_size);
}

}  // namespace

TEST(IndependentSet, SmallGraphs) {
  BitGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  EXPECT_EQ(maximum_independent_set(path).vertices.size(), 2U);

  BitGraph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  EXPECT_EQ(maximum_independent_set(k4).vertices.size(), 1U);
  EXPECT_EQ(maximum_independent_set(BitGraph(5)).vertices.size(), 5U);
  EXPECT_TRUE(maximum_independent_set(BitGraph(0)).vertices.empty());
}

TEST(IndependentSet, RandomGraphsMatchBranchingOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 10 + rng.below(40);
    const double density = 0.1 + 0.8 * rng.unit();
    std::vector<std::uint64_t> adj(m, 0);
    BitGraph g(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (rng.bernoulli(density)) {
          g.add_edge(a, b);
          adj[a] |= std::uint64_t{1} << b;
          adj[b] |= std::uint64_t{1} << a;
        }
    std::vector<std::uint64_t> ids(m);
    for (std::size_t i = 0; i < m; ++i) ids[i] = i;
    const auto expect =
        oracle::mis_by_branching(ids, [&](std::uint64_t a, std::uint64_t b) { return (adj[a] >> b) & 1U; });
    const auto got = maximum_independent_set(g);
    ASSERT_EQ(got.vertices.size(), expect);
    for (auto a : got.vertices)
      for (auto b : got.vertices) ASSERT_FALSE(g.adjacent(a, b));
  }
}

TEST(MaxFamily, SpecExamples) {
  auto r = max_family_avoiding(2, 0);
  EXPECT_EQ(r.max_size, 2U);
  expect_pairwise_ok(r, 0);
  r = max_family_avoiding(2, 1);
  EXPECT_EQ(r.max_size, 3U);
  expect_pairwise_ok(r, 1);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(max_family_avoiding(n, n).max_size, std::size_t{1} << n);
  EXPECT_THROW(max_family_avoiding(13, 2), LimitExceeded);
  EXPECT_THROW(max_family_avoiding(3, 4), ParameterError);
}

TEST(MaxFamily, MatchesSubsetOracleUpToFour) {
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto conflict = [l](std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) == l; };
      ASSERT_EQ(max_family_avoiding(n, l).max_size, oracle::mis_by_subsets(cube(n), conflict)) << n << "," << l;
    }
}

TEST(MaxFamily, MatchesBranchingOracleUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto conflict = [l](std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) == l; };
      const auto r = max_family_avoiding(n, l);
      ASSERT_EQ(r.max_size, oracle::mis_by_branching(cube(n), conflict)) << n << "," << l;
      expect_pairwise_ok(r, l);
    }
}

TEST(EqkBound, SpecExamples) {
  auto b = eqk_rectangle_bound(2, 2);
  EXPECT_EQ(b.c1_lower, 2U);
  EXPECT_EQ(b.bit_lower, 1);
  b = eqk_rectangle_bound(4, 4);
  EXPECT_EQ(b.fooling_points, 6U);
  const auto m = b.family.max_size;
  EXPECT_EQ(b.c1_lower, (6 + m - 1) / m);
  EXPECT_THROW(eqk_rectangle_bound(4, 3), ParameterError);
  EXPECT_THROW(eqk_rectangle_bound(6, 2), ParameterError);
}

TEST(MaxFamily, BudgetGivesSoundUpperBound) {
  const auto exact = max_family_avoiding(6, 2, 0);
  ASSERT_TRUE(exact.exact);
  EXPECT_EQ(exact.upper_bound, exact.max_size);
  for (std::uint64_t budget : {1, 2, 5, 20, 100}) {
    const auto r = max_family_avoiding(6, 2, budget);
    EXPECT_LE(r.search_nodes, budget);
    EXPECT_LE(r.max_size, exact.max_size);
    EXPECT_GE(r.upper_bound, exact.max_size);
    expect_pairwise_ok(r, 2);
  }
}

TEST(EqkBound, LowerNeverExceedsPrefixProtocol) {
  for (int n = 2; n <= 10; ++n)
    for (int k = (n + 1) / 2; k <= n; ++k) {
      if (k % 2) continue;
      const auto b = eqk_rectangle_bound(n, k);
      EXPECT_GE(b.c1_lower, 1U);
      EXPECT_LE(b.family.max_size, b.family.upper_bound);
      EXPECT_TRUE(b.family.exact) << n << "," << k;
      EXPECT_LE(b.bit_lower, n - k + 1) << n << "," << k;
      for (const auto& w : b.family.witness) EXPECT_EQ(w.weight(), n / 2);
    }
}

TEST(DisjBound, SpecExamples) {
  const auto b = disj_rectangle_bound(4, Rational(1, 4));
  EXPECT_EQ(b.fooling_points, 14U);
  const auto m = b.family.max_size;
  EXPECT_EQ(b.c1_lower, (14 + m - 1) / m);
  expect_pairwise_ok(b.family, 1);
  EXPECT_GE(b.c1_lower, 1U);
  EXPECT_THROW(disj_rectangle_bound(6, Rational(1, 4)), ParameterError);
  EXPECT_NEAR(disj_reference_threshold(4), std::pow(1.99, 4), 1e-9);
}

TEST(DisjBound, RectangleRuleFamiliesShareNoNoInput) {
  const auto b = disj_rectangle_bound(8, Rational(1, 4), DisjConflictRule::kRectangle);
  const auto p = PromiseParams::disj(8, Rational(1, 4));
  for (const auto& x : b.family.witness)
    for (const auto& z : b.family.witness) {
      if (x == z) continue;
      ASSERT_NE(classify(p, x, z.complement()), Label::kNo);
    }
  EXPECT_GE(b.c1_lower, 1U);
}

TEST(BoundsJson, Fields) {
  const auto j = to_json(eqk_rectangle_bound(4, 2));
  for (const char* key : {"n", "max_size", "c1_lower", "bit_lower", "family"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["family"].contains("witness"));
}
