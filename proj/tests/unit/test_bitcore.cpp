#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "promisecc/bitstring.hpp"
#include "promisecc/errors.hpp"
#include "promisecc/promise.hpp"
#include "promisecc/rational.hpp"
#include "promisecc/rng.hpp"
#include "oracles.hpp"

using namespace promisecc;

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(Rational::parse("2/8"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 4).to_string(), "1/4");
  EXPECT_THROW(Rational::parse("0.25"), ParameterError);
  EXPECT_THROW(Rational::parse("1/0"), ParameterError);
  EXPECT_THROW(Rational::parse("a/b"), ParameterError);
  EXPECT_THROW(Rational::parse(""), ParameterError);
}

TEST(Rational, ComparesExactly) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_TRUE(Rational(1, 4) * 4 == 1);
  EXPECT_EQ(1 - Rational(1, 4), Rational(3, 4));
  EXPECT_TRUE(Rational(5, 2) > 2);
}

TEST(Rng, StreamsAreReproducibleAndIndependent) {
  Rng a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 16; ++i) {
    const auto va = a.next();
    EXPECT_EQ(va, b.next());
    EXPECT_NE(va, c.next());
  }
}

TEST(Rng, BelowAndUnitStayInRange) {
  Rng r(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = r.below(5);
    ASSERT_LT(v, 5U);
    seen.insert(v);
    const double u = r.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(seen.size(), 5U);
}

TEST(BitString, RoundTrips) {
  const auto b = BitString::parse("1011");
  EXPECT_EQ(b.size(), 4U);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b.weight(), 3);
  EXPECT_EQ(b.to_string(), "1011");
  EXPECT_EQ(b.to_mask(), 0b1011U);
  EXPECT_EQ(BitString::from_mask(4, 0b1011), b);
  EXPECT_EQ(b.complement().to_string(), "0100");
  EXPECT_EQ(b.flipped(1).to_string(), "1111");
  EXPECT_THROW(BitString::parse("10a1"), InputError);
}

TEST(HammingStats, SpecExamples) {
  EXPECT_EQ(hamming_stats(BitString::parse("0000"), BitString::parse("0000")), (HammingStats{0, 0, 0, 0}));
  EXPECT_EQ(hamming_stats(BitString::parse("1100"), BitString::parse("0110")), (HammingStats{2, 2, 2, 1}));
  EXPECT_EQ(hamming_stats(BitString::parse("1111"), BitString::parse("1111")), (HammingStats{4, 4, 0, 4}));
  EXPECT_THROW(hamming_stats(BitString::parse("10"), BitString::parse("100")), DimensionError);
}

TEST(HammingStats, MatchesPopcountOracle) {
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      const auto s = hamming_stats(BitString::from_mask(5, a), BitString::from_mask(5, b));
      ASSERT_EQ(s.distance, oracle::popcount(a ^ b));
      ASSERT_EQ(s.and_weight, oracle::popcount(a & b));
      ASSERT_EQ(s.weight_x, oracle::popcount(a));
      // distance = W(x) + W(y) - 2 |x AND y|
      ASSERT_EQ(s.distance, s.weight_x + s.weight_y - 2 * s.and_weight);
    }
  }
}

TEST(CeilLog2, SmallValues) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
}

TEST(Classify, SpecExamples) {
  const auto eq = PromiseParams::eqk(4, 2);
  EXPECT_EQ(classify(eq, BitString::parse("1010"), BitString::parse("1010")), Label::kYes);
  EXPECT_EQ(classify(eq, BitString::parse("1010"), BitString::parse("1001")), Label::kNo);
  EXPECT_EQ(classify(eq, BitString::parse("1010"), BitString::parse("1011")), Label::kOffPromise);
  // and_weight 1 = lambda n sits on the closed boundary
  const auto d = PromiseParams::disj(4, Rational(1, 4));
  EXPECT_EQ(classify(d, BitString::parse("1100"), BitString::parse("1000")), Label::kNo);
  EXPECT_EQ(classify(d, BitString::parse("1111"), BitString::parse("1111")), Label::kOffPromise);
}

TEST(Classify, RationalBoundaryNonInteger) {
  // lambda n = 5/4: and_weight 1 is below the gap, 2 is inside.
  const auto d = PromiseParams::disj(5, Rational(1, 4));
  EXPECT_EQ(classify(d, BitString::parse("10000"), BitString::parse("10000")), Label::kOffPromise);
  EXPECT_EQ(classify(d, BitString::parse("11000"), BitString::parse("11000")), Label::kNo);
  EXPECT_EQ(classify(d, BitString::parse("11110"), BitString::parse("11110")), Label::kOffPromise);
}

TEST(Classify, OddKAcceptedAndParametersChecked) {
  EXPECT_NO_THROW(PromiseParams::eqk(4, 3).validate());
  EXPECT_THROW(PromiseParams::eqk(4, 1).validate(), ParameterError);
  EXPECT_THROW(PromiseParams::eqk(4, 5).validate(), ParameterError);
  EXPECT_THROW(PromiseParams::disj(4, Rational(1, 3)).validate(), ParameterError);
  EXPECT_THROW(PromiseParams::disj(4, Rational(0)).validate(), ParameterError);
}

TEST(Classify, DjPromiseVariants) {
  const auto eq = PromiseParams::djk(4, 2);
  const auto gt = PromiseParams::djk(4, 2, DjPromise::kWeightAboveK);
  EXPECT_EQ(classify(eq, BitString::parse("0000")), Label::kYes);
  EXPECT_EQ(classify(eq, BitString::parse("0110")), Label::kNo);
  EXPECT_EQ(classify(eq, BitString::parse("0111")), Label::kOffPromise);
  EXPECT_EQ(classify(gt, BitString::parse("0111")), Label::kNo);
  EXPECT_EQ(classify(gt, BitString::parse("0110")), Label::kOffPromise);
  EXPECT_THROW(classify(eq, BitString::parse("00"), BitString::parse("00")), InputError);
}

TEST(Enumerate, SpecExamples) {
  int yes = 0, no = 0;
  for (const auto& inst : enumerate_promise(PromiseParams::eqk(2, 2))) {
    (inst.label == Label::kYes ? yes : no)++;
    if (inst.label == Label::kNo) {
      EXPECT_EQ(*inst.y, inst.x.complement());
    }
  }
  EXPECT_EQ(yes, 4);
  EXPECT_EQ(no, 4);

  std::vector<std::string> dj;
  for (const auto& inst : enumerate_promise(PromiseParams::djk(2, 2))) dj.push_back(inst.x.to_string());
  EXPECT_EQ(dj, (std::vector<std::string>{"00", "11"}));

  int disjoint = 0;
  for (const auto& inst : enumerate_promise(PromiseParams::disj(4, Rational(1, 4)))) {
    if (inst.label == Label::kYes) ++disjoint;
  }
  EXPECT_EQ(disjoint, 81);
}

TEST(Enumerate, MatchesBruteForceAndIsLexicographic) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = (n + 1) / 2; k <= n; ++k) {
      const auto p = PromiseParams::eqk(n, k);
      std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;
      for (std::uint64_t x = 0; x < (1U << n); ++x)
        for (std::uint64_t y = 0; y < (1U << n); ++y) {
          const int h = oracle::popcount(x ^ y);
          if (h == 0 || h == k) expected.emplace_back(x, y);
        }
      std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
      for (const auto& inst : enumerate_promise(p)) got.emplace_back(inst.x.to_mask(), inst.y->to_mask());
      ASSERT_EQ(got, expected) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Enumerate, RestartableAndLimited) {
  const auto e = enumerate_promise(PromiseParams::disj_prime(3, 2));
  const auto count = [&] {
    int c = 0;
    for (auto it = e.begin(); it != e.end(); ++it) ++c;
    return c;
  };
  EXPECT_EQ(count(), count());
  EXPECT_THROW(enumerate_promise(PromiseParams::eqk(13, 8)), LimitExceeded);
}

TEST(Enumerate, EnvironmentOverridesLimit) {
  ::setenv("PROMISE_CC_MAX_N", "3", 1);
  EXPECT_EQ(exhaustive_limit(), 3);
  EXPECT_THROW(enumerate_promise(PromiseParams::eqk(4, 2)), LimitExceeded);
  ::unsetenv("PROMISE_CC_MAX_N");
  EXPECT_EQ(exhaustive_limit(), 12);
}

TEST(SamplePromise, OnPromiseAndSeeded) {
  for (const auto& params : {PromiseParams::eqk(16, 10), PromiseParams::disj(20, Rational(1, 8)),
                             PromiseParams::djk(30, 20), PromiseParams::disj_prime(14, 9)}) {
    Rng r1(9), r2(9);
    const auto a = sample_promise(params, 200, r1);
    const auto b = sample_promise(params, 200, r2);
    ASSERT_EQ(a.size(), 200U);
    int yes = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].x, b[i].x);
      ASSERT_NE(a[i].label, Label::kOffPromise);
      ASSERT_EQ(classify(a[i]), a[i].label);
      if (a[i].label == Label::kYes) ++yes;
    }
    EXPECT_GT(yes, 50);
    EXPECT_LT(yes, 150);
  }
}
