#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "promisecc/errors.hpp"
#include "promisecc/operators.hpp"
#include "promisecc/rng.hpp"
#include "promisecc/statevector.hpp"
#include "promisecc/unitary.hpp"

using namespace promisecc;

namespace {

constexpr double kTol = 1e-12;
const double kHalf = std::sqrt(0.5);

StateVector random_state(std::size_t d, Rng& rng) {
  std::vector<Complex> a(d);
  double norm = 0.0;
  for (auto& z : a) {
    z = Complex(rng.unit() - 0.5, rng.unit() - 0.5);
    norm += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm);
  return StateVector::from_amplitudes(a);
}

BitString random_bits(int n, Rng& rng) { return BitString::from_mask(n, rng.below(std::uint64_t{1} << n)); }

}  // namespace

TEST(StateVector, BasisAndNorm) {
  const auto s = StateVector::basis(3, 1);
  EXPECT_EQ(s.dimension(), 3U);
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), InputError);
  EXPECT_THROW(StateVector::basis(2, 2), DimensionError);
}

TEST(MeasureProb, SpecExamples) {
  EXPECT_DOUBLE_EQ(measure_prob(StateVector::basis(2, 0), 0), 1.0);
  const auto plus = StateVector::from_amplitudes({kHalf, kHalf});
  EXPECT_NEAR(measure_prob(plus, 0), 0.5, kTol);
  EXPECT_THROW(measure_prob(plus, 2), DimensionError);
  const std::vector<std::size_t> both{0, 1};
  EXPECT_NEAR(projection_prob(plus, both), 1.0, kTol);
}

TEST(BuildUk, SpecExamples) {
  const auto u42 = build_uk(4, 2).materialize();
  EXPECT_NEAR(std::abs(u42(0, 0)), 0.0, kTol);
  EXPECT_NEAR(u42(0, 1).real(), -1.0, kTol);
  EXPECT_NEAR(u42(1, 0).real(), 1.0, kTol);
  const auto u22 = build_uk(2, 2).materialize();
  EXPECT_NEAR(u22(0, 0).real(), kHalf, kTol);
  EXPECT_NEAR(u22(0, 1).real(), -kHalf, kTol);
  EXPECT_NEAR(u22(1, 0).real(), kHalf, kTol);
  EXPECT_NEAR(u22(1, 1).real(), kHalf, kTol);
  EXPECT_THROW(build_uk(4, 1), ParameterError);

  const auto uk = build_uk(6, 4);
  const auto back = uk.adjoint().apply(uk.apply(StateVector::basis(7, 0)));
  EXPECT_NEAR(measure_prob(back, 0), 1.0, kTol);
}

TEST(CompleteUnitary, SpecExamples) {
  const auto uh = build_uh(2).materialize();
  EXPECT_NEAR(uh(0, 2).real(), 0.0, kTol);
  EXPECT_NEAR(uh(1, 2).real(), kHalf, kTol);
  EXPECT_NEAR(uh(2, 2).real(), -kHalf, kTol);

  const auto us = build_us(2);
  EXPECT_LE(unitarity_error(us), kTol);
  const auto m = us.materialize();
  EXPECT_NEAR(m(0, 0).real(), kHalf, kTol);
  EXPECT_NEAR(m(1, 0).real(), kHalf, kTol);
  EXPECT_NEAR(std::abs(m(2, 0)), 0.0, kTol);

  PartialUnitary full{3, PartialUnitary::Orientation::kColumns, {}};
  for (std::size_t i = 0; i < 3; ++i) full.fixed.emplace_back(i, Eigen::VectorXcd::Unit(3, static_cast<Eigen::Index>(i)));
  EXPECT_LE((complete_unitary(full).materialize() - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff(), kTol);

  PartialUnitary bad{2, PartialUnitary::Orientation::kColumns, {}};
  bad.fixed.emplace_back(0, Eigen::VectorXcd::Constant(2, 1.0));
  EXPECT_THROW(complete_unitary(bad), InputError);
}

TEST(CompleteUnitary, RowsAreHonored) {
  Eigen::VectorXcd row = Eigen::VectorXcd::Zero(4);
  row(0) = row(1) = row(2) = std::sqrt(1.0 / 3.0);
  PartialUnitary p{4, PartialUnitary::Orientation::kRows, {{0, row}}};
  const auto u = complete_unitary(p);
  EXPECT_LE(unitarity_error(u), kTol);
  const auto m = u.materialize();
  for (Eigen::Index j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(m(0, j) - row(j)), 0.0, kTol);
}

TEST(Apply, SpecExamples) {
  const auto psi = StateVector::from_amplitudes({0.0, kHalf, kHalf});
  const auto out = apply(build_phase_oracle(BitString::parse("10")), psi);
  EXPECT_NEAR(out[1].real(), -kHalf, kTol);
  EXPECT_NEAR(out[2].real(), kHalf, kTol);

  const auto abcd = StateVector::from_amplitudes({0.1, 0.3, std::sqrt(0.5), std::sqrt(0.4)});
  const auto swapped = apply(build_swap_oracle(BitString::parse("11")), abcd);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(swapped[i] - abcd[(i + 2) % 4]), 0.0, kTol);

  const auto same = apply(UnitaryOp::identity(4), abcd);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(same[i], abcd[i]);
  EXPECT_THROW(apply(UnitaryOp::identity(3), abcd), DimensionError);
}

TEST(UnitaryOp, RejectsNonUnitary) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = 0.5;
  EXPECT_THROW(UnitaryOp::dense(m), InputError);
  EXPECT_THROW(UnitaryOp::diagonal_phase({1, 2}), InputError);
  EXPECT_THROW(UnitaryOp::pair_swap(4, {{0, 1}, {1, 2}}), InputError);
}

// Property: structured apply agrees with the materialized matrix, preserves
// the norm, and adjoint undoes the operator.
TEST(UnitaryOp, StructuredApplyMatchesDenseProperty) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const int k = (n + 1) / 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - (n + 1) / 2 + 1)));
    const auto x = random_bits(n, rng);
    std::vector<UnitaryOp> ops{build_uk(n, k), build_uh(n), build_phase_oracle(x)};
    std::vector<UnitaryOp> dops{build_us(n), build_uf(n), build_swap_oracle(x), build_vy(x)};
    for (auto* set : {&ops, &dops}) {
      for (const auto& op : *set) {
        ASSERT_LE(unitarity_error(op), kTol);
        const auto psi = random_state(op.dimension(), rng);
        const auto fast = op.apply(psi);
        const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(psi.amplitudes().data(),
                                                                      static_cast<Eigen::Index>(psi.dimension()));
        const Eigen::VectorXcd slow = op.materialize() * v;
        for (std::size_t i = 0; i < psi.dimension(); ++i)
          ASSERT_NEAR(std::abs(fast[i] - slow(static_cast<Eigen::Index>(i))), 0.0, 1e-12);
        ASSERT_NEAR(fast.norm_squared(), 1.0, 1e-12);
        const auto back = op.adjoint().apply(fast);
        for (std::size_t i = 0; i < psi.dimension(); ++i) ASSERT_NEAR(std::abs(back[i] - psi[i]), 0.0, 1e-12);
      }
    }
  }
}

TEST(Operators, DisjConstructionShape) {
  EXPECT_EQ(disj_basis_index(4, 1, 0), 0U);
  EXPECT_EQ(disj_basis_index(4, 4, 0), 3U);
  EXPECT_EQ(disj_basis_index(4, 1, 1), 4U);
  const auto uf = build_uf(4).materialize();
  const auto us = build_us(4).materialize();
  EXPECT_LE((uf - us.adjoint()).cwiseAbs().maxCoeff(), kTol);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(uf(0, j).real(), 0.5, kTol);

  // Per-position operators compose to the whole-word oracles.
  const auto x = BitString::parse("1011");
  auto psi = StateVector::basis(8, 0);
  psi = build_us(4).apply(psi);
  auto a = build_swap_oracle(x).apply(psi);
  auto b = psi;
  for (int i = 1; i <= 4; ++i) b = build_position_swap(4, i, x[static_cast<std::size_t>(i - 1)]).apply(b);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, kTol);
}

TEST(Compose, MatchesSequentialApply) {
  const auto c = compose(build_uh(3), build_uk(3, 2));
  const auto s = StateVector::basis(4, 0);
  const auto a = c.apply(s);
  const auto b = build_uh(3).apply(build_uk(3, 2).apply(s));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, kTol);
}

TEST(Json, StateAndOperator) {
  const auto j = to_json(StateVector::basis(2, 1));
  ASSERT_EQ(j.size(), 2U);
  EXPECT_DOUBLE_EQ(j[1][0].get<double>(), 1.0);
  const auto o = to_json(build_phase_oracle(BitString::parse("01")), true);
  EXPECT_TRUE(o.contains("kind"));
  EXPECT_TRUE(o.contains("matrix"));
}
