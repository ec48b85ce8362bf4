#include "promisecc/operators.hpp"

#include <cmath>
#include <string>

#include "promisecc/errors.hpp"

namespace promisecc {
namespace {

void require_positive(int n) {
  if (n < 1) throw ParameterError("n must be positive (got " + std::to_string(n) + ")");
}

void require_position(int n, int position, int sigma) {
  require_positive(n);
  if (position < 1 || position > n) throw ParameterError("position out of range 1..n");
  if (sigma != 0 && sigma != 1) throw ParameterError("symbol must be 0 or 1");
}

}  // namespace

UnitaryOp build_uk(int n, int k) {
  require_positive(n);
  if (k < 1) throw ParameterError("k must be positive");
  if (2 * k < n) {
    throw ParameterError("U_k needs k >= n/2 (got n=" + std::to_string(n) + ", k=" +
                         std::to_string(k) + ")");
  }
  const double c = std::sqrt(static_cast<double>(2 * k - n) / (2.0 * k));
  const double s = std::sqrt(static_cast<double>(n) / (2.0 * k));
  Eigen::Matrix2d block;
  block << c, -s, s, c;
  return UnitaryOp::rotation_block(static_cast<std::size_t>(n) + 1, block);
}

UnitaryOp build_uh(int n) {
  require_positive(n);
  const auto d = static_cast<Eigen::Index>(n + 1);
  Eigen::VectorXcd first = Eigen::VectorXcd::Zero(d);
  first(0) = 1.0;
  Eigen::VectorXcd second = Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(n)));
  second(0) = 0.0;
  PartialUnitary partial;
  partial.dimension = static_cast<std::size_t>(d);
  partial.fixed = {{0, first}, {1, second}};
  return complete_unitary(partial);
}

UnitaryOp build_phase_oracle(const BitString& x) {
  std::vector<std::int8_t> signs(x.size() + 1, 1);
  for (std::size_t i = 0; i < x.size(); ++i) signs[i + 1] = x[i] ? -1 : 1;
  return UnitaryOp::diagonal_phase(std::move(signs));
}

UnitaryOp build_position_phase(int n, int position, int sigma) {
  require_position(n, position, sigma);
  std::vector<std::int8_t> signs(static_cast<std::size_t>(n) + 1, 1);
  if (sigma == 1) signs[static_cast<std::size_t>(position)] = -1;
  return UnitaryOp::diagonal_phase(std::move(signs));
}

std::size_t disj_basis_index(int n, int i, int j) {
  return static_cast<std::size_t>(n * j + i - 1);
}

UnitaryOp build_us(int n) {
  require_positive(n);
  const auto d = static_cast<Eigen::Index>(2 * n);
  Eigen::VectorXcd first = Eigen::VectorXcd::Zero(d);
  first.head(n).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  PartialUnitary partial;
  partial.dimension = static_cast<std::size_t>(d);
  partial.fixed = {{0, first}};
  return complete_unitary(partial);
}

UnitaryOp build_uf(int n) { return build_us(n).adjoint(); }

UnitaryOp build_swap_oracle(const BitString& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (int i = 1; i <= n; ++i) {
    if (x[static_cast<std::size_t>(i - 1)]) {
      pairs.emplace_back(disj_basis_index(n, i, 0), disj_basis_index(n, i, 1));
    }
  }
  return UnitaryOp::pair_swap(2 * x.size(), std::move(pairs));
}

UnitaryOp build_position_swap(int n, int position, int sigma) {
  require_position(n, position, sigma);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (sigma == 1) pairs.emplace_back(disj_basis_index(n, position, 0), disj_basis_index(n, position, 1));
  return UnitaryOp::pair_swap(static_cast<std::size_t>(2 * n), std::move(pairs));
}

UnitaryOp build_vy(const BitString& y) {
  const int n = static_cast<int>(y.size());
  std::vector<std::int8_t> signs(2 * y.size(), 1);
  for (int i = 1; i <= n; ++i) {
    if (y[static_cast<std::size_t>(i - 1)]) signs[disj_basis_index(n, i, 1)] = -1;
  }
  return UnitaryOp::diagonal_phase(std::move(signs));
}

UnitaryOp build_position_vphase(int n, int position, int sigma) {
  require_position(n, position, sigma);
  std::vector<std::int8_t> signs(static_cast<std::size_t>(2 * n), 1);
  if (sigma == 1) signs[disj_basis_index(n, position, 1)] = -1;
  return UnitaryOp::diagonal_phase(std::move(signs));
}

}  // namespace promisecc
