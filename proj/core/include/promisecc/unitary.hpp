#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "promisecc/statevector.hpp"

namespace promisecc {

/// Unitarity tolerance checked whenever an operator is constructed.
inline constexpr double kUnitaryTolerance = 1e-12;

/// Unitary operator on C^d with structured representations for the operators
/// applied per input symbol, so that those cost O(d) instead of O(d^2).
class UnitaryOp {
 public:
  enum class Kind { kDense, kDiagonalPhase, kPairSwap, kRotationBlock };

  /// Throws InputError unless square and unitary within kUnitaryTolerance.
  static UnitaryOp dense(Eigen::MatrixXcd matrix);
  static UnitaryOp identity(std::size_t dimension);
  /// diag(signs); each entry must be +1 or -1.
  static UnitaryOp diagonal_phase(std::vector<std::int8_t> signs);
  /// Exchanges the amplitudes of each listed index pair. Pairs must be disjoint.
  static UnitaryOp pair_swap(std::size_t dimension,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs);
  /// Real orthogonal 2x2 block on indices {0, 1}, identity elsewhere.
  static UnitaryOp rotation_block(std::size_t dimension, const Eigen::Matrix2d& block);

  Kind kind() const;
  std::size_t dimension() const { return dimension_; }

  Eigen::MatrixXcd materialize() const;
  UnitaryOp adjoint() const;

  const Eigen::MatrixXcd& dense_matrix() const { return std::get<Eigen::MatrixXcd>(rep_); }
  const std::vector<std::int8_t>& signs() const { return std::get<std::vector<std::int8_t>>(rep_); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return std::get<std::vector<std::pair<std::size_t, std::size_t>>>(rep_);
  }
  const Eigen::Matrix2d& block() const { return std::get<Eigen::Matrix2d>(rep_); }

  /// M * psi, without materializing structured kinds.
  StateVector apply(const StateVector& psi) const;

 private:
  using Rep = std::variant<Eigen::MatrixXcd, std::vector<std::int8_t>,
                           std::vector<std::pair<std::size_t, std::size_t>>, Eigen::Matrix2d>;
  UnitaryOp(std::size_t dimension, Rep rep) : dimension_(dimension), rep_(std::move(rep)) {}

  std::size_t dimension_ = 0;
  Rep rep_;
};

std::string_view to_string(UnitaryOp::Kind kind);

/// Throws DimensionError on a size mismatch.
StateVector apply(const UnitaryOp& op, const StateVector& psi);

/// outer * inner, materialized densely.
UnitaryOp compose(const UnitaryOp& outer, const UnitaryOp& inner);

/// max |(M^dagger M - I)_ij|.
double unitarity_error(const Eigen::MatrixXcd& m);
double unitarity_error(const UnitaryOp& op);

/// A unitary with some columns (or rows) prescribed and the rest left free.
struct PartialUnitary {
  enum class Orientation { kColumns, kRows };

  std::size_t dimension = 0;
  Orientation orientation = Orientation::kColumns;
  /// (column or row index, prescribed vector).
  std::vector<std::pair<std::size_t, Eigen::VectorXcd>> fixed;
};

/// Fills the free slots, in increasing index order, with standard basis
/// vectors e_0, e_1, ... orthonormalized against everything placed so far;
/// a candidate whose residual norm falls below 1e-8 is skipped. Deterministic.
/// Throws InputError if the prescribed vectors are not orthonormal within 1e-10.
UnitaryOp complete_unitary(const PartialUnitary& partial);

/// Structured form for inspection; `with_matrix` adds the dense matrix as
/// rows of [re, im] pairs.
nlohmann::json to_json(const UnitaryOp& op, bool with_matrix = false);

}  // namespace promisecc
