#include "promisecc/unitary.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "promisecc/errors.hpp"

namespace promisecc {
namespace {

constexpr double kPrescribedTolerance = 1e-10;
constexpr double kResidualFloor = 1e-8;

using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

Eigen::VectorXcd basis_vector(std::size_t d, std::size_t i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

// Completes a set of prescribed orthonormal columns.
Eigen::MatrixXcd complete_columns(std::size_t d,
                                  const std::vector<std::pair<std::size_t, Eigen::VectorXcd>>& fixed) {
  const auto dim = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<bool> taken(d, false);
  std::vector<Eigen::VectorXcd> placed;

  for (const auto& [index, column] : fixed) {
    if (index >= d) throw DimensionError("prescribed index out of range");
    if (taken[index]) throw InputError("index " + std::to_string(index) + " prescribed twice");
    if (column.size() != dim) throw DimensionError("prescribed vector has wrong length");
    taken[index] = true;
    m.col(static_cast<Eigen::Index>(index)) = column;
    placed.push_back(column);
  }
  for (std::size_t a = 0; a < placed.size(); ++a) {
    for (std::size_t b = a; b < placed.size(); ++b) {
      const Complex ip = placed[a].dot(placed[b]);
      const Complex want = a == b ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(ip - want) > kPrescribedTolerance) {
        throw InputError("prescribed vectors are not orthonormal");
      }
    }
  }

  std::size_t slot = 0;
  auto next_free = [&] {
    while (slot < d && taken[slot]) ++slot;
    return slot;
  };
  for (std::size_t e = 0; e < d && next_free() < d; ++e) {
    Eigen::VectorXcd v = basis_vector(d, e);
    // Two Gram-Schmidt sweeps against everything placed so far.
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& u : placed) v -= u * u.dot(v);
    }
    const double residual = v.norm();
    if (residual < kResidualFloor) continue;
    v /= residual;
    m.col(static_cast<Eigen::Index>(slot)) = v;
    taken[slot] = true;
    placed.push_back(std::move(v));
  }
  if (next_free() < d) throw InputError("unitary completion ran out of basis vectors");
  return m;
}

}  // namespace

std::string_view to_string(UnitaryOp::Kind kind) {
  switch (kind) {
    case UnitaryOp::Kind::kDense: return "DENSE";
    case UnitaryOp::Kind::kDiagonalPhase: return "DIAGONAL_PHASE";
    case UnitaryOp::Kind::kPairSwap: return "PAIR_SWAP";
    case UnitaryOp::Kind::kRotationBlock: return "ROTATION_BLOCK";
  }
  return "?";
}

UnitaryOp UnitaryOp::dense(Eigen::MatrixXcd matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw DimensionError("unitary must be a non-empty square matrix");
  }
  const double err = unitarity_error(matrix);
  if (err > kUnitaryTolerance) {
    throw InputError("matrix is not unitary (max |M^dag M - I| = " + std::to_string(err) + ")");
  }
  const auto d = static_cast<std::size_t>(matrix.rows());
  return UnitaryOp(d, std::move(matrix));
}

UnitaryOp UnitaryOp::identity(std::size_t dimension) {
  if (dimension == 0) throw DimensionError("dimension must be positive");
  return UnitaryOp(dimension, std::vector<std::int8_t>(dimension, 1));
}

UnitaryOp UnitaryOp::diagonal_phase(std::vector<std::int8_t> signs) {
  if (signs.empty()) throw DimensionError("dimension must be positive");
  for (auto s : signs) {
    if (s != 1 && s != -1) throw InputError("phase signs must be +1 or -1");
  }
  const auto d = signs.size();
  return UnitaryOp(d, std::move(signs));
}

UnitaryOp UnitaryOp::pair_swap(std::size_t dimension, IndexPairs pairs) {
  if (dimension == 0) throw DimensionError("dimension must be positive");
  std::vector<bool> used(dimension, false);
  for (const auto& [a, b] : pairs) {
    if (a >= dimension || b >= dimension) throw DimensionError("swap index out of range");
    if (a == b || used[a] || used[b]) throw InputError("swap pairs must be disjoint");
    used[a] = used[b] = true;
  }
  return UnitaryOp(dimension, std::move(pairs));
}

UnitaryOp UnitaryOp::rotation_block(std::size_t dimension, const Eigen::Matrix2d& block) {
  if (dimension < 2) throw DimensionError("rotation block needs dimension >= 2");
  const double err = (block.transpose() * block - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
  if (err > kUnitaryTolerance) throw InputError("rotation block is not orthogonal");
  return UnitaryOp(dimension, block);
}

UnitaryOp::Kind UnitaryOp::kind() const { return static_cast<Kind>(rep_.index()); }

Eigen::MatrixXcd UnitaryOp::materialize() const {
  const auto d = static_cast<Eigen::Index>(dimension_);
  switch (kind()) {
    case Kind::kDense:
      return dense_matrix();
    case Kind::kDiagonalPhase: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      for (Eigen::Index i = 0; i < d; ++i) m(i, i) = static_cast<double>(signs()[static_cast<std::size_t>(i)]);
      return m;
    }
    case Kind::kPairSwap: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
      for (const auto& [a, b] : pairs()) {
        const auto ia = static_cast<Eigen::Index>(a);
        const auto ib = static_cast<Eigen::Index>(b);
        m(ia, ia) = m(ib, ib) = 0.0;
        m(ia, ib) = m(ib, ia) = 1.0;
      }
      return m;
    }
    case Kind::kRotationBlock: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
      m.topLeftCorner(2, 2) = block().cast<Complex>();
      return m;
    }
  }
  return {};
}

UnitaryOp UnitaryOp::adjoint() const {
  switch (kind()) {
    case Kind::kDense:
      return UnitaryOp(dimension_, Eigen::MatrixXcd(dense_matrix().adjoint()));
    case Kind::kDiagonalPhase:
    case Kind::kPairSwap:
      return *this;  // involutions
    case Kind::kRotationBlock:
      return UnitaryOp(dimension_, Eigen::Matrix2d(block().transpose()));
  }
  return *this;
}

StateVector UnitaryOp::apply(const StateVector& psi) const {
  if (psi.dimension() != dimension_) {
    throw DimensionError("operator dimension " + std::to_string(dimension_) +
                         " != state dimension " + std::to_string(psi.dimension()));
  }
  std::vector<Complex> out(psi.amplitudes().begin(), psi.amplitudes().end());
  switch (kind()) {
    case Kind::kDense: {
      const auto& m = dense_matrix();
      for (std::size_t r = 0; r < dimension_; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dimension_; ++c) {
          acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * psi[c];
        }
        out[r] = acc;
      }
      break;
    }
    case Kind::kDiagonalPhase:
      for (std::size_t i = 0; i < dimension_; ++i) {
        if (signs()[i] < 0) out[i] = -out[i];
      }
      break;
    case Kind::kPairSwap:
      for (const auto& [a, b] : pairs()) std::swap(out[a], out[b]);
      break;
    case Kind::kRotationBlock: {
      const auto& b = block();
      out[0] = b(0, 0) * psi[0] + b(0, 1) * psi[1];
      out[1] = b(1, 0) * psi[0] + b(1, 1) * psi[1];
      break;
    }
  }
  return StateVector(std::move(out));
}

StateVector apply(const UnitaryOp& op, const StateVector& psi) { return op.apply(psi); }

UnitaryOp compose(const UnitaryOp& outer, const UnitaryOp& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw DimensionError("cannot compose operators of different dimension");
  }
  return UnitaryOp::dense(outer.materialize() * inner.materialize());
}

double unitarity_error(const Eigen::MatrixXcd& m) {
  const auto d = m.cols();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

double unitarity_error(const UnitaryOp& op) { return unitarity_error(op.materialize()); }

UnitaryOp complete_unitary(const PartialUnitary& partial) {
  if (partial.dimension == 0) throw DimensionError("dimension must be positive");
  if (partial.orientation == PartialUnitary::Orientation::kColumns) {
    return UnitaryOp::dense(complete_columns(partial.dimension, partial.fixed));
  }
  // Row r of U is the conjugate of column r of U^dagger.
  std::vector<std::pair<std::size_t, Eigen::VectorXcd>> as_columns;
  as_columns.reserve(partial.fixed.size());
  for (const auto& [index, row] : partial.fixed) as_columns.emplace_back(index, row.conjugate());
  return UnitaryOp::dense(complete_columns(partial.dimension, as_columns).adjoint());
}

nlohmann::json to_json(const UnitaryOp& op, bool with_matrix) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(op.kind()));
  j["dimension"] = op.dimension();
  switch (op.kind()) {
    case UnitaryOp::Kind::kDense:
      with_matrix = true;
      break;
    case UnitaryOp::Kind::kDiagonalPhase:
      j["signs"] = op.signs();
      break;
    case UnitaryOp::Kind::kPairSwap: {
      auto pairs = nlohmann::json::array();
      for (const auto& [a, b] : op.pairs()) pairs.push_back({a, b});
      j["pairs"] = pairs;
      break;
    }
    case UnitaryOp::Kind::kRotationBlock: {
      const auto& b = op.block();
      j["block"] = {{b(0, 0), b(0, 1)}, {b(1, 0), b(1, 1)}};
      break;
    }
  }
  if (with_matrix) {
    const auto m = op.materialize();
    auto rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      auto row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

}  // namespace promisecc
