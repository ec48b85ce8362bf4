#pragma once

#include <complex>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace promisecc {

using Complex = std::complex<double>;

/// Normalization tolerance for states handed in from outside.
inline constexpr double kStateNormTolerance = 1e-10;

/// Pure state over d computational basis states, unit norm.
class StateVector {
 public:
  /// |index> in dimension d.
  static StateVector basis(std::size_t dimension, std::size_t index);
  /// Throws InputError unless the squared norm is 1 within kStateNormTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t dimension() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  double norm_squared() const;

 private:
  friend class UnitaryOp;
  explicit StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

  std::vector<Complex> amplitudes_;
};

/// |<index|psi>|^2. Throws DimensionError if index >= d.
double measure_prob(const StateVector& psi, std::size_t index);

/// Squared norm of the projection onto the listed basis states.
double projection_prob(const StateVector& psi, std::span<const std::size_t> indices);

/// Amplitudes as an array of [re, im] pairs.
nlohmann::json to_json(const StateVector& psi);

}  // namespace promisecc
