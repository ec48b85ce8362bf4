#include "promisecc/statevector.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "promisecc/errors.hpp"

namespace promisecc {

StateVector StateVector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) {
    throw DimensionError("basis index " + std::to_string(index) + " out of range for d=" +
                         std::to_string(dimension));
  }
  std::vector<Complex> amps(dimension, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  StateVector psi(std::move(amplitudes));
  if (psi.dimension() == 0) throw InputError("state vector must have positive dimension");
  const double norm = psi.norm_squared();
  if (std::abs(norm - 1.0) > kStateNormTolerance) {
    throw InputError("state vector is not normalized (squared norm " + std::to_string(norm) + ")");
  }
  return psi;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

double measure_prob(const StateVector& psi, std::size_t index) {
  if (index >= psi.dimension()) {
    throw DimensionError("outcome index " + std::to_string(index) + " out of range for d=" +
                         std::to_string(psi.dimension()));
  }
  return std::norm(psi[index]);
}

double projection_prob(const StateVector& psi, std::span<const std::size_t> indices) {
  double total = 0.0;
  for (auto i : indices) total += measure_prob(psi, i);
  return total;
}

nlohmann::json to_json(const StateVector& psi) {
  auto out = nlohmann::json::array();
  for (const auto& a : psi.amplitudes()) out.push_back({a.real(), a.imag()});
  return out;
}

}  // namespace promisecc
