#include "promisecc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "promisecc/errors.hpp"
#include "promisecc/operators.hpp"
#include "promisecc/promise.hpp"

namespace promisecc {
namespace {

// Guards ceil() against log-ratio round-off at exact integers.
constexpr double kCeilSlack = 1e-9;

void require_same_length(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw DimensionError("bitstring length mismatch: " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
}

void require_lambda(Rational lambda) {
  if (!(lambda > 0) || lambda > Rational(1, 4)) {
    throw ParameterError("lambda must satisfy 0 < lambda <= 1/4 (got " + lambda.to_string() + ")");
  }
}

int rounds_for(double epsilon, double per_round_survival) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
  const double r = std::log2(epsilon) / std::log2(per_round_survival);
  return std::max(1, static_cast<int>(std::ceil(r - kCeilSlack)));
}

std::vector<std::uint8_t> encode_position(std::size_t position, int width) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(width));
  for (int b = 0; b < width; ++b) bits[static_cast<std::size_t>(b)] = (position >> (width - 1 - b)) & 1U;
  return bits;
}

void require_promise(const PromiseParams& params, const BitString& x, const BitString& y) {
  if (classify(params, x, y) == Label::kOffPromise) {
    throw PromiseViolation(std::string(to_string(params.family)) + " promise violated by x=" +
                           x.to_string() + ", y=" + y.to_string());
  }
}

}  // namespace

RepetitionPolicy RepetitionPolicy::quantum(Rational lambda, double epsilon) {
  require_lambda(lambda);
  RepetitionPolicy p;
  p.lambda = lambda;
  p.epsilon = epsilon;
  p.repetitions = rounds_for(epsilon, 1.0 - 3.0 * lambda.to_double());
  return p;
}

RepetitionPolicy RepetitionPolicy::probabilistic(Rational lambda, double epsilon) {
  require_lambda(lambda);
  RepetitionPolicy p;
  p.lambda = lambda;
  p.epsilon = epsilon;
  p.repetitions = rounds_for(epsilon, 1.0 - lambda.to_double());
  return p;
}

RepetitionPolicy RepetitionPolicy::fixed(Rational lambda, int repetitions) {
  require_lambda(lambda);
  if (repetitions < 1) throw ParameterError("repetitions must be positive");
  RepetitionPolicy p;
  p.lambda = lambda;
  p.repetitions = repetitions;
  return p;
}

// ---------------------------------------------------------------------------

double eqk_accept_prob_closed_form(int n, int k, int distance) {
  if (n < 1 || k < 1 || 2 * k < n) throw ParameterError("closed form needs n >= 1, k >= n/2");
  if (distance < 0 || distance > n) throw ParameterError("distance must lie in [0, n]");
  const double a = static_cast<double>(k - distance) / k;
  return a * a;
}

EqkQuantumProtocol::EqkQuantumProtocol(int n, int k)
    : n_(n), k_(k), uk_(build_uk(n, k)), uh_(build_uh(n)) {}

ProtocolTranscript EqkQuantumProtocol::simulate(const BitString& x, const BitString& y) const {
  require_same_length(x, y);
  if (static_cast<int>(x.size()) != n_) throw DimensionError("input length differs from protocol n");
  ProtocolTranscript t;
  t.protocol = "eqk-quantum";

  // Alice: |0> -> U_x U_h U_k |0>.
  StateVector psi = StateVector::basis(static_cast<std::size_t>(n_) + 1, 0);
  psi = uk_.apply(psi);
  psi = uh_.apply(psi);
  psi = build_phase_oracle(x).apply(psi);
  t.messages.push_back(Message::quantum(Party::kAlice, "psi4", psi));

  // Bob: U_y, then U_k^-1 U_h^-1, measure.
  psi = build_phase_oracle(y).apply(psi);
  psi = uh_.adjoint().apply(psi);
  psi = uk_.adjoint().apply(psi);
  t.output_probability = measure_prob(psi, 0);
  t.output = t.output_probability >= 0.5 ? 1 : 0;
  return t;
}

ProtocolTranscript EqkQuantumProtocol::run(const BitString& x, const BitString& y) const {
  return simulate(x, y);
}

ProtocolTranscript EqkQuantumProtocol::run(const BitString& x, const BitString& y, Rng& rng) const {
  ProtocolTranscript t = simulate(x, y);
  t.sampled = true;
  t.output = rng.bernoulli(t.output_probability) ? 1 : 0;
  return t;
}

ProtocolTranscript run_eqk_quantum(const BitString& x, const BitString& y, int k) {
  require_same_length(x, y);
  return EqkQuantumProtocol(static_cast<int>(x.size()), k).run(x, y);
}

// ---------------------------------------------------------------------------

double disj_accept_prob_closed_form(int n, int m) {
  if (n < 1 || m < 0 || m > n) throw ParameterError("closed form needs n >= 1, 0 <= m <= n");
  const double a = static_cast<double>(n - 2 * m) / n;
  return a * a;
}

DisjQuantumProtocol::DisjQuantumProtocol(int n) : n_(n), us_(build_us(n)), uf_(build_uf(n)) {}

double DisjQuantumProtocol::round(const BitString& x, const BitString& y, ProtocolTranscript& t,
                                  Rng* rng, int& round_output) const {
  const UnitaryOp ux = build_swap_oracle(x);

  StateVector psi = StateVector::basis(2 * static_cast<std::size_t>(n_), 0);
  psi = us_.apply(psi);
  psi = ux.apply(psi);
  t.messages.push_back(Message::quantum(Party::kAlice, "psi1", psi));

  psi = build_vy(y).apply(psi);
  t.messages.push_back(Message::quantum(Party::kBob, "psi2", psi));

  psi = ux.apply(psi);
  psi = uf_.apply(psi);
  const double p = measure_prob(psi, disj_basis_index(n_, 1, 0));
  round_output = rng ? (rng->bernoulli(p) ? 1 : 0) : (p >= 0.5 ? 1 : 0);
  t.messages.push_back(
      Message::classical(Party::kAlice, "result", {static_cast<std::uint8_t>(round_output)}));
  return p;
}

ProtocolTranscript DisjQuantumProtocol::run_once(const BitString& x, const BitString& y) const {
  return run(x, y, RepetitionPolicy::fixed(Rational(1, 4), 1));
}

ProtocolTranscript DisjQuantumProtocol::run_once(const BitString& x, const BitString& y,
                                                 Rng& rng) const {
  return run(x, y, RepetitionPolicy::fixed(Rational(1, 4), 1), rng);
}

ProtocolTranscript DisjQuantumProtocol::run(const BitString& x, const BitString& y,
                                            const RepetitionPolicy& policy) const {
  require_same_length(x, y);
  if (static_cast<int>(x.size()) != n_) throw DimensionError("input length differs from protocol n");
  ProtocolTranscript t;
  t.protocol = policy.repetitions == 1 ? "disj-quantum" : "disj-quantum-repeated";
  t.repetitions = policy.repetitions;
  // Rounds are identical in exact mode, so Pr[all accept] = p^r.
  int round_output = 0;
  double p = 1.0;
  for (int r = 0; r < policy.repetitions; ++r) p = round(x, y, t, nullptr, round_output);
  t.output_probability = std::pow(p, policy.repetitions);
  t.output = t.output_probability >= 0.5 ? 1 : 0;
  return t;
}

ProtocolTranscript DisjQuantumProtocol::run(const BitString& x, const BitString& y,
                                            const RepetitionPolicy& policy, Rng& rng) const {
  require_same_length(x, y);
  if (static_cast<int>(x.size()) != n_) throw DimensionError("input length differs from protocol n");
  ProtocolTranscript t;
  t.protocol = policy.repetitions == 1 ? "disj-quantum" : "disj-quantum-repeated";
  t.repetitions = policy.repetitions;
  t.sampled = true;
  int all = 1;
  double p = 1.0;
  for (int r = 0; r < policy.repetitions; ++r) {
    int round_output = 0;
    p = round(x, y, t, &rng, round_output);
    all &= round_output;
  }
  t.output_probability = std::pow(p, policy.repetitions);
  t.output = all;
  return t;
}

ProtocolTranscript run_disj_quantum_once(const BitString& x, const BitString& y) {
  require_same_length(x, y);
  return DisjQuantumProtocol(static_cast<int>(x.size())).run_once(x, y);
}

ProtocolTranscript run_disj_quantum(const BitString& x, const BitString& y,
                                    const RepetitionPolicy& policy) {
  require_same_length(x, y);
  return DisjQuantumProtocol(static_cast<int>(x.size())).run(x, y, policy);
}

// ---------------------------------------------------------------------------

double disj_prob_exact_error(int weight_x, int and_weight, int sample_size) {
  if (weight_x < 0 || and_weight < 0 || and_weight > weight_x || sample_size < 1) {
    throw ParameterError("need 0 <= m <= W and sample size >= 1");
  }
  const int s = std::min(sample_size, weight_x);
  if (weight_x - and_weight < s) return 0.0;
  // C(W-m, s) / C(W, s) = prod_{i<s} (W-m-i) / (W-i)
  double p = 1.0;
  for (int i = 0; i < s; ++i) {
    p *= static_cast<double>(weight_x - and_weight - i) / static_cast<double>(weight_x - i);
  }
  return p;
}

namespace {

ProtocolTranscript disj_probabilistic_impl(const BitString& x, const BitString& y,
                                           const RepetitionPolicy& policy, Rng* rng) {
  require_same_length(x, y);
  require_lambda(policy.lambda);
  const int n = static_cast<int>(x.size());
  const int width = ceil_log2(static_cast<std::uint64_t>(n));
  const auto stats = hamming_stats(x, y);

  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) ones.push_back(i);
  }
  const bool full_list = stats.weight_x < policy.repetitions;
  const auto sent = static_cast<std::size_t>(std::min(policy.repetitions, stats.weight_x));

  ProtocolTranscript t;
  t.protocol = "disj-probabilistic";
  t.repetitions = policy.repetitions;
  t.output_probability = disj_prob_exact_error(stats.weight_x, stats.and_weight, policy.repetitions);

  const std::size_t payload = 1 + sent * static_cast<std::size_t>(width);
  if (!rng) {
    t.messages.push_back(Message::classical_symbolic(Party::kAlice, "positions", payload));
    t.output = t.output_probability >= 0.5 ? 1 : 0;
    return t;
  }

  t.sampled = true;
  // Partial Fisher-Yates over Alice's one-positions.
  for (std::size_t i = 0; i < sent; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng->below(ones.size() - i));
    std::swap(ones[i], ones[j]);
  }
  std::vector<std::uint8_t> bits{static_cast<std::uint8_t>(full_list ? 1 : 0)};
  bool hit = false;
  for (std::size_t i = 0; i < sent; ++i) {
    const auto enc = encode_position(ones[i], width);
    bits.insert(bits.end(), enc.begin(), enc.end());
    hit = hit || y[ones[i]] == 1;
  }
  t.messages.push_back(Message::classical(Party::kAlice, "positions", std::move(bits)));
  t.output = hit ? 0 : 1;
  return t;
}

}  // namespace

ProtocolTranscript run_disj_probabilistic(const BitString& x, const BitString& y,
                                          const RepetitionPolicy& policy) {
  return disj_probabilistic_impl(x, y, policy, nullptr);
}

ProtocolTranscript run_disj_probabilistic(const BitString& x, const BitString& y,
                                          const RepetitionPolicy& policy, Rng& rng) {
  return disj_probabilistic_impl(x, y, policy, &rng);
}

// ---------------------------------------------------------------------------

ProtocolTranscript run_eqk_deterministic(const BitString& x, const BitString& y, int k) {
  require_same_length(x, y);
  const int n = static_cast<int>(x.size());
  require_promise(PromiseParams::eqk(n, k), x, y);

  ProtocolTranscript t;
  if (k % 2 == 1) {
    t.protocol = "eqk-parity";
    // "1" when W(x) is even.
    const std::uint8_t sent = x.weight() % 2 == 0 ? 1 : 0;
    t.messages.push_back(Message::classical(Party::kAlice, "parity", {sent}));
    const std::uint8_t mine = y.weight() % 2 == 0 ? 1 : 0;
    t.output = sent == mine ? 1 : 0;
  } else {
    t.protocol = "eqk-prefix";
    const auto len = static_cast<std::size_t>(n - k + 1);
    std::vector<std::uint8_t> prefix(x.bits().begin(), x.bits().begin() + static_cast<std::ptrdiff_t>(len));
    t.output = std::equal(prefix.begin(), prefix.end(), y.bits().begin()) ? 1 : 0;
    t.messages.push_back(Message::classical(Party::kAlice, "prefix", std::move(prefix)));
  }
  t.output_probability = t.output;
  return t;
}

ProtocolTranscript run_disj_prime_deterministic(const BitString& x, const BitString& y, int k) {
  require_same_length(x, y);
  const int n = static_cast<int>(x.size());
  require_promise(PromiseParams::disj_prime(n, k), x, y);

  const int wx = x.weight();
  const int wy = y.weight();
  ProtocolTranscript t;
  if (2 * k > n) {
    t.protocol = "disjp-weight";
    const std::uint8_t alice = wx < k ? 1 : 0;
    t.messages.push_back(Message::classical(Party::kAlice, "result-or-continue", {alice}));
    t.output = alice == 1 ? 1 : (wy < k ? 1 : 0);
  } else {
    t.protocol = "disjp-weight-first-bit";
    const int half = n / 2;
    if (wx < half) {
      t.messages.push_back(Message::classical(Party::kAlice, "result-or-continue", {1}));
      t.output = 1;
    } else if (wx == half) {
      t.messages.push_back(Message::classical(Party::kAlice, "continue-with-x1", {0, x[0]}));
      if (wy < half) {
        t.output = 1;
      } else if (wy == half) {
        t.output = y[0] == x[0] ? 0 : 1;
      } else {
        t.output = 0;
      }
    } else {
      t.messages.push_back(Message::classical(Party::kAlice, "result-or-continue", {0}));
      t.output = wy < half ? 1 : 0;
    }
  }
  t.output_probability = t.output;
  return t;
}

// ---------------------------------------------------------------------------

SampleTally sample_outputs(const std::function<ProtocolTranscript(Rng&)>& shot, std::uint64_t shots,
                           std::uint64_t seed) {
  SampleTally tally;
  tally.shots = shots;
  for (std::uint64_t j = 0; j < shots; ++j) {
    Rng rng(seed, j);
    tally.ones += static_cast<std::uint64_t>(shot(rng).output);
  }
  return tally;
}

}  // namespace promisecc
