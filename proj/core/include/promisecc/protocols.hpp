#pragma once

#include <cstdint>
#include <functional>

#include "promisecc/bitstring.hpp"
#include "promisecc/rational.hpp"
#include "promisecc/rng.hpp"
#include "promisecc/transcript.hpp"
#include "promisecc/unitary.hpp"

namespace promisecc {

/// How many times a one-sided-error round is repeated (quantum protocol) or
/// how many one-positions are sampled (probabilistic protocol).
struct RepetitionPolicy {
  Rational lambda{1, 4};
  double epsilon = 1.0 / 3.0;
  int repetitions = 1;

  /// max(1, ceil(log eps / log(1 - 3 lambda))).
  static RepetitionPolicy quantum(Rational lambda, double epsilon = 1.0 / 3.0);
  /// max(1, ceil(log eps / log(1 - lambda))).
  static RepetitionPolicy probabilistic(Rational lambda, double epsilon = 1.0 / 3.0);
  /// Explicit count, e.g. the five samples used for lambda = 1/4.
  static RepetitionPolicy fixed(Rational lambda, int repetitions);
};

// ---------------------------------------------------------------------------
// Quantum equality protocol with promise H(x, y) in {0, k}.

/// ((k - H) / k)^2: Pr[accept] for any pair at Hamming distance H.
double eqk_accept_prob_closed_form(int n, int k, int distance);

/// Alice prepares U_x U_h U_k |0> on n+1 basis states and sends it; Bob
/// applies U_y, then U_k^-1 U_h^-1, and outputs 1 iff he measures |0>.
/// Off-promise pairs are simulated too.
class EqkQuantumProtocol {
 public:
  EqkQuantumProtocol(int n, int k);

  ProtocolTranscript run(const BitString& x, const BitString& y) const;
  /// Same, with Bob's measurement sampled from `rng`.
  ProtocolTranscript run(const BitString& x, const BitString& y, Rng& rng) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  ProtocolTranscript simulate(const BitString& x, const BitString& y) const;

  int n_;
  int k_;
  UnitaryOp uk_;
  UnitaryOp uh_;
};

ProtocolTranscript run_eqk_quantum(const BitString& x, const BitString& y, int k);

// ---------------------------------------------------------------------------
// Quantum disjointness protocol for DISJ_lambda.

/// ((n - 2m) / n)^2: Pr[measure |1,0>] in one round when |x AND y| = m.
double disj_accept_prob_closed_form(int n, int m);

/// One round over 2n basis states: Alice sends U_x U_s |1,0>, Bob applies V_y
/// and returns it, Alice applies U_x then U_f, measures, and tells Bob whether
/// she saw |1,0>.
class DisjQuantumProtocol {
 public:
  explicit DisjQuantumProtocol(int n);

  ProtocolTranscript run_once(const BitString& x, const BitString& y) const;
  ProtocolTranscript run_once(const BitString& x, const BitString& y, Rng& rng) const;
  /// Outputs 1 iff every round measures |1,0>.
  ProtocolTranscript run(const BitString& x, const BitString& y, const RepetitionPolicy& policy) const;
  ProtocolTranscript run(const BitString& x, const BitString& y, const RepetitionPolicy& policy,
                         Rng& rng) const;

  int n() const { return n_; }

 private:
  // Appends one round's messages; returns Pr[|1,0>].
  double round(const BitString& x, const BitString& y, ProtocolTranscript& t, Rng* rng,
               int& round_output) const;

  int n_;
  UnitaryOp us_;
  UnitaryOp uf_;
};

ProtocolTranscript run_disj_quantum_once(const BitString& x, const BitString& y);
ProtocolTranscript run_disj_quantum(const BitString& x, const BitString& y,
                                    const RepetitionPolicy& policy);

// ---------------------------------------------------------------------------
// Probabilistic disjointness protocol.

/// Pr[Bob outputs 1] when Alice samples s one-positions without replacement
/// out of W, m of which Bob also holds: C(W-m, s') / C(W, s') with
/// s' = min(s, W), and 0 when W - m < s'.
double disj_prob_exact_error(int weight_x, int and_weight, int sample_size);

/// Alice sends a 1-bit flag and min(s, W(x)) of her one-positions
/// (ceil(log2 n) bits each): all of them when W(x) < s, else s drawn without
/// replacement. Bob outputs 0 iff one of the received positions is 1 in y.
/// The exact overload reports the hypergeometric probability with a symbolic
/// payload; the sampled overload draws concrete positions.
ProtocolTranscript run_disj_probabilistic(const BitString& x, const BitString& y,
                                          const RepetitionPolicy& policy);
ProtocolTranscript run_disj_probabilistic(const BitString& x, const BitString& y,
                                          const RepetitionPolicy& policy, Rng& rng);

// ---------------------------------------------------------------------------
// Deterministic protocols. Each throws PromiseViolation off its promise.

/// Odd k: Alice sends the parity of W(x); Bob outputs 1 iff W(y) has the same
/// parity. Even k: Alice sends x_1..x_{n-k+1}; Bob outputs 1 iff they equal
/// his own prefix.
ProtocolTranscript run_eqk_deterministic(const BitString& x, const BitString& y, int k);

/// Promise |x AND y| in {0, k}, k >= n/2. Alice announces whether W(x) < k
/// (plus x_1 when 2k = n and W(x) = n/2); Bob finishes from W(y) and y_1.
ProtocolTranscript run_disj_prime_deterministic(const BitString& x, const BitString& y, int k);

// ---------------------------------------------------------------------------

struct SampleTally {
  std::uint64_t shots = 0;
  std::uint64_t ones = 0;

  double frequency() const { return shots ? static_cast<double>(ones) / static_cast<double>(shots) : 0.0; }
};

/// Runs `shot` once per shot with Rng(seed, shot_index) and counts outputs of 1.
SampleTally sample_outputs(const std::function<ProtocolTranscript(Rng&)>& shot,
                           std::uint64_t shots, std::uint64_t seed);

}  // namespace promisecc
