#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "promisecc/statevector.hpp"

namespace promisecc {

enum class Party { kAlice, kBob };
enum class MessageKind { kClassical, kQuantum };

std::string_view to_string(Party p);
std::string_view to_string(MessageKind k);

/// One message of a two-party protocol. Classical messages cost their payload
/// length in bits; a quantum message over d basis states costs ceil(log2 d)
/// qubits.
struct Message {
  Party from = Party::kAlice;
  MessageKind kind = MessageKind::kClassical;
  std::string label;
  /// Classical payload length. May exceed bits.size() when the content is
  /// only known symbolically (exact-mode runs of randomized protocols).
  std::size_t payload_bits = 0;
  std::vector<std::uint8_t> bits;
  std::optional<StateVector> state;

  static Message classical(Party from, std::string label, std::vector<std::uint8_t> bits);
  static Message classical_symbolic(Party from, std::string label, std::size_t payload_bits);
  static Message quantum(Party from, std::string label, StateVector state);

  Party to() const { return from == Party::kAlice ? Party::kBob : Party::kAlice; }
  int qubits() const;
  int classical_bits() const;
};

struct ProtocolTranscript {
  std::string protocol;
  std::vector<Message> messages;
  /// The output held by Bob at the end of the run. In exact mode this is the
  /// more likely output; in sampled mode it is the realized one.
  int output = 0;
  /// Pr[output = 1], evaluated exactly.
  double output_probability = 0.0;
  bool sampled = false;
  int repetitions = 1;

  int qubit_cost() const;
  int bit_cost() const;
  int total_cost() const { return qubit_cost() + bit_cost(); }
};

/// Per-message direction, kind, payload size and cumulative costs, plus the
/// output and probability. States are included when `with_states` is set.
nlohmann::json to_json(const ProtocolTranscript& t, bool with_states = false);
ProtocolTranscript transcript_from_json(const nlohmann::json& j);

}  // namespace promisecc
