#include "promisecc/transcript.hpp"

#include <nlohmann/json.hpp>

#include "promisecc/bitstring.hpp"
#include "promisecc/errors.hpp"

namespace promisecc {

std::string_view to_string(Party p) { return p == Party::kAlice ? "alice" : "bob"; }

std::string_view to_string(MessageKind k) {
  return k == MessageKind::kClassical ? "classical" : "quantum";
}

Message Message::classical(Party from, std::string label, std::vector<std::uint8_t> bits) {
  Message m;
  m.from = from;
  m.kind = MessageKind::kClassical;
  m.label = std::move(label);
  m.payload_bits = bits.size();
  m.bits = std::move(bits);
  return m;
}

Message Message::classical_symbolic(Party from, std::string label, std::size_t payload_bits) {
  Message m;
  m.from = from;
  m.kind = MessageKind::kClassical;
  m.label = std::move(label);
  m.payload_bits = payload_bits;
  return m;
}

Message Message::quantum(Party from, std::string label, StateVector state) {
  Message m;
  m.from = from;
  m.kind = MessageKind::kQuantum;
  m.label = std::move(label);
  m.state = std::move(state);
  return m;
}

int Message::qubits() const {
  if (kind != MessageKind::kQuantum || !state) return 0;
  return ceil_log2(state->dimension());
}

int Message::classical_bits() const {
  return kind == MessageKind::kClassical ? static_cast<int>(payload_bits) : 0;
}

int ProtocolTranscript::qubit_cost() const {
  int total = 0;
  for (const auto& m : messages) total += m.qubits();
  return total;
}

int ProtocolTranscript::bit_cost() const {
  int total = 0;
  for (const auto& m : messages) total += m.classical_bits();
  return total;
}

nlohmann::json to_json(const ProtocolTranscript& t, bool with_states) {
  nlohmann::json j;
  j["protocol"] = t.protocol;
  j["repetitions"] = t.repetitions;
  j["sampled"] = t.sampled;
  auto messages = nlohmann::json::array();
  int qubits = 0;
  int bits = 0;
  for (const auto& m : t.messages) {
    qubits += m.qubits();
    bits += m.classical_bits();
    nlohmann::json jm;
    jm["from"] = std::string(to_string(m.from));
    jm["to"] = std::string(to_string(m.to()));
    jm["kind"] = std::string(to_string(m.kind));
    jm["label"] = m.label;
    if (m.kind == MessageKind::kClassical) {
      jm["payload_bits"] = m.payload_bits;
      if (!m.bits.empty()) {
        std::string s;
        for (auto b : m.bits) s.push_back(static_cast<char>('0' + b));
        jm["bits"] = s;
      }
    } else {
      jm["dimension"] = m.state ? m.state->dimension() : 0;
      jm["payload_qubits"] = m.qubits();
      if (with_states && m.state) jm["state"] = to_json(*m.state);
    }
    jm["cumulative_qubits"] = qubits;
    jm["cumulative_bits"] = bits;
    messages.push_back(std::move(jm));
  }
  j["messages"] = std::move(messages);
  j["qubit_cost"] = qubits;
  j["bit_cost"] = bits;
  j["output"] = t.output;
  j["probability"] = t.output_probability;
  return j;
}

ProtocolTranscript transcript_from_json(const nlohmann::json& j) {
  try {
    ProtocolTranscript t;
    t.protocol = j.at("protocol").get<std::string>();
    t.repetitions = j.at("repetitions").get<int>();
    t.sampled = j.at("sampled").get<bool>();
    t.output = j.at("output").get<int>();
    t.output_probability = j.at("probability").get<double>();
    for (const auto& jm : j.at("messages")) {
      const Party from = jm.at("from").get<std::string>() == "alice" ? Party::kAlice : Party::kBob;
      const auto label = jm.at("label").get<std::string>();
      if (jm.at("kind").get<std::string>() == "classical") {
        Message m = Message::classical_symbolic(from, label, jm.at("payload_bits").get<std::size_t>());
        if (jm.contains("bits")) {
          for (char c : jm.at("bits").get<std::string>()) m.bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        t.messages.push_back(std::move(m));
      } else {
        const auto d = jm.at("dimension").get<std::size_t>();
        std::vector<Complex> amps(d, Complex{0.0, 0.0});
        if (jm.contains("state")) {
          for (std::size_t i = 0; i < d; ++i) {
            amps[i] = {jm["state"][i][0].get<double>(), jm["state"][i][1].get<double>()};
          }
        } else {
          amps[0] = 1.0;  // placeholder; only the dimension carries cost
        }
        t.messages.push_back(Message::quantum(from, label, StateVector::from_amplitudes(std::move(amps))));
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed transcript JSON: ") + e.what());
  }
}

}  // namespace promisecc
