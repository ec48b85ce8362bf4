#include "promisecc/dfa.hpp"

#include "promisecc/errors.hpp"
#include "promisecc/promise.hpp"

namespace promisecc {
namespace {

std::vector<std::uint8_t> encode_state(int state, int width) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(width));
  for (int b = 0; b < width; ++b) {
    bits[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((state >> (width - 1 - b)) & 1);
  }
  return bits;
}

}  // namespace

Dfa::Dfa(int states, std::string alphabet, std::vector<int> table, int start, std::vector<bool> accepting)
    : states_(states),
      alphabet_(std::move(alphabet)),
      table_(std::move(table)),
      start_(start),
      accepting_(std::move(accepting)) {
  if (states_ < 1) throw InputError("DFA needs at least one state");
  if (alphabet_.empty()) throw InputError("DFA alphabet must be non-empty");
  if (table_.size() != static_cast<std::size_t>(states_) * alphabet_.size()) {
    throw InputError("DFA transition table is not total");
  }
  for (int t : table_) {
    if (t < 0 || t >= states_) throw InputError("DFA transition to unknown state");
  }
  if (start_ < 0 || start_ >= states_) throw InputError("DFA start state out of range");
  if (accepting_.size() != static_cast<std::size_t>(states_)) {
    throw InputError("DFA accepting flags must cover every state");
  }
}

int Dfa::step(int state, char symbol) const {
  const auto pos = alphabet_.find(symbol);
  if (pos == std::string::npos) throw InputError("symbol '" + std::string(1, symbol) + "' not in DFA alphabet");
  return table_[static_cast<std::size_t>(state) * alphabet_.size() + pos];
}

int Dfa::run(int from, std::string_view word) const {
  int state = from;
  for (char c : word) state = step(state, c);
  return state;
}

int DfaProtocol::state_bits() const { return ceil_log2(static_cast<std::uint64_t>(dfa_.state_count())); }

ProtocolTranscript DfaProtocol::run(const BitString& x, const BitString& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) {
    throw DimensionError("inputs must have length n=" + std::to_string(n_));
  }
  const std::string xs = x.to_string();
  const std::string ys = y.to_string();
  ProtocolTranscript t;
  t.protocol = "dfa-reduction";

  const int after_x = dfa_.run(dfa_.start(), xs + "#");
  t.messages.push_back(Message::classical(Party::kAlice, "state-after-x#", encode_state(after_x, state_bits())));
  const int after_y = dfa_.run(after_x, ys + "#");
  t.messages.push_back(Message::classical(Party::kBob, "state-after-x#y#", encode_state(after_y, state_bits())));
  const bool accept = dfa_.accepting(dfa_.run(after_y, xs));
  t.messages.push_back(Message::classical(Party::kAlice, "result", {static_cast<std::uint8_t>(accept)}));
  t.output = accept ? 1 : 0;
  t.output_probability = t.output;
  return t;
}

DfaProtocol dfa_to_protocol(const Dfa& dfa, int n) {
  for (char c : std::string_view("01#")) {
    if (dfa.alphabet().find(c) == std::string::npos) {
      throw ReductionError("DFA alphabet must contain '0', '1' and '#'");
    }
  }
  for (const auto& inst : enumerate_promise(PromiseParams::disj(n, Rational(1, 4)))) {
    const std::string xs = inst.x.to_string();
    const std::string word = xs + "#" + inst.y->to_string() + "#" + xs;
    const bool want = inst.label == Label::kYes;
    if (dfa.accepts(word) != want) {
      throw ReductionError("DFA " + std::string(want ? "rejects" : "accepts") + " promise word " + word);
    }
  }
  return DfaProtocol(dfa, n);
}

}  // namespace promisecc
