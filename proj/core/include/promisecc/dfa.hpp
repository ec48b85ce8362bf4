#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "promisecc/bitstring.hpp"
#include "promisecc/transcript.hpp"

namespace promisecc {

/// Complete deterministic automaton; transition table indexed by
/// state * |alphabet| + symbol position.
class Dfa {
 public:
  /// Throws InputError unless the table is total and every entry is a state.
  Dfa(int states, std::string alphabet, std::vector<int> table, int start, std::vector<bool> accepting);

  int state_count() const { return states_; }
  const std::string& alphabet() const { return alphabet_; }
  int start() const { return start_; }

  int step(int state, char symbol) const;
  int run(int from, std::string_view word) const;
  bool accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
  bool accepts(std::string_view word) const { return accepting(run(start_, word)); }

 private:
  int states_;
  std::string alphabet_;
  std::vector<int> table_;
  int start_;
  std::vector<bool> accepting_;
};

/// Deterministic protocol for DISJ_{1/4} built from a DFA that solves the
/// x#y#x promise problem: Alice sends the state after "x#", Bob the state
/// after "y#", and Alice the acceptance bit after "x". Costs 1 + 2 ceil(log2 N)
/// bits for an N-state DFA.
class DfaProtocol {
 public:
  const Dfa& dfa() const { return dfa_; }
  int n() const { return n_; }
  int state_bits() const;
  int bit_cost() const { return 1 + 2 * state_bits(); }

  ProtocolTranscript run(const BitString& x, const BitString& y) const;

 private:
  friend DfaProtocol dfa_to_protocol(const Dfa& dfa, int n);
  DfaProtocol(Dfa dfa, int n) : dfa_(std::move(dfa)), n_(n) {}

  Dfa dfa_;
  int n_;
};

/// Checks the DFA on every promise word x#y#x of length-n blocks (exhaustive,
/// so n is capped by the enumeration limit) and throws ReductionError on the
/// first word it gets wrong.
DfaProtocol dfa_to_protocol(const Dfa& dfa, int n);

}  // namespace promisecc
