#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "promisecc/unitary.hpp"

namespace promisecc {

/// ASCII stand-ins for the tape end-markers (cent sign and dollar).
inline constexpr char kLeftEndMarker = '^';
inline constexpr char kRightEndMarker = '$';

/// Expected layout of input words: `blocks` runs of '0'/'1' of equal length,
/// separated by '#'. With `repeat_first_block` the last run must repeat the
/// first (words x#y#x).
struct WordShape {
  int blocks = 1;
  int block_length = 0;
  bool repeat_first_block = false;
};

/// Measure-once one-way automaton with quantum and classical states: one
/// unitary per scanned symbol, chosen by the classical state, and a single
/// projective measurement onto the accepting basis states at the end.
/// Immutable; assemble with Mo1qcfa::Builder.
class Mo1qcfa {
 public:
  struct Transition {
    std::size_t op = 0;
    int next = 0;
  };

  class Builder {
   public:
    Builder(std::size_t quantum_dimension, std::string alphabet);

    int add_state(std::string name);
    std::size_t add_op(std::string name, UnitaryOp op);
    Builder& set_transition(int state, char symbol, std::size_t op, int next);
    Builder& set_initial(std::size_t quantum_index, int classical_state);
    Builder& set_accepting(std::vector<std::size_t> quantum_indices);
    Builder& set_shape(WordShape shape);
    /// Routes every undefined (state, symbol) to `trap` through `op`.
    Builder& fill_undefined(int trap, std::size_t op);

    /// Throws InputError unless both transition functions are total on
    /// S x (alphabet plus end-markers) and every operator is unitary on the
    /// quantum dimension.
    Mo1qcfa build() const;

   private:
    friend class Mo1qcfa;
    std::size_t dimension_;
    std::string alphabet_;
    std::vector<std::string> states_;
    std::vector<std::string> op_names_;
    std::vector<UnitaryOp> ops_;
    std::vector<std::vector<std::optional<Transition>>> table_;
    std::size_t initial_quantum_ = 0;
    int initial_state_ = 0;
    std::vector<std::size_t> accepting_;
    std::optional<WordShape> shape_;
  };

  std::size_t quantum_dimension() const { return dimension_; }
  std::size_t classical_state_count() const { return states_.size(); }
  const std::string& alphabet() const { return alphabet_; }
  /// Alphabet followed by the two end-markers.
  const std::string& tape_alphabet() const { return tape_alphabet_; }
  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<UnitaryOp>& operators() const { return ops_; }
  const std::vector<std::string>& operator_names() const { return op_names_; }
  const Transition& transition(int state, char symbol) const;
  std::size_t initial_quantum() const { return initial_quantum_; }
  int initial_state() const { return initial_state_; }
  const std::vector<std::size_t>& accepting() const { return accepting_; }
  const std::optional<WordShape>& shape() const { return shape_; }

 private:
  Mo1qcfa() = default;
  std::size_t symbol_index(char symbol) const;

  std::size_t dimension_ = 0;
  std::string alphabet_;
  std::string tape_alphabet_;
  std::vector<std::string> states_;
  std::vector<std::string> op_names_;
  std::vector<UnitaryOp> ops_;
  std::vector<std::vector<Transition>> table_;
  std::size_t initial_quantum_ = 0;
  int initial_state_ = 0;
  std::vector<std::size_t> accepting_;
  std::optional<WordShape> shape_;
};

/// Pr[accept w] = || P_a Theta(s_{n+1}, $) ... Theta(s_0, ^) |q_0> ||^2 with
/// the classical states threaded through delta. Throws InputError for
/// symbols outside the alphabet or words that break the automaton's shape.
double simulate_mo1qcfa(const Mo1qcfa& automaton, std::string_view word);

/// Automaton for words x#y deciding H(x, y) = 0 versus H(x, y) = k on n+1
/// quantum basis states: U_h U_k on the left end-marker, a phase flip of |i>
/// for each 1 at position i of either block, U_k^-1 U_h^-1 on the right
/// end-marker, accept on |0>. The two passes use separate copies of the
/// position states, 2n+3 classical states plus a trap.
Mo1qcfa build_automaton_eqk(int n, int k);

/// Automaton for words x#y#x on 2n quantum basis states: U_s on the left
/// end-marker, amplitude swaps for the 1s of x, phase flips for the 1s of y,
/// swaps for x again, U_f on the right end-marker, accept on |1,0>.
/// Classical states s_0..s_{2n+1} plus a trap.
Mo1qcfa build_automaton_disj(int n);

/// Transitions by name and operators by structured kind.
nlohmann::json to_json(const Mo1qcfa& automaton);

}  // namespace promisecc
