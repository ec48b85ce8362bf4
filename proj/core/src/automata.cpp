#include "promisecc/automata.hpp"

#include <nlohmann/json.hpp>

#include "promisecc/errors.hpp"
#include "promisecc/operators.hpp"
#include "promisecc/promise.hpp"

namespace promisecc {
namespace {

std::string tape_alphabet_of(const std::string& alphabet) {
  std::string tape = alphabet;
  tape.push_back(kLeftEndMarker);
  tape.push_back(kRightEndMarker);
  return tape;
}

std::string symbol_name(char c) {
  if (c == kLeftEndMarker) return "^";
  if (c == kRightEndMarker) return "$";
  return std::string(1, c);
}

void check_shape(const WordShape& shape, std::string_view word) {
  std::vector<std::string_view> blocks;
  std::size_t start = 0;
  while (true) {
    const auto sep = word.find('#', start);
    blocks.push_back(word.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (static_cast<int>(blocks.size()) != shape.blocks) {
    throw InputError("word '" + std::string(word) + "' must have " + std::to_string(shape.blocks) +
                     " '#'-separated blocks");
  }
  for (auto b : blocks) {
    if (static_cast<int>(b.size()) != shape.block_length) {
      throw InputError("input-length error: block '" + std::string(b) + "' has length " +
                       std::to_string(b.size()) + ", expected n=" + std::to_string(shape.block_length));
    }
    if (b.find_first_not_of("01") != std::string_view::npos) {
      throw InputError("blocks must consist of '0' and '1'");
    }
  }
  if (shape.repeat_first_block && blocks.front() != blocks.back()) {
    throw InputError("word must have the form x#y#x: last block differs from the first");
  }
}

}  // namespace

Mo1qcfa::Builder::Builder(std::size_t quantum_dimension, std::string alphabet)
    : dimension_(quantum_dimension), alphabet_(std::move(alphabet)) {
  if (dimension_ == 0) throw DimensionError("quantum dimension must be positive");
  for (char c : alphabet_) {
    if (c == kLeftEndMarker || c == kRightEndMarker) {
      throw InputError("alphabet may not contain the end-markers");
    }
  }
}

int Mo1qcfa::Builder::add_state(std::string name) {
  states_.push_back(std::move(name));
  table_.emplace_back(alphabet_.size() + 2);
  return static_cast<int>(states_.size()) - 1;
}

std::size_t Mo1qcfa::Builder::add_op(std::string name, UnitaryOp op) {
  if (op.dimension() != dimension_) {
    throw DimensionError("operator '" + name + "' has dimension " + std::to_string(op.dimension()) +
                         ", automaton has " + std::to_string(dimension_));
  }
  op_names_.push_back(std::move(name));
  ops_.push_back(std::move(op));
  return ops_.size() - 1;
}

Mo1qcfa::Builder& Mo1qcfa::Builder::set_transition(int state, char symbol, std::size_t op, int next) {
  const auto tape = tape_alphabet_of(alphabet_);
  const auto pos = tape.find(symbol);
  if (pos == std::string::npos) throw InputError("symbol '" + symbol_name(symbol) + "' not in alphabet");
  if (state < 0 || state >= static_cast<int>(states_.size()) || next < 0 ||
      next >= static_cast<int>(states_.size())) {
    throw InputError("classical state out of range");
  }
  if (op >= ops_.size()) throw InputError("operator index out of range");
  table_[static_cast<std::size_t>(state)][pos] = Transition{op, next};
  return *this;
}

Mo1qcfa::Builder& Mo1qcfa::Builder::set_initial(std::size_t quantum_index, int classical_state) {
  initial_quantum_ = quantum_index;
  initial_state_ = classical_state;
  return *this;
}

Mo1qcfa::Builder& Mo1qcfa::Builder::set_accepting(std::vector<std::size_t> quantum_indices) {
  accepting_ = std::move(quantum_indices);
  return *this;
}

Mo1qcfa::Builder& Mo1qcfa::Builder::set_shape(WordShape shape) {
  shape_ = shape;
  return *this;
}

Mo1qcfa::Builder& Mo1qcfa::Builder::fill_undefined(int trap, std::size_t op) {
  for (auto& row : table_) {
    for (auto& cell : row) {
      if (!cell) cell = Transition{op, trap};
    }
  }
  return *this;
}

Mo1qcfa Mo1qcfa::Builder::build() const {
  if (states_.empty()) throw InputError("automaton needs at least one classical state");
  if (initial_quantum_ >= dimension_) throw InputError("initial quantum state out of range");
  if (initial_state_ < 0 || initial_state_ >= static_cast<int>(states_.size())) {
    throw InputError("initial classical state out of range");
  }
  for (auto a : accepting_) {
    if (a >= dimension_) throw InputError("accepting basis state out of range");
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (unitarity_error(ops_[i]) > kUnitaryTolerance) {
      throw InputError("operator '" + op_names_[i] + "' is not unitary");
    }
  }
  Mo1qcfa a;
  a.dimension_ = dimension_;
  a.alphabet_ = alphabet_;
  a.tape_alphabet_ = tape_alphabet_of(alphabet_);
  a.states_ = states_;
  a.op_names_ = op_names_;
  a.ops_ = ops_;
  a.initial_quantum_ = initial_quantum_;
  a.initial_state_ = initial_state_;
  a.accepting_ = accepting_;
  a.shape_ = shape_;
  a.table_.reserve(table_.size());
  for (std::size_t s = 0; s < table_.size(); ++s) {
    std::vector<Transition> row;
    for (std::size_t c = 0; c < table_[s].size(); ++c) {
      if (!table_[s][c]) {
        throw InputError("transition undefined for state '" + states_[s] + "' on symbol '" +
                         symbol_name(a.tape_alphabet_[c]) + "'");
      }
      row.push_back(*table_[s][c]);
    }
    a.table_.push_back(std::move(row));
  }
  return a;
}

std::size_t Mo1qcfa::symbol_index(char symbol) const {
  const auto pos = tape_alphabet_.find(symbol);
  if (pos == std::string::npos) throw InputError("symbol '" + symbol_name(symbol) + "' not in alphabet");
  return pos;
}

const Mo1qcfa::Transition& Mo1qcfa::transition(int state, char symbol) const {
  return table_.at(static_cast<std::size_t>(state))[symbol_index(symbol)];
}

double simulate_mo1qcfa(const Mo1qcfa& a, std::string_view word) {
  for (char c : word) {
    if (a.alphabet().find(c) == std::string::npos) {
      throw InputError("symbol '" + std::string(1, c) + "' outside the input alphabet");
    }
  }
  if (a.shape()) check_shape(*a.shape(), word);

  StateVector psi = StateVector::basis(a.quantum_dimension(), a.initial_quantum());
  int state = a.initial_state();
  auto step = [&](char symbol) {
    const auto& t = a.transition(state, symbol);
    psi = a.operators()[t.op].apply(psi);
    state = t.next;
  };
  step(kLeftEndMarker);
  for (char c : word) step(c);
  step(kRightEndMarker);
  return projection_prob(psi, a.accepting());
}

Mo1qcfa build_automaton_eqk(int n, int k) {
  PromiseParams::eqk(n, k).validate();
  const UnitaryOp uk = build_uk(n, k);
  const UnitaryOp uh = build_uh(n);

  Mo1qcfa::Builder b(static_cast<std::size_t>(n) + 1, "01#");
  const auto id = b.add_op("I", UnitaryOp::identity(static_cast<std::size_t>(n) + 1));
  const auto left = b.add_op("U_h*U_k", compose(uh, uk));
  const auto right = b.add_op("U_k^-1*U_h^-1", compose(uk.adjoint(), uh.adjoint()));
  std::vector<std::size_t> flip(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    flip[static_cast<std::size_t>(i)] = b.add_op("U_" + std::to_string(i) + ",1", build_position_phase(n, i, 1));
  }

  const int s0 = b.add_state("s0");
  std::vector<int> xs(static_cast<std::size_t>(n) + 2), ys(static_cast<std::size_t>(n) + 2);
  for (int i = 1; i <= n + 1; ++i) xs[static_cast<std::size_t>(i)] = b.add_state("s" + std::to_string(i));
  for (int i = 1; i <= n + 1; ++i) ys[static_cast<std::size_t>(i)] = b.add_state("s" + std::to_string(i) + "'");
  const int trap = b.add_state("trap");

  b.set_transition(s0, kLeftEndMarker, left, xs[1]);
  for (int i = 1; i <= n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    b.set_transition(xs[ii], '0', id, xs[ii + 1]);
    b.set_transition(xs[ii], '1', flip[ii], xs[ii + 1]);
    b.set_transition(ys[ii], '0', id, ys[ii + 1]);
    b.set_transition(ys[ii], '1', flip[ii], ys[ii + 1]);
  }
  b.set_transition(xs[static_cast<std::size_t>(n) + 1], '#', id, ys[1]);
  b.set_transition(ys[static_cast<std::size_t>(n) + 1], kRightEndMarker, right, ys[static_cast<std::size_t>(n) + 1]);
  b.fill_undefined(trap, id);

  b.set_initial(0, s0).set_accepting({0}).set_shape(WordShape{2, n, false});
  return b.build();
}

Mo1qcfa build_automaton_disj(int n) {
  if (n < 1) throw ParameterError("n must be positive");
  const auto d = 2 * static_cast<std::size_t>(n);
  Mo1qcfa::Builder b(d, "01#");
  const auto id = b.add_op("I", UnitaryOp::identity(d));
  const auto us = b.add_op("U_s", build_us(n));
  const auto uf = b.add_op("U_f", build_uf(n));
  std::vector<std::size_t> swap(static_cast<std::size_t>(n) + 1), vphase(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    swap[static_cast<std::size_t>(i)] = b.add_op("U_" + std::to_string(i) + ",1", build_position_swap(n, i, 1));
    vphase[static_cast<std::size_t>(i)] = b.add_op("V_" + std::to_string(i) + ",1", build_position_vphase(n, i, 1));
  }

  std::vector<int> s(2 * static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= 2 * n + 1; ++i) s[static_cast<std::size_t>(i)] = b.add_state("s" + std::to_string(i));
  const int trap = b.add_state("trap");
  auto at = [&](int i) { return s[static_cast<std::size_t>(i)]; };

  b.set_transition(at(0), kLeftEndMarker, us, at(1));
  for (int i = 1; i <= n; ++i) {
    // x positions (both passes) and y positions.
    b.set_transition(at(i), '0', id, at(i + 1));
    b.set_transition(at(i), '1', swap[static_cast<std::size_t>(i)], at(i + 1));
    b.set_transition(at(n + i), '0', id, at(n + i + 1));
    b.set_transition(at(n + i), '1', vphase[static_cast<std::size_t>(i)], at(n + i + 1));
  }
  b.set_transition(at(n + 1), '#', id, at(n + 1));
  b.set_transition(at(2 * n + 1), '#', id, at(1));
  b.set_transition(at(n + 1), kRightEndMarker, uf, at(n + 1));
  b.fill_undefined(trap, id);

  b.set_initial(disj_basis_index(n, 1, 0), at(0))
      .set_accepting({disj_basis_index(n, 1, 0)})
      .set_shape(WordShape{3, n, true});
  return b.build();
}

nlohmann::json to_json(const Mo1qcfa& a) {
  nlohmann::json j;
  j["quantum_dimension"] = a.quantum_dimension();
  j["alphabet"] = a.alphabet();
  j["end_markers"] = {symbol_name(kLeftEndMarker), symbol_name(kRightEndMarker)};
  j["classical_states"] = a.state_names();
  j["initial_quantum"] = a.initial_quantum();
  j["initial_state"] = a.state_names()[static_cast<std::size_t>(a.initial_state())];
  j["accepting"] = a.accepting();
  if (a.shape()) {
    j["shape"] = {{"blocks", a.shape()->blocks},
                  {"block_length", a.shape()->block_length},
                  {"repeat_first_block", a.shape()->repeat_first_block}};
  }
  auto ops = nlohmann::json::array();
  for (std::size_t i = 0; i < a.operators().size(); ++i) {
    auto jo = to_json(a.operators()[i]);
    jo["name"] = a.operator_names()[i];
    ops.push_back(std::move(jo));
  }
  j["operators"] = std::move(ops);
  auto transitions = nlohmann::json::array();
  for (std::size_t s = 0; s < a.classical_state_count(); ++s) {
    for (char c : a.tape_alphabet()) {
      const auto& t = a.transition(static_cast<int>(s), c);
      transitions.push_back({{"state", a.state_names()[s]},
                             {"symbol", symbol_name(c)},
                             {"op", a.operator_names()[t.op]},
                             {"next", a.state_names()[static_cast<std::size_t>(t.next)]}});
    }
  }
  j["transitions"] = std::move(transitions);
  return j;
}

}  // namespace promisecc
