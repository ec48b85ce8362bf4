#include "promisecc/query.hpp"

#include <algorithm>
#include <functional>

#include "promisecc/errors.hpp"
#include "promisecc/operators.hpp"
#include "promisecc/statevector.hpp"

namespace promisecc {
namespace {

void require_djk_params(int n, int k) {
  PromiseParams::djk(n, k).validate();
}

QueryRun djk_quantum_impl(const BitString& x, int k, Rng* rng) {
  const int n = static_cast<int>(x.size());
  require_djk_params(n, k);
  const UnitaryOp uk = build_uk(n, k);
  const UnitaryOp uh = build_uh(n);

  StateVector psi = StateVector::basis(static_cast<std::size_t>(n) + 1, 0);
  psi = uh.apply(uk.apply(psi));
  psi = build_phase_oracle(x).apply(psi);  // the only query
  psi = uk.adjoint().apply(uh.adjoint().apply(psi));

  QueryRun run;
  run.algorithm = "djk-quantum";
  run.queries_used = 1;
  run.output_probability = measure_prob(psi, 0);
  if (rng) {
    run.output = rng->bernoulli(run.output_probability) ? 1 : 0;
  } else {
    run.output = run.output_probability >= 0.5 ? 1 : 0;
  }
  return run;
}

}  // namespace

QueryRun run_djk_quantum(const BitString& x, int k) { return djk_quantum_impl(x, k, nullptr); }

QueryRun run_djk_quantum(const BitString& x, int k, Rng& rng) { return djk_quantum_impl(x, k, &rng); }

QueryRun run_djk_deterministic(const BitString& x, int k, DjPromise promise) {
  const int n = static_cast<int>(x.size());
  const auto params = PromiseParams::djk(n, k, promise);
  if (classify(params, x) == Label::kOffPromise) {
    throw PromiseViolation("DJ_K promise (" + std::string(to_string(promise)) +
                           ") violated by x=" + x.to_string());
  }
  const int budget = promise == DjPromise::kWeightEqualsK ? n - k + 1 : n - k;
  QueryRun run;
  run.algorithm = "djk-deterministic";
  run.output = 1;
  for (int i = 1; i <= budget; ++i) {
    run.queried_positions.push_back(i);
    if (x[static_cast<std::size_t>(i - 1)] == 1) {
      run.output = 0;
      break;
    }
  }
  run.queries_used = static_cast<int>(run.queried_positions.size());
  run.output_probability = run.output;
  return run;
}

// ---------------------------------------------------------------------------

DecisionTree DecisionTree::leaf(int n, int value) {
  Node node;
  node.value = value;
  return DecisionTree(n, {node});
}

DecisionTree::DecisionTree(int n, std::vector<Node> nodes) : n_(n), nodes_(std::move(nodes)) {
  if (n_ < 1) throw ParameterError("decision tree needs n >= 1");
  if (nodes_.empty()) throw InputError("decision tree needs at least one node");
  const auto size = static_cast<int>(nodes_.size());
  for (const auto& node : nodes_) {
    if (node.position == 0) continue;
    if (node.position < 0 || node.position > n_) throw InputError("query position out of range");
    for (int c : node.child) {
      if (c <= 0 || c >= size) throw InputError("decision tree child index out of range");
    }
  }
  depth();  // rejects cycles
}

DecisionTree DecisionTree::prefix(int n, int depth) {
  if (depth < 0 || depth > n) throw ParameterError("prefix depth must lie in [0, n]");
  // Node 2i queries x_{i+1}; node 2i+1 is the "saw a 1" leaf.
  std::vector<Node> nodes;
  for (int i = 0; i < depth; ++i) {
    Node q;
    q.position = i + 1;
    q.child[0] = static_cast<int>(nodes.size()) + 2;
    q.child[1] = static_cast<int>(nodes.size()) + 1;
    nodes.push_back(q);
    Node zero_leaf;
    zero_leaf.value = 0;
    nodes.push_back(zero_leaf);
  }
  Node accept;
  accept.value = 1;
  nodes.push_back(accept);
  return DecisionTree(n, std::move(nodes));
}

DecisionTree DecisionTree::random(int n, int depth, Rng& rng) {
  if (depth < 0) throw ParameterError("depth must be non-negative");
  std::vector<Node> nodes;
  std::function<int(int)> grow = [&](int remaining) -> int {
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (remaining == 0) {
      nodes[static_cast<std::size_t>(id)].value = static_cast<int>(rng.below(2));
      return id;
    }
    nodes[static_cast<std::size_t>(id)].position = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int left = grow(remaining - 1);
    const int right = grow(remaining - 1);
    nodes[static_cast<std::size_t>(id)].child[0] = left;
    nodes[static_cast<std::size_t>(id)].child[1] = right;
    return id;
  };
  grow(depth);
  return DecisionTree(n, std::move(nodes));
}

int DecisionTree::depth() const {
  std::function<int(int, int)> walk = [&](int id, int level) -> int {
    if (level > static_cast<int>(nodes_.size())) throw InputError("decision tree contains a cycle");
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    if (node.position == 0) return 0;
    return 1 + std::max(walk(node.child[0], level + 1), walk(node.child[1], level + 1));
  };
  return walk(0, 0);
}

int DecisionTree::evaluate(const BitString& x, std::vector<int>* path) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("input length differs from tree n");
  int id = 0;
  while (nodes_[static_cast<std::size_t>(id)].position != 0) {
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    if (path) path->push_back(node.position);
    id = node.child[x[static_cast<std::size_t>(node.position - 1)]];
  }
  return nodes_[static_cast<std::size_t>(id)].value;
}

AdversaryWitness adversary_check(int n, int k, const DecisionTree& tree) {
  require_djk_params(n, k);
  if (tree.n() != n) throw DimensionError("tree input length differs from n");
  if (tree.depth() > n - k) {
    throw ParameterError("adversary argument covers trees of depth <= n-k = " + std::to_string(n - k));
  }
  AdversaryWitness w;
  w.zero_input = BitString::zeros(static_cast<std::size_t>(n));
  w.verdict = tree.evaluate(w.zero_input, &w.queried_positions);

  std::vector<std::uint8_t> heavy(static_cast<std::size_t>(n), 0);
  int placed = 0;
  for (int i = 1; i <= n && placed < k; ++i) {
    if (std::find(w.queried_positions.begin(), w.queried_positions.end(), i) == w.queried_positions.end()) {
      heavy[static_cast<std::size_t>(i - 1)] = 1;
      ++placed;
    }
  }
  // At most n-k distinct positions were queried, so k free ones remain.
  w.heavy_input = BitString(std::move(heavy));
  return w;
}

AdversaryWitness adversary_check(int n, int k) {
  require_djk_params(n, k);
  return adversary_check(n, k, DecisionTree::prefix(n, n - k));
}

}  // namespace promisecc
