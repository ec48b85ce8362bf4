#pragma once

#include <string>
#include <vector>

#include "promisecc/bitstring.hpp"
#include "promisecc/promise.hpp"
#include "promisecc/rng.hpp"

namespace promisecc {

struct QueryRun {
  std::string algorithm;
  int queries_used = 0;
  /// 1-based positions, in query order. Empty for the quantum algorithm,
  /// whose single query touches every position in superposition.
  std::vector<int> queried_positions;
  int output = 0;
  /// Pr[output = 1].
  double output_probability = 0.0;
};

/// One-query algorithm on n+1 basis states: U_h U_k, the phase query, then
/// U_k^-1 U_h^-1; outputs 1 iff |0> is measured. Pr[1] = ((k - W(x)) / k)^2,
/// so it is exact on W(x) in {0, k}. Runs on any input; throws
/// ParameterError unless 1 <= k <= n and k >= n/2.
QueryRun run_djk_quantum(const BitString& x, int k);
QueryRun run_djk_quantum(const BitString& x, int k, Rng& rng);

/// Queries x_1, x_2, ... and answers 0 at the first 1. With promise
/// W in {0, k} it needs n-k+1 queries; with the literal W > k promise, n-k.
/// Throws PromiseViolation off the chosen promise.
QueryRun run_djk_deterministic(const BitString& x, int k,
                               DjPromise promise = DjPromise::kWeightEqualsK);

/// Explicit adaptive decision tree over n input bits.
class DecisionTree {
 public:
  struct Node {
    int position = 0;   ///< 1-based query position; 0 marks a leaf
    int value = 0;      ///< leaf output
    int child[2] = {-1, -1};
  };

  /// Single leaf returning `value`.
  static DecisionTree leaf(int n, int value);
  /// Nodes are given root-first; children index into the same vector.
  DecisionTree(int n, std::vector<Node> nodes);

  /// Queries x_1..x_depth in order; any 1 yields 0, all zeros yield 1.
  static DecisionTree prefix(int n, int depth);
  /// Uniformly random query labels and leaf values, complete to `depth`.
  static DecisionTree random(int n, int depth, Rng& rng);

  int n() const { return n_; }
  int depth() const;
  int evaluate(const BitString& x, std::vector<int>* path = nullptr) const;
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  int n_ = 0;
  std::vector<Node> nodes_;
};

struct AdversaryWitness {
  BitString zero_input;
  BitString heavy_input;
  std::vector<int> queried_positions;
  /// Leaf value the tree returns on both inputs.
  int verdict = 0;
};

/// Answers 0 to every query of `tree` (depth at most n-k) and returns 0^n
/// together with a weight-k input supported on unqueried positions. Both
/// follow the same path, yet one is YES and the other NO, so no tree of
/// depth n-k decides the promise problem. Throws ParameterError if the tree
/// is deeper than n-k or k is out of range.
AdversaryWitness adversary_check(int n, int k, const DecisionTree& tree);
/// Runs the adversary against DecisionTree::prefix(n, n - k).
AdversaryWitness adversary_check(int n, int k);

}  // namespace promisecc
