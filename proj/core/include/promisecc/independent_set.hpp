#pragma once

#include <cstdint>
#include <vector>

namespace promisecc {

/// Undirected simple graph stored as adjacency bitsets.
class BitGraph {
 public:
  explicit BitGraph(std::size_t vertices);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const;
  const std::vector<std::uint64_t>& row(std::size_t v) const { return rows_[v]; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct IndependentSetResult {
  std::vector<std::size_t> vertices;  ///< sorted ascending; best found
  std::uint64_t search_nodes = 0;
  /// False when the node budget ran out before the search finished.
  bool exact = true;
  /// Certified bound on the maximum; equals vertices.size() when exact.
  std::size_t upper_bound = 0;
};

/// Exact maximum independent set of `conflicts`: branch and bound for a
/// maximum clique in the complement graph, with greedy-coloring upper bounds
/// on bitsets and vertices ordered by non-increasing complement degree.
/// Vertices without conflicts are taken up front. A non-zero `node_budget`
/// caps the number of search nodes; on exhaustion the best set so far is
/// returned with an upper bound taken from the open root branches.
IndependentSetResult maximum_independent_set(const BitGraph& conflicts, std::uint64_t node_budget = 0);

/// Same, for graphs whose automorphism group is vertex-transitive: some
/// maximum independent set contains vertex 0, so only that branch is searched.
/// The caller vouches for the symmetry.
IndependentSetResult maximum_independent_set_transitive(const BitGraph& conflicts, std::uint64_t node_budget = 0);

}  // namespace promisecc
