#include "promisecc/independent_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "promisecc/errors.hpp"

namespace promisecc {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Maximum clique over a graph whose vertex i is the i-th vertex of the
// chosen ordering; adjacency rows are already permuted into that order.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adj, std::size_t n, std::uint64_t budget)
      : adj_(std::move(adj)), n_(n), words_((n + 63) / 64), budget_(budget) {}

  std::vector<std::size_t> run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  /// Largest clique any unexplored root branch could still hold.
  std::size_t open_bound() const { return aborted_ ? std::max(open_bound_, best_.size()) : best_.size(); }

 private:
  // Greedy sequential coloring of P in index order. Fills `order` and
  // `colors` with vertices sorted by ascending color.
  void color(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    Bits uncolored = p;
    std::size_t k = 0;
    while (any(uncolored)) {
      ++k;
      Bits q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(q[w]));
          const std::size_t v = w * 64 + bit;
          q[w] &= q[w] - 1;
          uncolored[w] &= ~(std::uint64_t{1} << bit);
          for (std::size_t u = w; u < words_; ++u) q[u] &= ~adj_[v][u];
          order.push_back(v);
          colors.push_back(k);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bits p) {
    if (budget_ != 0 && nodes_ >= budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colors;
    color(p, order, colors);
    const bool root = current.empty();
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      // Colors shrink along the loop, so this bounds every branch not yet closed.
      if (root) open_bound_ = colors[i];
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (any(next)) {
        expand(current, std::move(next));
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      if (aborted_) return;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<Bits> adj_;
  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t open_bound_ = 0;
};

}  // namespace

BitGraph::BitGraph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), rows_(vertices, Bits((vertices + 63) / 64, 0)) {}

void BitGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw DimensionError("edge endpoint out of range");
  if (a == b) return;
  rows_[a][b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[b][a / 64] |= std::uint64_t{1} << (a % 64);
}

bool BitGraph::adjacent(std::size_t a, std::size_t b) const {
  return (rows_[a][b / 64] >> (b % 64)) & 1U;
}

std::size_t BitGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : rows_[v]) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

IndependentSetResult maximum_independent_set(const BitGraph& conflicts, std::uint64_t node_budget) {
  IndependentSetResult result;
  std::vector<std::size_t> free_vertices;
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < conflicts.size(); ++v) {
    (conflicts.degree(v) == 0 ? free_vertices : core).push_back(v);
  }

  if (!core.empty()) {
    // Complement degree within the core = |core| - 1 - conflict degree.
    std::stable_sort(core.begin(), core.end(), [&](std::size_t a, std::size_t b) {
      return conflicts.degree(a) < conflicts.degree(b);
    });
    const std::size_t m = core.size();
    const std::size_t words = (m + 63) / 64;
    std::vector<Bits> adj(m, Bits(words, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!conflicts.adjacent(core[i], core[j])) {
          adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
          adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
    }
    const std::size_t forced = free_vertices.size();
    CliqueSearch search(std::move(adj), m, node_budget);
    for (auto i : search.run()) free_vertices.push_back(core[i]);
    result.search_nodes = search.nodes();
    result.exact = !search.aborted();
    result.upper_bound = forced + search.open_bound();
  } else {
    result.upper_bound = free_vertices.size();
  }
  std::sort(free_vertices.begin(), free_vertices.end());
  result.vertices = std::move(free_vertices);
  return result;
}

IndependentSetResult maximum_independent_set_transitive(const BitGraph& conflicts, std::uint64_t node_budget) {
  if (conflicts.size() == 0) return {};
  std::vector<std::size_t> keep;
  for (std::size_t v = 1; v < conflicts.size(); ++v) {
    if (!conflicts.adjacent(0, v)) keep.push_back(v);
  }
  BitGraph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (conflicts.adjacent(keep[i], keep[j])) sub.add_edge(i, j);
  auto result = maximum_independent_set(sub, node_budget);
  for (auto& v : result.vertices) v = keep[v];
  result.vertices.insert(result.vertices.begin(), 0);
  result.upper_bound += 1;
  return result;
}

}  // namespace promisecc
