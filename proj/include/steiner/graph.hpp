#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace steiner {

// Sorted list of distinct vertex labels in [0, n).
using VertexSet = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1.  Stores both sorted
// adjacency lists and packed adjacency bit rows; the bit rows are word-based,
// so orders above 64 work too (everything here is tuned for desk-scale n).
// Duplicate edges collapse silently; self-loops are an error.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row_word(u, v >> 6) >> (v & 63)) & 1u;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  int max_degree() const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  // Adjacency row of v as a single mask; only valid for order() <= 64.
  std::uint64_t row64(int v) const {
    check_vertex(v);
    return words_[static_cast<std::size_t>(v) * stride_];
  }

  std::uint64_t row_word(int v, int w) const {
    return words_[static_cast<std::size_t>(v) * stride_ + w];
  }
  int row_words() const { return stride_; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }

  int n_ = 0;
  int stride_ = 0;  // words per adjacency row
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> words_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

// BFS distances from src; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// The empty graph and K1 count as connected.
bool is_connected(const Graph& g);

// Vertices whose removal keeps the graph connected.  Computed with an
// articulation-point DFS; requires a connected input.  For n = 1 the single
// vertex is non-cut (removing it leaves the empty graph).
VertexSet non_cut_vertices(const Graph& g);

// True iff some 4-cycle exists as a (not necessarily induced) subgraph,
// i.e. some vertex pair has two common neighbors.
bool contains_c4_subgraph(const Graph& g);

// Length of a longest cycle; nullopt when the graph is acyclic.
// Exact backtracking search over the 2-core.
std::optional<int> circumference(const Graph& g);

}  // namespace steiner
