#include "steiner/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

namespace steiner {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  n_ = n;
  stride_ = n == 0 ? 0 : (n + 63) / 64;
  adj_.resize(n);
  words_.assign(static_cast<std::size_t>(n) * stride_, 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    words_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ull << (v & 63);
    words_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= 1ull << (u & 63);
  }
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < stride_; ++w) {
      std::uint64_t bits = words_[static_cast<std::size_t>(v) * stride_ + w];
      while (bits) {
        adj_[v].push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    edge_count_ += adj_[v].size();
  }
  edge_count_ /= 2;
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree of empty graph");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  if (n_ == 0) throw std::invalid_argument("max_degree of empty graph");
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> comp;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) comp.emplace_back(u, v);
  return Graph(n_, comp);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.order()) throw std::invalid_argument("bfs source out of range");
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> dist;
  dist.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) dist.push_back(bfs_distances(g, v));
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

VertexSet non_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("non_cut_vertices requires a connected graph");
  int n = g.order();
  if (n <= 2) {
    VertexSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> entry(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    entry[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;  // simple graph: exactly one edge to parent
      if (entry[w] >= 0) {
        low[v] = std::min(low[v], entry[w]);
      } else {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= entry[v]) is_cut[v] = true;
        ++children;
      }
    }
    if (parent < 0 && children > 1) is_cut[v] = true;
  };
  dfs(0, -1);
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (!is_cut[v]) out.push_back(v);
  return out;
}

bool contains_c4_subgraph(const Graph& g) {
  int n = g.order(), words = g.row_words();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w = 0; w < words; ++w)
        common += std::popcount(g.row_word(u, w) & g.row_word(v, w));
      if (common >= 2) return true;
    }
  }
  return false;
}

namespace {

// Longest-cycle backtracking over 2-core vertices.  Cycles are counted from
// their minimum vertex so each is explored once.
struct CycleSearch {
  const Graph& g;
  std::vector<bool> in_core;
  std::vector<bool> visited;
  int start = 0;
  int avail = 0;  // unvisited core vertices > start
  int best = 0;

  explicit CycleSearch(const Graph& graph) : g(graph) {}

  void extend(int v, int length) {
    if (length + avail <= best) return;  // even using every remaining vertex
    if (length >= 3 && g.adjacent(v, start)) best = std::max(best, length);
    for (int w : g.neighbors(v)) {
      if (w <= start || !in_core[w] || visited[w]) continue;
      visited[w] = true;
      --avail;
      extend(w, length + 1);
      ++avail;
      visited[w] = false;
    }
  }
};

}  // namespace

std::optional<int> circumference(const Graph& g) {
  int n = g.order();
  // Peel vertices of degree <= 1: no cycle passes through them.
  std::vector<int> deg(n);
  std::vector<bool> in_core(n, true);
  std::vector<int> peel;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) peel.push_back(v);
  }
  while (!peel.empty()) {
    int v = peel.back();
    peel.pop_back();
    if (!in_core[v]) continue;
    in_core[v] = false;
    for (int w : g.neighbors(v))
      if (in_core[w] && --deg[w] <= 1) peel.push_back(w);
  }
  int core_size = 0;
  for (int v = 0; v < n; ++v) core_size += in_core[v];
  if (core_size == 0) return std::nullopt;

  CycleSearch search(g);
  search.in_core = in_core;
  search.visited.assign(n, false);
  for (int s = 0; s < n; ++s) {
    if (!in_core[s]) continue;
    int greater = 0;
    for (int v = s + 1; v < n; ++v) greater += in_core[v];
    if (greater + 1 <= search.best) continue;
    search.start = s;
    search.avail = greater;
    search.visited[s] = true;
    search.extend(s, 1);
    search.visited[s] = false;
    if (search.best == core_size) break;
  }
  return search.best >= 3 ? std::optional<int>(search.best) : std::nullopt;
}

}  // namespace steiner
