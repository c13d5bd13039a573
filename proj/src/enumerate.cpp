#include "steiner/enumerate.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_set>

namespace steiner {

namespace {

constexpr int kMaxOrder = 11;
constexpr std::uint64_t kNoChunk = std::numeric_limits<std::uint64_t>::max();

// Finds the minimal packed adjacency code over all relabelings.  Positions are
// filled one at a time; the p bits a candidate vertex contributes against the
// already-placed prefix are compared with the best known chunk at that level,
// so whole relabeling subtrees fall away after a single mismatch.
struct CanonSearch {
  int n = 0;
  std::array<std::uint16_t, kMaxOrder> row{};
  std::array<std::uint64_t, kMaxOrder> best{};
  std::array<int, kMaxOrder> perm{};
  std::array<bool, kMaxOrder> used{};

  std::uint64_t run() {
    best.fill(kNoChunk);
    place(0);
    std::uint64_t code = 0;
    for (int p = 0; p < n; ++p) code = (code << p) | best[p];
    return code;
  }

  void place(int p) {
    if (p == n) return;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t chunk = 0;
      for (int j = 0; j < p; ++j)
        chunk = (chunk << 1) | ((row[v] >> perm[j]) & 1u);
      if (chunk > best[p]) continue;
      if (chunk < best[p]) {
        best[p] = chunk;
        for (int q = p + 1; q < n; ++q) best[q] = kNoChunk;
      }
      used[v] = true;
      perm[p] = v;
      place(p + 1);
      used[v] = false;
    }
  }
};

std::uint64_t canonical_code_rows(const std::array<std::uint16_t, kMaxOrder>& row, int n) {
  CanonSearch search;
  search.n = n;
  search.row = row;
  search.used.fill(false);
  return search.run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  int total_bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((code >> (total_bits - 1 - pos)) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  int n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("canonical_code supports order <= 11");
  std::array<std::uint16_t, kMaxOrder> row{};
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) row[v] |= static_cast<std::uint16_t>(1u << w);
  return canonical_code_rows(row, n);
}

std::vector<std::vector<Graph>> graphs_by_order(int max_n) {
  if (max_n < 1 || max_n > kMaxOrder)
    throw std::invalid_argument("graphs_by_order supports 1 <= max_n <= 11");
  std::vector<std::vector<std::uint64_t>> codes(max_n + 1);
  codes[1] = {0};
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t parent : codes[n - 1]) {
      // Rebuild the parent's rows straight from its code.
      std::array<std::uint16_t, kMaxOrder> row{};
      int total_bits = (n - 1) * (n - 2) / 2, pos = 0;
      for (int j = 1; j < n - 1; ++j)
        for (int i = 0; i < j; ++i, ++pos)
          if ((parent >> (total_bits - 1 - pos)) & 1) {
            row[i] |= static_cast<std::uint16_t>(1u << j);
            row[j] |= static_cast<std::uint16_t>(1u << i);
          }
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        auto rows = row;
        rows[n - 1] = static_cast<std::uint16_t>(mask);
        for (int v = 0; v < n - 1; ++v)
          if ((mask >> v) & 1) rows[v] |= static_cast<std::uint16_t>(1u << (n - 1));
        seen.insert(canonical_code_rows(rows, n));
      }
    }
    codes[n].assign(seen.begin(), seen.end());
    std::sort(codes[n].begin(), codes[n].end());
  }
  std::vector<std::vector<Graph>> out(max_n + 1);
  for (int n = 1; n <= max_n; ++n) {
    out[n].reserve(codes[n].size());
    for (std::uint64_t code : codes[n]) out[n].push_back(graph_from_code(n, code));
  }
  return out;
}

std::vector<Graph> all_graphs(int n) { return graphs_by_order(n).at(n); }

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace steiner
