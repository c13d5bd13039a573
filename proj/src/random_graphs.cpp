#include "steiner/random_graphs.hpp"

#include <random>

namespace steiner {

namespace {

// Explicit draws instead of std::uniform_*_distribution so that the same seed
// gives the same graph on every platform.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected_graph requires n >= 1");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("random_connected_graph requires p in (0, 1)");
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit_draw(rng) < p) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }

  // Random spanning tree on a shuffled label order, then extra edges.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[draw_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(draw_below(rng, i));
    edges.emplace_back(perm[i], perm[j]);
    used[perm[i]][perm[j]] = used[perm[j]][perm[i]] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[u][v] && unit_draw(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace steiner
