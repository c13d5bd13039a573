#include "steiner/steiner_distance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace steiner {

namespace {

constexpr int kInf = 1 << 28;

VertexSet checked_terminals(const Graph& g, const VertexSet& terminals) {
  if (terminals.empty()) throw std::invalid_argument("terminal set must be non-empty");
  VertexSet s = terminals;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("terminal set contains duplicates");
  if (s.front() < 0 || s.back() >= g.order())
    throw std::invalid_argument("terminal out of range");
  return s;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

// Lexicographic k-subsets of 0..n-1.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(pick));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

SteinerSolver::SteinerSolver(const Graph& g, int max_terminals)
    : g_(&g), max_terminals_(max_terminals) {
  if (max_terminals < 1 || max_terminals > 20)
    throw std::invalid_argument("max_terminals must be in 1..20");
  dist_ = all_pairs_distances(g);
  for (auto& row : dist_)
    for (int& d : row)
      if (d < 0) d = kInf;
}

int SteinerSolver::solve(const VertexSet& terminals) {
  int n = g_->order();
  int k = static_cast<int>(terminals.size());
  int full = (1 << k) - 1;
  dp_.assign(static_cast<std::size_t>(full + 1) * n, kInf);
  split_.assign(dp_.size(), 0);
  grow_from_.assign(dp_.size(), -1);
  merge_val_.assign(n, kInf);

  for (int mask = 1; mask <= full; ++mask) {
    int* dp_mask = &dp_[static_cast<std::size_t>(mask) * n];
    if (std::popcount(static_cast<unsigned>(mask)) == 1) {
      int t = terminals[std::countr_zero(static_cast<unsigned>(mask))];
      std::fill(merge_val_.begin(), merge_val_.end(), kInf);
      merge_val_[t] = 0;
    } else {
      int low = mask & -mask;
      for (int v = 0; v < n; ++v) merge_val_[v] = kInf;
      for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;  // each split once, low-bit side fixed
        const int* a = &dp_[static_cast<std::size_t>(sub) * n];
        const int* b = &dp_[static_cast<std::size_t>(mask ^ sub) * n];
        for (int v = 0; v < n; ++v) {
          int cand = a[v] + b[v];
          if (cand < merge_val_[v]) {
            merge_val_[v] = cand;
            split_[static_cast<std::size_t>(mask) * n + v] = static_cast<std::uint16_t>(sub);
          }
        }
      }
    }
    // Growth step: attach a shortest path from the cheapest merge point.
    for (int v = 0; v < n; ++v) {
      int best = kInf, from = -1;
      const auto& dv = dist_[v];
      for (int u = 0; u < n; ++u) {
        if (merge_val_[u] >= kInf || dv[u] >= kInf) continue;
        int cand = merge_val_[u] + dv[u];
        if (cand < best) {
          best = cand;
          from = u;
        }
      }
      dp_mask[v] = best;
      grow_from_[static_cast<std::size_t>(mask) * n + v] = static_cast<std::int16_t>(from);
    }
  }
  return dp_[static_cast<std::size_t>(full) * n + terminals[0]];
}

std::vector<std::pair<int, int>> SteinerSolver::reconstruct(const VertexSet& terminals) {
  int n = g_->order();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> stack = {{(1 << terminals.size()) - 1, terminals[0]}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    int u = grow_from_[static_cast<std::size_t>(mask) * n + v];
    int cur = v;
    while (cur != u) {
      for (int w : g_->neighbors(cur)) {
        if (dist_[u][w] == dist_[u][cur] - 1) {
          edges.emplace_back(std::min(cur, w), std::max(cur, w));
          cur = w;
          break;
        }
      }
    }
    if (std::popcount(static_cast<unsigned>(mask)) > 1) {
      int sub = split_[static_cast<std::size_t>(mask) * n + u];
      stack.emplace_back(sub, u);
      stack.emplace_back(mask ^ sub, u);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::optional<int> SteinerSolver::distance(const VertexSet& terminals) {
  VertexSet s = checked_terminals(*g_, terminals);
  if (static_cast<int>(s.size()) > max_terminals_)
    throw std::invalid_argument("terminal set exceeds max_terminals cap");
  int value = solve(s);
  if (value >= kInf) return std::nullopt;
  return value;
}

SteinerResult SteinerSolver::distance_tree(const VertexSet& terminals) {
  VertexSet s = checked_terminals(*g_, terminals);
  if (static_cast<int>(s.size()) > max_terminals_)
    throw std::invalid_argument("terminal set exceeds max_terminals cap");
  int value = solve(s);
  if (value >= kInf) return {};
  SteinerResult result;
  result.value = value;
  result.witness = reconstruct(s);
  return result;
}

SteinerResult steiner_distance(const Graph& g, const VertexSet& terminals, int max_terminals) {
  SteinerSolver solver(g, max_terminals);
  return solver.distance_tree(terminals);
}

SteinerResult steiner_distance_oracle(const Graph& g, const VertexSet& terminals, int max_order) {
  if (max_order < 1 || max_order > 64)
    throw std::invalid_argument("oracle max_order must be in 1..64");
  int n = g.order();
  if (n > max_order)
    throw std::invalid_argument("graph order exceeds oracle cap");
  VertexSet s = checked_terminals(g, terminals);
  int k = static_cast<int>(s.size());

  std::uint64_t term = 0;
  for (int t : s) term |= 1ull << t;
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  std::uint64_t others = all & ~term;

  auto connected_in = [&](std::uint64_t w) {
    std::uint64_t reach = w & (~w + 1);  // lowest bit
    std::uint64_t frontier = reach;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t bits = frontier;
      while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        next |= g.row64(v) & w;
      }
      next &= ~reach;
      reach |= next;
      frontier = next;
    }
    return reach == w;
  };

  std::uint64_t best_set = 0;
  int best = kInf;
  std::uint64_t sub = others;
  while (true) {
    std::uint64_t w = term | sub;
    int size = std::popcount(w);
    if (size - 1 < best && connected_in(w)) {
      best = size - 1;
      best_set = w;
      if (best == k - 1) break;
    }
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
  if (best >= kInf) return {};

  SteinerResult result;
  result.value = best;
  // Spanning tree of the winning induced subgraph via BFS.
  int start = std::countr_zero(best_set);
  std::uint64_t seen = 1ull << start;
  std::vector<int> queue = {start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    std::uint64_t fresh = g.row64(v) & best_set & ~seen;
    while (fresh) {
      int w = std::countr_zero(fresh);
      fresh &= fresh - 1;
      seen |= 1ull << w;
      queue.push_back(w);
      result.witness.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

int steiner_eccentricity(const Graph& g, int v, int k, int max_terminals) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  if (k < 2 || k > g.order()) throw std::invalid_argument("k must be in 2..n");
  if (!is_connected(g)) throw std::invalid_argument("steiner_eccentricity requires a connected graph");
  SteinerSolver solver(g, max_terminals);
  int worst = 0;
  // Choose the k-1 companions among the other vertices.
  std::vector<int> rest;
  for (int u = 0; u < g.order(); ++u)
    if (u != v) rest.push_back(u);
  for_each_subset(static_cast<int>(rest.size()), k - 1, [&](const std::vector<int>& pick) {
    VertexSet s = {v};
    for (int idx : pick) s.push_back(rest[idx]);
    worst = std::max(worst, solver.distance(s).value());
  });
  return worst;
}

SteinerProfile steiner_profile(const Graph& g, int k, int max_terminals) {
  int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("k must be in 2..n");
  if (!is_connected(g)) throw std::invalid_argument("steiner_profile requires a connected graph");
  SteinerSolver solver(g, max_terminals);
  SteinerProfile profile;
  profile.k = k;
  profile.eccentricity.assign(n, 0);
  VertexSet s(k);
  for_each_subset(n, k, [&](const std::vector<int>& pick) {
    std::copy(pick.begin(), pick.end(), s.begin());
    int d = solver.distance(s).value();
    for (int v : s) profile.eccentricity[v] = std::max(profile.eccentricity[v], d);
  });
  profile.radius = *std::min_element(profile.eccentricity.begin(), profile.eccentricity.end());
  profile.diameter = *std::max_element(profile.eccentricity.begin(), profile.eccentricity.end());
  for (int v = 0; v < n; ++v)
    if (profile.eccentricity[v] == profile.radius) profile.center.push_back(v);
  return profile;
}

long long steiner_wiener_index(const Graph& g, int k, int max_terminals) {
  int n = g.order();
  if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");
  if (!is_connected(g)) throw std::invalid_argument("steiner_wiener_index requires a connected graph");
  SteinerSolver solver(g, max_terminals);
  long long total = 0;
  VertexSet s(k);
  for_each_subset(n, k, [&](const std::vector<int>& pick) {
    std::copy(pick.begin(), pick.end(), s.begin());
    total += solver.distance(s).value();
  });
  return total;
}

Rational average_steiner_distance(const Graph& g, int k, int max_terminals) {
  if (k < 2 || k > g.order()) throw std::invalid_argument("k must be in 2..n");
  long long total = steiner_wiener_index(g, k, max_terminals);
  long long count = binomial(g.order(), k);
  long long d = std::gcd(total, count);
  if (d == 0) d = 1;
  return Rational{total / d, count / d};
}

}  // namespace steiner
