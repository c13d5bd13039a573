#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Cost caps.  These bound the exponential cores (3^k subset DP, 2^n superset
// scan); callers with bigger appetites pass larger values explicitly.
inline constexpr int kDefaultMaxTerminals = 10;
inline constexpr int kDefaultMaxOracleOrder = 16;

// Outcome of a Steiner distance query.  value is the minimum number of edges
// of a connected subgraph containing the terminal set -- always achieved by a
// tree -- and witness lists the edges of one optimal tree.  When the terminals
// straddle components there is no such subgraph: value is empty and so is the
// witness.  A single terminal has value 0 (the one-vertex tree).
struct SteinerResult {
  std::optional<int> value;
  std::vector<std::pair<int, int>> witness;
  bool reachable() const { return value.has_value(); }
};

struct SteinerProfile {
  int k = 0;
  std::vector<int> eccentricity;  // e_k(v) for every vertex
  int radius = 0;                 // min eccentricity
  int diameter = 0;               // max eccentricity
  VertexSet center;               // vertices attaining the radius
};

// Exact reduced fraction with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};
std::string to_string(const Rational& r);

// Shared machinery for many queries against one graph: all-pairs BFS distances
// are computed once, DP buffers are reused across terminal sets.
class SteinerSolver {
 public:
  explicit SteinerSolver(const Graph& g, int max_terminals = kDefaultMaxTerminals);

  std::optional<int> distance(const VertexSet& terminals);
  SteinerResult distance_tree(const VertexSet& terminals);

  const Graph& graph() const { return *g_; }

 private:
  int solve(const VertexSet& terminals);  // returns optimum or kUnreachable
  std::vector<std::pair<int, int>> reconstruct(const VertexSet& terminals);

  const Graph* g_;
  int max_terminals_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> dp_;          // [mask * n + v]
  std::vector<int> merge_val_;   // scratch for the current mask
  std::vector<std::uint16_t> split_;  // argmin submask of the merge step
  std::vector<std::int16_t> grow_from_;
};

// Subset-DP Steiner distance (terminal masks with merge and path-growth
// steps), with one optimal tree reconstructed as witness.
SteinerResult steiner_distance(const Graph& g, const VertexSet& terminals,
                               int max_terminals = kDefaultMaxTerminals);

// Independent brute-force reference: scans every vertex superset of the
// terminals whose induced subgraph is connected and keeps the smallest, whose
// spanning tree is the witness.  Exponential in order; refuses orders above
// the cap.
SteinerResult steiner_distance_oracle(const Graph& g, const VertexSet& terminals,
                                      int max_order = kDefaultMaxOracleOrder);

// max over k-sets containing v.  Requires a connected graph and 2 <= k <= n.
int steiner_eccentricity(const Graph& g, int v, int k,
                         int max_terminals = kDefaultMaxTerminals);

// All eccentricities in one sweep over the k-subsets, plus radius, diameter
// and center.
SteinerProfile steiner_profile(const Graph& g, int k,
                               int max_terminals = kDefaultMaxTerminals);

// Sum of Steiner distances over all k-subsets.  Requires connectivity and
// 1 <= k <= n.
long long steiner_wiener_index(const Graph& g, int k,
                               int max_terminals = kDefaultMaxTerminals);

// steiner_wiener_index / C(n, k) as an exact reduced fraction; 2 <= k <= n.
Rational average_steiner_distance(const Graph& g, int k,
                                  int max_terminals = kDefaultMaxTerminals);

}  // namespace steiner
