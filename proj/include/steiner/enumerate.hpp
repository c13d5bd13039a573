#pragma once

#include <cstdint>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Canonical form of g: the minimum, over all vertex relabelings, of the packed
// upper-triangle adjacency code.  Two graphs are isomorphic iff their codes
// match.  Backtracking with prefix pruning; requires order <= 11 (55 code bits).
std::uint64_t canonical_code(const Graph& g);

// Graphs of each order 1..max_n, one representative per isomorphism class,
// sorted by canonical code.  Built by extending every (n-1)-vertex graph with
// one new vertex over all attachment subsets and deduplicating canonically.
// result[k] holds the graphs of order k; result[0] is empty.
std::vector<std::vector<Graph>> graphs_by_order(int max_n);

std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

}  // namespace steiner
