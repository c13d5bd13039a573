#pragma once

#include <array>

#include "steiner/graph.hpp"

namespace steiner {

// The four obstruction shapes are spanning subgraphs of the complement that
// force four chosen vertices to need at least two outside helpers, pushing the
// Steiner distance of a 4-set to 5 or more.  Each test below asks whether the
// complement contains the shape through *some* labeling, phrased directly in
// terms of which core vertices every outside vertex must see.  All take the
// complement itself and require order >= 5.

// A 4-clique such that every outside vertex has a neighbor inside it.
bool spanning_h1(const Graph& gbar);

// An ordered 4-tuple carrying the five edges u1u2, u1u3, u2u3, u2u4, u3u4
// such that every outside vertex is adjacent to u2, or to u3, or to both u1
// and u4.
bool spanning_h2(const Graph& gbar);

// A 4-cycle such that every outside vertex is adjacent to both ends of one
// of the cycle's two diagonals.
bool spanning_h3(const Graph& gbar);

// A claw center u3 adjacent to u1, u2, u4 such that every outside vertex is
// adjacent to u3 or to all of u1, u2, u4 -- and at least one outside vertex
// is adjacent to all of u1, u2, u4.
bool spanning_h4(const Graph& gbar);

// Exact test for "the Steiner 4-diameter equals 3": n = 4, or the minimum
// degree is at least n-3 and the complement has no 4-cycle subgraph.
// Requires a connected graph with n >= 4.
bool predicate_sdiam4_is_3(const Graph& g);

// Exact test for "the Steiner 4-diameter equals 4", n >= 5:
//   (i)  minimum degree n-3 and the complement contains a 4-cycle, or
//   (ii) minimum degree at most n-4 and none of the four obstruction shapes
//        spans the complement.
struct Sdiam4Is4Verdict {
  bool value = false;
  bool condition_i = false;
  bool condition_ii = false;
  std::array<bool, 4> h_spans{};  // which obstruction shapes span the complement
};
Sdiam4Is4Verdict predicate_sdiam4_is_4(const Graph& g);

// Exact test for "the Steiner k-diameter equals n-1" via the non-cut vertex
// count: true iff at most k vertices are non-cut.  Requires connectivity and
// 3 <= k <= n-1.
bool predicate_sdiam_k_is_nminus1(const Graph& g, int k);

// Every verdict for one graph, evaluated unconditionally, plus the computed
// Steiner 4-diameter and a cross-check that each predicate matches it.  At
// n = 5 the value classes "4" and "n-1" coincide and both predicates are
// expected to hold together.
struct ClassificationRecord {
  int n = 0;
  int min_degree = 0;
  int sdiam4 = 0;
  bool value_is_3 = false;
  Sdiam4Is4Verdict value_is_4;
  bool value_is_nminus1 = false;
  bool consistent = false;
};
ClassificationRecord classify(const Graph& g);

}  // namespace steiner
