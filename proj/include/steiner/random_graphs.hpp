#pragma once

#include <cstdint>

#include "steiner/graph.hpp"

namespace steiner {

// Deterministic seeded sampler: draws G(n, p) up to 100 times and returns the
// first connected draw; otherwise falls back to a random spanning tree plus
// independent extra edges with probability p.  Same (n, p, seed) -> same graph.
// Requires n >= 1 and p in (0, 1).
Graph random_connected_graph(int n, double p, std::uint64_t seed);

}  // namespace steiner
