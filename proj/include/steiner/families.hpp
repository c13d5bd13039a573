#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Parameterized graph families used by the extremal characterizations.
//
//   H1..H4   complement obstruction shapes (order n >= 5):
//            H1: K4 core with a,b,c,d pendant leaves per core vertex,
//                0 <= a <= b <= c <= d, d >= 1, a+b+c+d = n-4.
//            H2: K4 minus one edge; a leaves on one shared vertex, b on the
//                other, c degree-2 vertices joining the nonadjacent pair,
//                0 <= a <= b, c >= 0, a+b+c = n-4.
//            H3: 4-cycle; a degree-2 vertices across one diagonal, b across
//                the other diagonal, 0 <= a <= b, b >= 1, a+b = n-4.
//            H4: claw; a leaves on the center, b vertices adjacent to all
//                three claw tips, 0 <= a <= b, b >= 1, a+b = n-4.
//   T        tree made of a spine with two branch paths: branch of length b
//            at spine position a+1, branch of length c at spine position
//            n-b-c-d (1-indexed), a+b+c+d <= n-1.  a and d are the end
//            segment lengths; up to 4 leaves.
//   Delta    T's shape with the first branch point thickened into a triangle
//            sitting on a spine edge, pendant path of length b hanging from
//            the apex; unicyclic.  a+b+c+d <= n-2 and a+b+c <= n-3.
//   DeltaPrime  both branch points thickened the same way; bicyclic, two
//            triangles.  a+b+c+d <= n-3, a+b+c <= n-4, b+c+d <= n-4.
//   G1/G2/G3 K4 / 4-cycle / K4-minus-an-edge core with pendant paths of
//            lengths a,b,c,d, one per core vertex, a+b+c+d = n-4 (n >= 4).
//
// Labels are deterministic: core or spine first, then attachment vertices in
// parameter order.  Unused parameters (H2's d; H3/H4's c and d) must be 0.

enum class Family { H1, H2, H3, H4, T, Delta, DeltaPrime, G1, G2, G3 };

struct FamilyParams {
  Family family = Family::T;
  int a = 0, b = 0, c = 0, d = 0;
  int n = 0;
};

const char* family_name(Family f);
std::optional<Family> family_from_string(const std::string& name);
int family_arity(Family f);  // how many of a,b,c,d the family uses

// Empty when the tuple is valid; otherwise the violated constraint.
std::optional<std::string> check_params(const FamilyParams& p);

// Builds the family member; throws std::invalid_argument naming the violated
// constraint on a bad tuple.
Graph generate_family(const FamilyParams& p);

// All valid tuples for the given order, lexicographic in (a, b, c, d).
std::vector<FamilyParams> sweep_params(Family f, int n);

bool is_tree_with_at_most_4_leaves(const Graph& g);

}  // namespace steiner
