#pragma once

#include <set>
#include <vector>

#include "symdex/boundary.hpp"
#include "symdex/catalog.hpp"

namespace symdex::nss {

using boundary::BoundaryDecomposition;
using catalog::SpaceInstance;

// Nodes i with highest-root coefficient 1; the isotropy orbit K.H^i is a
// symmetric R-space exactly at these nodes. Canonicalized under diagram
// automorphisms unless raw = true.
std::set<int> symmetric_r_space_nodes(const SpaceInstance& s, bool raw = false);

// One maximal non-semisimple totally geodesic submanifold R x B_i.
struct NssMaximal {
  int node = 0;
  BoundaryDecomposition factor_B;
  int codim = 0;
};

// Classification of the maximal non-semisimple totally geodesic
// submanifolds: one entry per canonical node with highest-root coefficient 1.
// Empty for BC/E8/F4/G2 root systems and for rank-1 spaces (a geodesic line
// is not maximal once a hyperbolic hyperplane exists).
std::vector<NssMaximal> maximal_nss_submanifolds(const SpaceInstance& s, bool raw = false);

// True iff the congruence-mod-t root set {a : a(H^i) == 0 mod t} strictly
// contains {a : a(H^i) = 0} and is closed under root addition. This is the
// combinatorial mechanism that kills maximality of F_i when delta_i >= 2.
bool mod_t_extension_strict(const SpaceInstance& s, int i, int t);

}  // namespace symdex::nss
