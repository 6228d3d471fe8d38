#pragma once

#include <set>
#include <vector>

#include "symdex/catalog.hpp"

namespace symdex::boundary {

using catalog::SpaceInstance;

// Combinatorial boundary data for a subset phi of simple roots: the totally
// geodesic F_phi splits as B_phi x R^{r-|phi|}, with B_phi a product of
// irreducible factors, one per connected component of phi.
struct BoundaryDecomposition {
  std::set<int> phi;
  int euclidean_rank = 0;
  std::vector<SpaceInstance> factors;
  int dim_B = 0;
  int dim_F = 0;
};

BoundaryDecomposition boundary_component(const SpaceInstance& s, const std::set<int>& phi);

// Sum of multiplicities of the positive roots with positive i-th coefficient;
// equals dim(s) - dim_F(Lambda \ {i}).
int codim_F(const SpaceInstance& s, int i);

// Canonical instances arising as single factors over connected nonempty
// proper subsets of the simple roots. Requires rank >= 2.
std::set<SpaceInstance> irreducible_boundary_components(const SpaceInstance& s);

}  // namespace symdex::boundary
