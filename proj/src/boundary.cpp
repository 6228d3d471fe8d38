#include "symdex/boundary.hpp"

#include <stdexcept>

namespace symdex::boundary {

using catalog::identify;
using catalog::IdentifyResult;
using catalog::MultiplicityMap;
using roots::Root;
using roots::RootSystem;
using roots::SubsystemComponent;

namespace {

SpaceInstance identify_factor(const SpaceInstance& s, const SubsystemComponent& comp) {
  MultiplicityMap m;
  for (const auto& [cls, rep] : comp.class_reps) m[cls] = catalog::multiplicity(s, rep);
  // inherited multiplicities must be constant on each class of the component
  for (const auto& x : comp.positive)
    if (catalog::multiplicity(s, x) != m.at(comp.root_class.at(x)))
      throw std::logic_error("inherited multiplicity not class-constant in " +
                             catalog::name(s));
  IdentifyResult res = identify(comp.type, m);
  if (auto* inst = std::get_if<SpaceInstance>(&res)) return *inst;
  throw std::logic_error("boundary factor not identified: " + comp.type.str() +
                         " inside " + catalog::name(s));
}

}  // namespace

BoundaryDecomposition boundary_component(const SpaceInstance& s, const std::set<int>& phi) {
  const auto t = catalog::root_type(s);
  const int r = catalog::rank(s);
  for (int i : phi)
    if (i < 1 || i > r) throw std::invalid_argument("boundary_component: node out of range");

  BoundaryDecomposition out;
  out.phi = phi;
  out.euclidean_rank = r - static_cast<int>(phi.size());

  int dim_F_direct = r;  // rank + roots supported on phi, with multiplicities
  for (const auto& comps = roots::subsystem(t, phi); const auto& comp : comps) {
    out.factors.push_back(identify_factor(s, comp));
    for (const auto& x : comp.positive) dim_F_direct += catalog::multiplicity(s, x);
  }

  for (const auto& f : out.factors) out.dim_B += catalog::dimension(f);
  out.dim_F = out.euclidean_rank + out.dim_B;
  if (out.dim_F != dim_F_direct)
    throw std::logic_error("boundary dimension bookkeeping mismatch for " + catalog::name(s));
  return out;
}

int codim_F(const SpaceInstance& s, int i) {
  const auto t = catalog::root_type(s);
  const auto& rs = RootSystem::get(t);
  if (i < 1 || i > catalog::rank(s)) throw std::invalid_argument("codim_F: node out of range");
  int sum = 0;
  for (const auto& x : rs.positive())
    if (x.coeffs[i - 1] > 0) sum += catalog::multiplicity(s, x);
  return sum;
}

std::set<SpaceInstance> irreducible_boundary_components(const SpaceInstance& s) {
  const int r = catalog::rank(s);
  if (r < 2)
    throw std::invalid_argument("irreducible_boundary_components requires rank >= 2");
  const auto t = catalog::root_type(s);

  std::set<SpaceInstance> out;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    std::set<int> phi;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) phi.insert(i + 1);
    // connectivity check
    auto comps = roots::subsystem(t, phi);
    if (comps.size() != 1) continue;
    out.insert(identify_factor(s, comps[0]));
  }
  return out;
}

}  // namespace symdex::boundary
