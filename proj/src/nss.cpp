#include "symdex/nss.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdex::nss {

using roots::Root;
using roots::RootSystem;

std::set<int> symmetric_r_space_nodes(const SpaceInstance& s, bool raw) {
  const auto t = catalog::root_type(s);
  const Root delta = roots::highest_root(t);
  std::set<int> nodes;
  for (int i = 1; i <= t.rank; ++i)
    if (delta.coeffs[i - 1] == 1) nodes.insert(i);
  if (raw) return nodes;
  std::set<int> canon;
  for (int i : nodes) canon.insert(roots::canonical_node(t, i));
  return canon;
}

std::vector<NssMaximal> maximal_nss_submanifolds(const SpaceInstance& s, bool raw) {
  std::vector<NssMaximal> out;
  const int r = catalog::rank(s);
  if (r < 2) return out;  // no rank-1 rows: R is contained in a hyperplane factor
  for (int i : symmetric_r_space_nodes(s, raw)) {
    std::set<int> phi;
    for (int j = 1; j <= r; ++j)
      if (j != i) phi.insert(j);
    NssMaximal m;
    m.node = i;
    m.factor_B = boundary::boundary_component(s, phi);
    m.codim = boundary::codim_F(s, i);
    if (m.codim != catalog::dimension(s) - m.factor_B.dim_F)
      throw std::logic_error("codim bookkeeping mismatch in " + catalog::name(s));
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const NssMaximal& a, const NssMaximal& b) { return a.node < b.node; });
  return out;
}

bool mod_t_extension_strict(const SpaceInstance& s, int i, int t) {
  if (t < 2) throw std::invalid_argument("mod_t_extension_strict: t must be a prime >= 2");
  for (int d = 2; d * d <= t; ++d)
    if (t % d == 0) throw std::invalid_argument("mod_t_extension_strict: t must be prime");
  const auto type = catalog::root_type(s);
  const auto& rs = RootSystem::get(type);
  if (i < 1 || i > type.rank) throw std::invalid_argument("node out of range");
  const int delta_i = rs.highest().coeffs[i - 1];
  if (t > delta_i)
    throw std::invalid_argument("mod_t_extension_strict requires t <= delta_i");

  std::vector<Root> all;
  for (const auto& x : rs.positive()) {
    all.push_back(x);
    all.push_back(-x);
  }
  std::set<Root> congruent, zero;
  for (const auto& x : all) {
    int c = x.coeffs[i - 1];
    if (c % t == 0) congruent.insert(x);
    if (c == 0) zero.insert(x);
  }
  if (congruent.size() <= zero.size()) return false;  // not strict

  std::set<Root> allset(all.begin(), all.end());
  for (const auto& x : congruent)
    for (const auto& y : congruent) {
      Root sum = x + y;
      if (allset.count(sum) && !congruent.count(sum)) return false;
    }
  return true;
}

}  // namespace symdex::nss
