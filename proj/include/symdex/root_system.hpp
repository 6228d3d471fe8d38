#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace symdex::roots {

enum class Kind { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string kind_name(Kind k);

// Restricted root system type. Possibly non-reduced (BC). Rank bounds follow
// the classical constraints: A >= 1, B >= 2, C >= 3, D >= 4, BC >= 1; the
// exceptional kinds have fixed rank. C2/D2/D3 are not representable here:
// subsystem classification normalizes them away (C2 -> B2, D3 -> A3, D2
// splits into two A1 components).
struct RootSystemType {
  Kind kind;
  int rank;

  static RootSystemType make(Kind k, int rank);
  static bool valid(Kind k, int rank);

  std::string str() const;  // "A3", "BC2", "E6", ...
  auto operator<=>(const RootSystemType&) const = default;
};

// single: simply-laced types; long/short: B/C/F4/G2; bc_*: the three
// Weyl orbits of a BC system.
enum class LengthClass { Single, Long, Short, BcMedium, BcShort, BcDouble };

std::string length_class_name(LengthClass c);

// A root in simple-root coordinates; entry i is the value on the dual basis
// vector H^{i+1}. All entries >= 0 (positive) or all <= 0 (negative).
struct Root {
  std::vector<int> coeffs;

  auto operator<=>(const Root&) const = default;
  Root operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }
  friend Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
  }
  friend Root operator*(int s, const Root& a) {
    Root r = a;
    for (int& c : r.coeffs) c *= s;
    return r;
  }
  std::string str() const;
};

// Immutable generated root system. Built once per type from an explicit
// integer coordinate model and cached.
class RootSystem {
 public:
  static const RootSystem& get(RootSystemType t);

  RootSystemType type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<Root>& positive() const { return positive_; }
  const Root& highest() const { return highest_; }

  bool is_positive(const Root& x) const { return classes_.count(x) > 0; }
  bool is_root(const Root& x) const;
  LengthClass class_of(const Root& x) const;  // throws std::domain_error off the root set

  // Cartan matrix, cartan()[i][j] = 2(a_i, a_j)/(a_j, a_j), 0-based.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // Dynkin diagram adjacency (1-based node labels).
  bool adjacent(int i, int j) const;

 private:
  explicit RootSystem(RootSystemType t);

  RootSystemType type_;
  std::vector<Root> positive_;
  std::map<Root, LengthClass> classes_;
  Root highest_;
  std::vector<std::vector<int>> cartan_;
};

std::set<Root> positive_roots(RootSystemType t);
Root highest_root(RootSystemType t);
LengthClass length_class_of(RootSystemType t, const Root& x);

// One irreducible component of a root subsystem, classified and put in
// canonical (Bourbaki) node order after the low-rank normalizations
// B1/C1 -> A1, C2 -> B2, D3 -> A3.
struct SubsystemComponent {
  RootSystemType type;
  // nodes[i] = ambient node (1-based) playing the role of canonical node i+1.
  std::vector<int> nodes;
  // Ambient-coordinate representative of each length class of `type`.
  std::map<LengthClass, Root> class_reps;
  // All positive ambient roots supported on this component.
  std::vector<Root> positive;
  // Length class of each such root, intrinsic to the component.
  std::map<Root, LengthClass> root_class;
};

// Computes the root subsystem spanned by the simple roots in `phi`
// (1-based node indices) and classifies its irreducible components.
std::vector<SubsystemComponent> subsystem(RootSystemType t, const std::set<int>& phi);

// Full automorphism group of the Dynkin diagram, as permutations of
// 1-based node labels (perm[i-1] = image of node i).
std::vector<std::vector<int>> diagram_automorphisms(RootSystemType t);

// Orbit representative (smallest node label) of `node` under the diagram
// automorphism group.
int canonical_node(RootSystemType t, int node);

}  // namespace symdex::roots
