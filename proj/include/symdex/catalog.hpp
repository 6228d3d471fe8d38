#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symdex/root_system.hpp"

namespace symdex::catalog {

using roots::LengthClass;
using roots::Root;
using roots::RootSystemType;

// One row of the master table of irreducible noncompact symmetric-space
// families (33 rows, grouped by diagram block).
enum class FamilyId {
  RH,         // SO(1,1+k)/SO(1+k)              A1, mult k, k >= 1
  SLR,        // SL(r+1,R)/SO(r+1)              A_r, 1, r >= 2
  SLC,        // SL(r+1,C)/SU(r+1)              A_r, 2, r >= 2
  SUStar,     // SU*(2r+2)/Sp(r+1)              A_r, 4, r >= 2
  E6m26,      // E6^-26/F4                      A2, 8
  SOrrk,      // SO(r,r+k)/SO(r)SO(r+k)         B_r, 1..1,k, r >= 2, k >= 1
  SOoddC,     // SO(2r+1,C)/SO(2r+1)            B_r, 2, r >= 2
  SpRU,       // Sp(r,R)/U(r)                   C_r, 1, r >= 3
  SUrr,       // SU(r,r)/S(U(r)U(r))            C_r, 2..2,1, r >= 3
  SpC,        // Sp(r,C)/Sp(r)                  C_r, 2, r >= 3
  SOStar4r,   // SO*(4r)/U(2r)                  C_r, 4..4,1, r >= 3
  Sprr,       // Sp(r,r)/Sp(r)Sp(r)             C_r, 4..4,3, r >= 2 (B2-typed at r=2)
  E7m25,      // E7^-25/E6U1                    C3, 8,8,1
  SOrr,       // SO(r,r)/SO(r)SO(r)             D_r, 1, r >= 4
  SOevenC,    // SO(2r,C)/SO(2r)                D_r, 2, r >= 4
  SUpq,       // SU(r,r+k)/S(U(r)U(r+k))        BC_r, 2;(2k,1), r,k >= 1
  Sppq,       // Sp(r,r+k)/Sp(r)Sp(r+k)         BC_r, 4;(4k,3), r,k >= 1
  SOStar4r2,  // SO*(4r+2)/U(2r+1)              BC_r, 4;(4,1), r >= 2
  E6m14,      // E6^-14/Spin10U1                BC2, 6;(8,1)
  F4m20,      // OH^2 = F4^-20/Spin9            BC1, (8,7)
  E66,        // E6^6/Sp4                       E6, 1
  E6C,        // E6(C)/E6                       E6, 2
  E77,        // E7^7/SU8                       E7, 1
  E7C,        // E7(C)/E7                       E7, 2
  E88,        // E8^8/SO16                      E8, 1
  E8C,        // E8(C)/E8                       E8, 2
  F44,        // F4^4/Sp3Sp1                    F4, 1,1
  E62,        // E6^2/SU6Sp1                    F4, 1,2
  E7m5,       // E7^-5/SO12Sp1                  F4, 1,4
  E8m24,      // E8^-24/E7Sp1                   F4, 1,8
  F4C,        // F4(C)/F4                       F4, 2,2
  G22,        // G2^2/SO4                       G2, 1,1
  G2C,        // G2(C)/G2                       G2, 2,2
};

using MultiplicityMap = std::map<LengthClass, int>;

struct SpaceInstance {
  FamilyId family;
  int r = 0;  // rank parameter (meaningful where the family is r-indexed)
  int k = 0;  // second parameter, 0 when absent

  auto operator<=>(const SpaceInstance&) const = default;
};

struct SpaceFamily {
  FamilyId id;
  std::string name_template;  // e.g. "SO(r,r+k)/SO(r)SO(r+k)"
  std::string constraints;    // e.g. "r >= 2, k >= 1"
  std::string diagram;        // ASCII Dynkin sketch
  bool has_r;
  bool has_k;
  int min_r;  // for r-indexed families
};

const std::vector<SpaceFamily>& all_families();
const SpaceFamily& family(FamilyId id);

// Validated construction; throws std::invalid_argument on constraint breach.
SpaceInstance make_instance(FamilyId id, int r = 0, int k = 0);

int rank(const SpaceInstance& s);
RootSystemType root_type(const SpaceInstance& s);
MultiplicityMap mult_map(const SpaceInstance& s);
std::string name(const SpaceInstance& s);
std::vector<std::string> aliases(const SpaceInstance& s);

// dim M = rank + sum of root multiplicities over the positive roots
// (doubled BC roots counted separately with their own multiplicity).
int dimension(const SpaceInstance& s);

int multiplicity(const SpaceInstance& s, const Root& x);

struct Reducible {};
struct Unknown {};
using IdentifyResult = std::variant<SpaceInstance, Reducible, Unknown>;

// Inverse catalog lookup from (normalized irreducible type, multiplicities).
IdentifyResult identify(RootSystemType t, const MultiplicityMap& m);

// All instances with rank <= rank_cap and parameter k <= k_cap,
// deduplicated through aliases (the table constraints make this automatic).
std::vector<SpaceInstance> enumerate_instances(int rank_cap, int k_cap);

struct Resolved {
  SpaceInstance instance;
  bool was_alias = false;
  std::string note;
};

// Case-insensitive name resolution ("SO(3,3)" -> SL(4,R)/SO(4) etc).
std::optional<Resolved> resolve_name(const std::string& text);

// Nearest catalog names, for error messages.
std::vector<std::string> name_suggestions(const std::string& text, int count = 3);

}  // namespace symdex::catalog
