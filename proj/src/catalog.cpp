#include "symdex/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace symdex::catalog {

using roots::Kind;
using roots::RootSystem;

namespace {

std::string num(int v) { return std::to_string(v); }

const std::vector<SpaceFamily> kFamilies = {
    {FamilyId::RH, "SO(1,1+k)/SO(1+k)", "k >= 1", "o", true, true, 1},
    {FamilyId::SLR, "SL(r+1,R)/SO(r+1)", "r >= 2", "o-o-...-o", true, false, 2},
    {FamilyId::SLC, "SL(r+1,C)/SU(r+1)", "r >= 2", "o-o-...-o", true, false, 2},
    {FamilyId::SUStar, "SU*(2r+2)/Sp(r+1)", "r >= 2", "o-o-...-o", true, false, 2},
    {FamilyId::E6m26, "E6^-26/F4", "", "o-o", false, false, 2},
    {FamilyId::SOrrk, "SO(r,r+k)/SO(r)SO(r+k)", "r >= 2, k >= 1", "o-o-...-o=>o", true, true, 2},
    {FamilyId::SOoddC, "SO(2r+1,C)/SO(2r+1)", "r >= 2", "o-o-...-o=>o", true, false, 2},
    {FamilyId::SpRU, "Sp(r,R)/U(r)", "r >= 3", "o-o-...-o<=o", true, false, 3},
    {FamilyId::SUrr, "SU(r,r)/S(U(r)U(r))", "r >= 3", "o-o-...-o<=o", true, false, 3},
    {FamilyId::SpC, "Sp(r,C)/Sp(r)", "r >= 3", "o-o-...-o<=o", true, false, 3},
    {FamilyId::SOStar4r, "SO*(4r)/U(2r)", "r >= 3", "o-o-...-o<=o", true, false, 3},
    {FamilyId::Sprr, "Sp(r,r)/Sp(r)Sp(r)", "r >= 2", "o-o-...-o<=o", true, false, 2},
    {FamilyId::E7m25, "E7^-25/E6U1", "", "o-o<=o", false, false, 3},
    {FamilyId::SOrr, "SO(r,r)/SO(r)SO(r)", "r >= 4", "o-o-...-o<(o,o)", true, false, 4},
    {FamilyId::SOevenC, "SO(2r,C)/SO(2r)", "r >= 4", "o-o-...-o<(o,o)", true, false, 4},
    {FamilyId::SUpq, "SU(r,r+k)/S(U(r)U(r+k))", "r >= 1, k >= 1", "o-o-...-o<=>(o)", true, true, 1},
    {FamilyId::Sppq, "Sp(r,r+k)/Sp(r)Sp(r+k)", "r >= 1, k >= 1", "o-o-...-o<=>(o)", true, true, 1},
    {FamilyId::SOStar4r2, "SO*(4r+2)/U(2r+1)", "r >= 2", "o-o-...-o<=>(o)", true, false, 2},
    {FamilyId::E6m14, "E6^-14/Spin10U1", "", "o<=>(o)", false, false, 2},
    {FamilyId::F4m20, "F4^-20/Spin9", "", "(o)", false, false, 1},
    {FamilyId::E66, "E6^6/Sp4", "", "E6 graph", false, false, 6},
    {FamilyId::E6C, "E6(C)/E6", "", "E6 graph", false, false, 6},
    {FamilyId::E77, "E7^7/SU8", "", "E7 graph", false, false, 7},
    {FamilyId::E7C, "E7(C)/E7", "", "E7 graph", false, false, 7},
    {FamilyId::E88, "E8^8/SO16", "", "E8 graph", false, false, 8},
    {FamilyId::E8C, "E8(C)/E8", "", "E8 graph", false, false, 8},
    {FamilyId::F44, "F4^4/Sp3Sp1", "", "o-o=>o-o", false, false, 4},
    {FamilyId::E62, "E6^2/SU6Sp1", "", "o-o=>o-o", false, false, 4},
    {FamilyId::E7m5, "E7^-5/SO12Sp1", "", "o-o=>o-o", false, false, 4},
    {FamilyId::E8m24, "E8^-24/E7Sp1", "", "o-o=>o-o", false, false, 4},
    {FamilyId::F4C, "F4(C)/F4", "", "o-o=>o-o", false, false, 4},
    {FamilyId::G22, "G2^2/SO4", "", "o<==o", false, false, 2},
    {FamilyId::G2C, "G2(C)/G2", "", "o<==o", false, false, 2},
};

void check(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("catalog: " + what);
}

}  // namespace

const std::vector<SpaceFamily>& all_families() { return kFamilies; }

const SpaceFamily& family(FamilyId id) {
  for (const auto& f : kFamilies)
    if (f.id == id) return f;
  throw std::logic_error("unknown family id");
}

SpaceInstance make_instance(FamilyId id, int r, int k) {
  switch (id) {
    case FamilyId::RH:
      check(k >= 1, "SO(1,1+k) needs k >= 1");
      return {id, 1, k};
    case FamilyId::SLR:
    case FamilyId::SLC:
    case FamilyId::SUStar:
      check(r >= 2, "rank >= 2 required");
      return {id, r, 0};
    case FamilyId::SOrrk:
      check(r >= 2 && k >= 1, "SO(r,r+k) needs r >= 2, k >= 1");
      return {id, r, k};
    case FamilyId::SOoddC:
      check(r >= 2, "rank >= 2 required");
      return {id, r, 0};
    case FamilyId::SpRU:
    case FamilyId::SUrr:
    case FamilyId::SpC:
    case FamilyId::SOStar4r:
      check(r >= 3, "rank >= 3 required");
      return {id, r, 0};
    case FamilyId::Sprr:
      check(r >= 2, "Sp(r,r) needs r >= 2");
      return {id, r, 0};
    case FamilyId::SOrr:
    case FamilyId::SOevenC:
      check(r >= 4, "rank >= 4 required");
      return {id, r, 0};
    case FamilyId::SUpq:
    case FamilyId::Sppq:
      check(r >= 1 && k >= 1, "needs r >= 1, k >= 1");
      return {id, r, k};
    case FamilyId::SOStar4r2:
      check(r >= 2, "SO*(4r+2) needs r >= 2");
      return {id, r, 0};
    default:
      return {id, family(id).min_r, 0};  // fixed families; min_r stores the rank
  }
}

int rank(const SpaceInstance& s) {
  switch (s.family) {
    case FamilyId::RH:
    case FamilyId::F4m20: return 1;
    case FamilyId::E6m26:
    case FamilyId::E6m14:
    case FamilyId::G22:
    case FamilyId::G2C: return 2;
    case FamilyId::E7m25: return 3;
    case FamilyId::F44:
    case FamilyId::E62:
    case FamilyId::E7m5:
    case FamilyId::E8m24:
    case FamilyId::F4C: return 4;
    case FamilyId::E66:
    case FamilyId::E6C: return 6;
    case FamilyId::E77:
    case FamilyId::E7C: return 7;
    case FamilyId::E88:
    case FamilyId::E8C: return 8;
    default: return s.r;
  }
}

RootSystemType root_type(const SpaceInstance& s) {
  using RT = RootSystemType;
  switch (s.family) {
    case FamilyId::RH: return RT::make(Kind::A, 1);
    case FamilyId::SLR:
    case FamilyId::SLC:
    case FamilyId::SUStar: return RT::make(Kind::A, s.r);
    case FamilyId::E6m26: return RT::make(Kind::A, 2);
    case FamilyId::SOrrk:
    case FamilyId::SOoddC: return RT::make(Kind::B, s.r);
    case FamilyId::SpRU:
    case FamilyId::SUrr:
    case FamilyId::SpC:
    case FamilyId::SOStar4r: return RT::make(Kind::C, s.r);
    case FamilyId::Sprr:
      return s.r == 2 ? RT::make(Kind::B, 2) : RT::make(Kind::C, s.r);
    case FamilyId::E7m25: return RT::make(Kind::C, 3);
    case FamilyId::SOrr:
    case FamilyId::SOevenC: return RT::make(Kind::D, s.r);
    case FamilyId::SUpq:
    case FamilyId::Sppq: return RT::make(Kind::BC, s.r);
    case FamilyId::SOStar4r2: return RT::make(Kind::BC, s.r);
    case FamilyId::E6m14: return RT::make(Kind::BC, 2);
    case FamilyId::F4m20: return RT::make(Kind::BC, 1);
    case FamilyId::E66:
    case FamilyId::E6C: return RT::make(Kind::E6, 6);
    case FamilyId::E77:
    case FamilyId::E7C: return RT::make(Kind::E7, 7);
    case FamilyId::E88:
    case FamilyId::E8C: return RT::make(Kind::E8, 8);
    case FamilyId::F44:
    case FamilyId::E62:
    case FamilyId::E7m5:
    case FamilyId::E8m24:
    case FamilyId::F4C: return RT::make(Kind::F4, 4);
    case FamilyId::G22:
    case FamilyId::G2C: return RT::make(Kind::G2, 2);
  }
  throw std::logic_error("root_type: unreachable");
}

MultiplicityMap mult_map(const SpaceInstance& s) {
  using LC = LengthClass;
  switch (s.family) {
    case FamilyId::RH: return {{LC::Single, s.k}};
    case FamilyId::SLR: return {{LC::Single, 1}};
    case FamilyId::SLC: return {{LC::Single, 2}};
    case FamilyId::SUStar: return {{LC::Single, 4}};
    case FamilyId::E6m26: return {{LC::Single, 8}};
    case FamilyId::SOrrk: return {{LC::Long, 1}, {LC::Short, s.k}};
    case FamilyId::SOoddC: return {{LC::Long, 2}, {LC::Short, 2}};
    case FamilyId::SpRU: return {{LC::Long, 1}, {LC::Short, 1}};
    case FamilyId::SUrr: return {{LC::Long, 1}, {LC::Short, 2}};
    case FamilyId::SpC: return {{LC::Long, 2}, {LC::Short, 2}};
    case FamilyId::SOStar4r: return {{LC::Long, 1}, {LC::Short, 4}};
    case FamilyId::Sprr:
      // same map for the C_r rows and the B2-typed r = 2 row: the C2 -> B2
      // normalization swaps the classes, which lands on {long 3, short 4}
      return {{LC::Long, 3}, {LC::Short, 4}};
    case FamilyId::E7m25: return {{LC::Long, 1}, {LC::Short, 8}};
    case FamilyId::SOrr: return {{LC::Single, 1}};
    case FamilyId::SOevenC: return {{LC::Single, 2}};
    case FamilyId::SUpq:
      if (s.r == 1) return {{LC::BcShort, 2 * s.k}, {LC::BcDouble, 1}};
      return {{LC::BcMedium, 2}, {LC::BcShort, 2 * s.k}, {LC::BcDouble, 1}};
    case FamilyId::Sppq:
      if (s.r == 1) return {{LC::BcShort, 4 * s.k}, {LC::BcDouble, 3}};
      return {{LC::BcMedium, 4}, {LC::BcShort, 4 * s.k}, {LC::BcDouble, 3}};
    case FamilyId::SOStar4r2: return {{LC::BcMedium, 4}, {LC::BcShort, 4}, {LC::BcDouble, 1}};
    case FamilyId::E6m14: return {{LC::BcMedium, 6}, {LC::BcShort, 8}, {LC::BcDouble, 1}};
    case FamilyId::F4m20: return {{LC::BcShort, 8}, {LC::BcDouble, 7}};
    case FamilyId::E66: return {{LC::Single, 1}};
    case FamilyId::E6C: return {{LC::Single, 2}};
    case FamilyId::E77: return {{LC::Single, 1}};
    case FamilyId::E7C: return {{LC::Single, 2}};
    case FamilyId::E88: return {{LC::Single, 1}};
    case FamilyId::E8C: return {{LC::Single, 2}};
    case FamilyId::F44: return {{LC::Long, 1}, {LC::Short, 1}};
    case FamilyId::E62: return {{LC::Long, 1}, {LC::Short, 2}};
    case FamilyId::E7m5: return {{LC::Long, 1}, {LC::Short, 4}};
    case FamilyId::E8m24: return {{LC::Long, 1}, {LC::Short, 8}};
    case FamilyId::F4C: return {{LC::Long, 2}, {LC::Short, 2}};
    case FamilyId::G22: return {{LC::Long, 1}, {LC::Short, 1}};
    case FamilyId::G2C: return {{LC::Long, 2}, {LC::Short, 2}};
  }
  throw std::logic_error("mult_map: unreachable");
}

std::string name(const SpaceInstance& s) {
  switch (s.family) {
    case FamilyId::RH: return "RH^" + num(s.k + 1);
    case FamilyId::SLR: return "SL(" + num(s.r + 1) + ",R)/SO(" + num(s.r + 1) + ")";
    case FamilyId::SLC: return "SL(" + num(s.r + 1) + ",C)/SU(" + num(s.r + 1) + ")";
    case FamilyId::SUStar: return "SU*(" + num(2 * s.r + 2) + ")/Sp(" + num(s.r + 1) + ")";
    case FamilyId::E6m26: return "E6^-26/F4";
    case FamilyId::SOrrk: return "SO(" + num(s.r) + "," + num(s.r + s.k) + ")";
    case FamilyId::SOoddC: return "SO(" + num(2 * s.r + 1) + ",C)/SO(" + num(2 * s.r + 1) + ")";
    case FamilyId::SpRU: return "Sp(" + num(s.r) + ",R)/U(" + num(s.r) + ")";
    case FamilyId::SUrr: return "SU(" + num(s.r) + "," + num(s.r) + ")";
    case FamilyId::SpC: return "Sp(" + num(s.r) + ",C)/Sp(" + num(s.r) + ")";
    case FamilyId::SOStar4r: return "SO*(" + num(4 * s.r) + ")/U(" + num(2 * s.r) + ")";
    case FamilyId::Sprr: return "Sp(" + num(s.r) + "," + num(s.r) + ")";
    case FamilyId::E7m25: return "E7^-25/E6U1";
    case FamilyId::SOrr: return "SO(" + num(s.r) + "," + num(s.r) + ")";
    case FamilyId::SOevenC: return "SO(" + num(2 * s.r) + ",C)/SO(" + num(2 * s.r) + ")";
    case FamilyId::SUpq:
      if (s.r == 1) return "CH^" + num(s.k + 1);
      return "SU(" + num(s.r) + "," + num(s.r + s.k) + ")";
    case FamilyId::Sppq:
      if (s.r == 1) return "HH^" + num(s.k + 1);
      return "Sp(" + num(s.r) + "," + num(s.r + s.k) + ")";
    case FamilyId::SOStar4r2:
      return "SO*(" + num(4 * s.r + 2) + ")/U(" + num(2 * s.r + 1) + ")";
    case FamilyId::E6m14: return "E6^-14/Spin10U1";
    case FamilyId::F4m20: return "OH^2";
    case FamilyId::E66: return "E6^6/Sp4";
    case FamilyId::E6C: return "E6(C)/E6";
    case FamilyId::E77: return "E7^7/SU8";
    case FamilyId::E7C: return "E7(C)/E7";
    case FamilyId::E88: return "E8^8/SO16";
    case FamilyId::E8C: return "E8(C)/E8";
    case FamilyId::F44: return "F4^4/Sp3Sp1";
    case FamilyId::E62: return "E6^2/SU6Sp1";
    case FamilyId::E7m5: return "E7^-5/SO12Sp1";
    case FamilyId::E8m24: return "E8^-24/E7Sp1";
    case FamilyId::F4C: return "F4(C)/F4";
    case FamilyId::G22: return "G2^2/SO4";
    case FamilyId::G2C: return "G2(C)/G2";
  }
  throw std::logic_error("name: unreachable");
}

std::vector<std::string> aliases(const SpaceInstance& s) {
  std::vector<std::string> out;
  switch (s.family) {
    case FamilyId::RH:
      out.push_back("SO(1," + num(1 + s.k) + ")");
      if (s.k == 1) out.push_back("SL(2,R)/SO(2)");
      break;
    case FamilyId::SLR:
      if (s.r == 3) out.push_back("SO(3,3)");
      break;
    case FamilyId::SUpq:
      if (s.r == 1) out.push_back("SU(1," + num(1 + s.k) + ")");
      break;
    case FamilyId::Sppq:
      if (s.r == 1) out.push_back("Sp(1," + num(1 + s.k) + ")");
      break;
    case FamilyId::F4m20:
      out.push_back("F4^-20/Spin9");
      break;
    default:
      break;
  }
  return out;
}

int dimension(const SpaceInstance& s) {
  const auto& rs = RootSystem::get(root_type(s));
  auto m = mult_map(s);
  int dim = rank(s);
  for (const auto& x : rs.positive()) dim += m.at(rs.class_of(x));
  return dim;
}

int multiplicity(const SpaceInstance& s, const Root& x) {
  return mult_map(s).at(roots::length_class_of(root_type(s), x));
}

IdentifyResult identify(RootSystemType t, const MultiplicityMap& m) {
  using LC = LengthClass;
  auto get = [&](LC c) -> std::optional<int> {
    auto it = m.find(c);
    if (it == m.end()) return std::nullopt;
    return it->second;
  };
  switch (t.kind) {
    case Kind::A: {
      auto v = get(LC::Single);
      if (!v) return Unknown{};
      if (t.rank == 1) return make_instance(FamilyId::RH, 1, *v);
      if (*v == 1) return make_instance(FamilyId::SLR, t.rank);
      if (*v == 2) return make_instance(FamilyId::SLC, t.rank);
      if (*v == 4) return make_instance(FamilyId::SUStar, t.rank);
      if (*v == 8 && t.rank == 2) return make_instance(FamilyId::E6m26);
      return Unknown{};
    }
    case Kind::B: {
      auto lo = get(LC::Long), sh = get(LC::Short);
      if (!lo || !sh) return Unknown{};
      if (*lo == 1) return make_instance(FamilyId::SOrrk, t.rank, *sh);
      if (*lo == 2 && *sh == 2) return make_instance(FamilyId::SOoddC, t.rank);
      if (*lo == 3 && *sh == 4 && t.rank == 2) return make_instance(FamilyId::Sprr, 2);
      return Unknown{};
    }
    case Kind::C: {
      auto sh = get(LC::Short), lo = get(LC::Long);
      if (!lo || !sh) return Unknown{};
      if (*sh == 1 && *lo == 1) return make_instance(FamilyId::SpRU, t.rank);
      if (*sh == 2 && *lo == 1) return make_instance(FamilyId::SUrr, t.rank);
      if (*sh == 2 && *lo == 2) return make_instance(FamilyId::SpC, t.rank);
      if (*sh == 4 && *lo == 1) return make_instance(FamilyId::SOStar4r, t.rank);
      if (*sh == 4 && *lo == 3) return make_instance(FamilyId::Sprr, t.rank);
      if (*sh == 8 && *lo == 1 && t.rank == 3) return make_instance(FamilyId::E7m25);
      return Unknown{};
    }
    case Kind::D: {
      auto v = get(LC::Single);
      if (!v) return Unknown{};
      if (t.rank < 4) return Reducible{};
      if (*v == 1) return make_instance(FamilyId::SOrr, t.rank);
      if (*v == 2) return make_instance(FamilyId::SOevenC, t.rank);
      return Unknown{};
    }
    case Kind::BC: {
      auto sh = get(LC::BcShort), db = get(LC::BcDouble);
      if (!sh || !db) return Unknown{};
      if (t.rank == 1) {
        if (*db == 1 && *sh % 2 == 0) return make_instance(FamilyId::SUpq, 1, *sh / 2);
        if (*db == 3 && *sh % 4 == 0) return make_instance(FamilyId::Sppq, 1, *sh / 4);
        if (*db == 7 && *sh == 8) return make_instance(FamilyId::F4m20);
        return Unknown{};
      }
      auto md = get(LC::BcMedium);
      if (!md) return Unknown{};
      if (*md == 2 && *db == 1 && *sh % 2 == 0)
        return make_instance(FamilyId::SUpq, t.rank, *sh / 2);
      if (*md == 4 && *db == 3 && *sh % 4 == 0)
        return make_instance(FamilyId::Sppq, t.rank, *sh / 4);
      if (*md == 4 && *sh == 4 && *db == 1) return make_instance(FamilyId::SOStar4r2, t.rank);
      if (*md == 6 && *sh == 8 && *db == 1 && t.rank == 2) return make_instance(FamilyId::E6m14);
      return Unknown{};
    }
    case Kind::E6: {
      auto v = get(LC::Single);
      if (v && *v == 1) return make_instance(FamilyId::E66);
      if (v && *v == 2) return make_instance(FamilyId::E6C);
      return Unknown{};
    }
    case Kind::E7: {
      auto v = get(LC::Single);
      if (v && *v == 1) return make_instance(FamilyId::E77);
      if (v && *v == 2) return make_instance(FamilyId::E7C);
      return Unknown{};
    }
    case Kind::E8: {
      auto v = get(LC::Single);
      if (v && *v == 1) return make_instance(FamilyId::E88);
      if (v && *v == 2) return make_instance(FamilyId::E8C);
      return Unknown{};
    }
    case Kind::F4: {
      auto lo = get(LC::Long), sh = get(LC::Short);
      if (!lo || !sh) return Unknown{};
      if (*lo == 1 && *sh == 1) return make_instance(FamilyId::F44);
      if (*lo == 1 && *sh == 2) return make_instance(FamilyId::E62);
      if (*lo == 1 && *sh == 4) return make_instance(FamilyId::E7m5);
      if (*lo == 1 && *sh == 8) return make_instance(FamilyId::E8m24);
      if (*lo == 2 && *sh == 2) return make_instance(FamilyId::F4C);
      return Unknown{};
    }
    case Kind::G2: {
      auto lo = get(LC::Long), sh = get(LC::Short);
      if (!lo || !sh) return Unknown{};
      if (*lo == 1 && *sh == 1) return make_instance(FamilyId::G22);
      if (*lo == 2 && *sh == 2) return make_instance(FamilyId::G2C);
      return Unknown{};
    }
  }
  return Unknown{};
}

std::vector<SpaceInstance> enumerate_instances(int rank_cap, int k_cap) {
  std::vector<SpaceInstance> out;
  if (rank_cap < 1) return out;
  for (const auto& f : kFamilies) {
    if (!f.has_r) {
      SpaceInstance s = make_instance(f.id);
      if (rank(s) <= rank_cap) out.push_back(s);
      continue;
    }
    if (f.id == FamilyId::RH) {
      for (int k = 1; k <= k_cap; ++k) out.push_back(make_instance(f.id, 1, k));
      continue;
    }
    for (int r = f.min_r; r <= rank_cap; ++r) {
      if (f.has_k) {
        for (int k = 1; k <= k_cap; ++k) out.push_back(make_instance(f.id, r, k));
      } else {
        out.push_back(make_instance(f.id, r));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpaceInstance& a, const SpaceInstance& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.family != b.family) return a.family < b.family;
    return std::tie(a.r, a.k) < std::tie(b.r, b.k);
  });
  return out;
}

namespace {

std::string normalize(const std::string& in) {
  std::string s;
  for (char c : in) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '_') continue;
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::optional<Resolved> resolve_so_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 1) {
    if (b < 2) return std::nullopt;
    auto s = make_instance(FamilyId::RH, 1, b - 1);
    return Resolved{s, true, "SO(1," + num(b) + ") = " + name(s)};
  }
  if (a == b) {
    if (a == 2) return std::nullopt;  // reducible
    if (a == 3) {
      auto s = make_instance(FamilyId::SLR, 3);
      return Resolved{s, true, "SO(3,3) = " + name(s)};
    }
    return Resolved{make_instance(FamilyId::SOrr, a), false, ""};
  }
  return Resolved{make_instance(FamilyId::SOrrk, a, b - a), false, ""};
}

}  // namespace

std::optional<Resolved> resolve_name(const std::string& text) {
  std::string q = normalize(text);
  if (q.empty()) return std::nullopt;

  // exact canonical / alias names over a generous parameter range
  static const std::vector<SpaceInstance> universe = enumerate_instances(12, 24);
  for (const auto& s : universe) {
    if (normalize(name(s)) == q) return Resolved{s, false, ""};
    for (const auto& a : aliases(s))
      if (normalize(a) == q) return Resolved{s, true, a + " = " + name(s)};
  }

  std::smatch m;
  auto roman = [](const std::string& x) { return std::stoi(x); };

  static const std::regex rh(R"(^rh\^?(\d+)$)");
  if (std::regex_match(q, m, rh) && roman(m[1]) >= 2)
    return Resolved{make_instance(FamilyId::RH, 1, roman(m[1]) - 1), false, ""};
  static const std::regex ch(R"(^ch\^?(\d+)$)");
  if (std::regex_match(q, m, ch) && roman(m[1]) >= 2)
    return Resolved{make_instance(FamilyId::SUpq, 1, roman(m[1]) - 1), false, ""};
  static const std::regex hh(R"(^hh\^?(\d+)$)");
  if (std::regex_match(q, m, hh) && roman(m[1]) >= 2)
    return Resolved{make_instance(FamilyId::Sppq, 1, roman(m[1]) - 1), false, ""};
  static const std::regex oh(R"(^oh\^?2$)");
  if (std::regex_match(q, m, oh)) return Resolved{make_instance(FamilyId::F4m20), false, ""};

  static const std::regex so_pair(R"(^so\(?(\d+),(\d+)\)?(/.*)?$)");
  if (std::regex_match(q, m, so_pair)) return resolve_so_pair(roman(m[1]), roman(m[2]));

  static const std::regex slr(R"(^sl\(?(\d+),?r\)?(/so\(?\d+\)?)?$)");
  if (std::regex_match(q, m, slr)) {
    int n = roman(m[1]);
    if (n == 2) {
      auto s = make_instance(FamilyId::RH, 1, 1);
      return Resolved{s, true, "SL(2,R)/SO(2) = " + name(s)};
    }
    if (n >= 3) return Resolved{make_instance(FamilyId::SLR, n - 1), false, ""};
  }
  static const std::regex slc(R"(^sl\(?(\d+),?c\)?(/su\(?\d+\)?)?$)");
  if (std::regex_match(q, m, slc) && roman(m[1]) >= 3)
    return Resolved{make_instance(FamilyId::SLC, roman(m[1]) - 1), false, ""};

  static const std::regex sustar(R"(^su\*\(?(\d+)\)?(/sp\(?\d+\)?)?$)");
  if (std::regex_match(q, m, sustar)) {
    int n = roman(m[1]);
    if (n >= 6 && n % 2 == 0) return Resolved{make_instance(FamilyId::SUStar, n / 2 - 1), false, ""};
  }

  static const std::regex su_pair(R"(^su\(?(\d+),(\d+)\)?(/.*)?$)");
  if (std::regex_match(q, m, su_pair)) {
    int a = roman(m[1]), b = roman(m[2]);
    if (a > b) std::swap(a, b);
    if (a == b && a >= 3) return Resolved{make_instance(FamilyId::SUrr, a), false, ""};
    if (a >= 1 && b > a) return Resolved{make_instance(FamilyId::SUpq, a, b - a), false, ""};
  }

  static const std::regex sp_pair(R"(^sp\(?(\d+),(\d+)\)?(/.*)?$)");
  if (std::regex_match(q, m, sp_pair)) {
    int a = roman(m[1]), b = roman(m[2]);
    if (a > b) std::swap(a, b);
    if (a == b && a >= 2) return Resolved{make_instance(FamilyId::Sprr, a), false, ""};
    if (a >= 1 && b > a) return Resolved{make_instance(FamilyId::Sppq, a, b - a), false, ""};
  }

  static const std::regex spr(R"(^sp\(?(\d+),?r\)?(/u\(?\d+\)?)?$)");
  if (std::regex_match(q, m, spr) && roman(m[1]) >= 3)
    return Resolved{make_instance(FamilyId::SpRU, roman(m[1])), false, ""};
  static const std::regex spc(R"(^sp\(?(\d+),?c\)?(/sp\(?\d+\)?)?$)");
  if (std::regex_match(q, m, spc) && roman(m[1]) >= 3)
    return Resolved{make_instance(FamilyId::SpC, roman(m[1])), false, ""};

  static const std::regex soc(R"(^so\(?(\d+),?c\)?(/so\(?\d+\)?)?$)");
  if (std::regex_match(q, m, soc)) {
    int n = roman(m[1]);
    if (n >= 5 && n % 2 == 1) return Resolved{make_instance(FamilyId::SOoddC, (n - 1) / 2), false, ""};
    if (n >= 8 && n % 2 == 0) return Resolved{make_instance(FamilyId::SOevenC, n / 2), false, ""};
  }

  static const std::regex sostar(R"(^so\*\(?(\d+)\)?(/u\(?\d+\)?)?$)");
  if (std::regex_match(q, m, sostar)) {
    int n = roman(m[1]);
    if (n % 4 == 0 && n >= 12) return Resolved{make_instance(FamilyId::SOStar4r, n / 4), false, ""};
    if (n % 4 == 2 && n >= 10)
      return Resolved{make_instance(FamilyId::SOStar4r2, (n - 2) / 4), false, ""};
  }

  return std::nullopt;
}

namespace {

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

}  // namespace

std::vector<std::string> name_suggestions(const std::string& text, int count) {
  std::string q = normalize(text);
  std::vector<std::pair<int, std::string>> scored;
  for (const auto& s : enumerate_instances(8, 8)) {
    std::string n = name(s);
    scored.emplace_back(edit_distance(q, normalize(n)), n);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (int i = 0; i < count && i < static_cast<int>(scored.size()); ++i)
    out.push_back(scored[i].second);
  return out;
}

}  // namespace symdex::catalog
