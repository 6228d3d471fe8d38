#include "symdex/facts.hpp"

namespace symdex::facts {

std::optional<Rank2Row> FactTables::rank2_row(const SpaceInstance& s) const {
  for (const auto& row : rank2)
    if (row.family == s.family && row.rank == catalog::rank(s)) return row;
  return std::nullopt;
}

std::optional<ReflectiveRow> FactTables::reflective_row(const SpaceInstance& s) const {
  for (const auto& row : reflective)
    if (row.family == s.family) return row;
  return std::nullopt;
}

std::optional<int> FactTables::reflective_index(const SpaceInstance& s) const {
  auto row = reflective_row(s);
  if (!row) return std::nullopt;
  return row->a * catalog::rank(s) + row->c;
}

std::string FactTables::alias_for(const SpaceInstance& s, const std::string& rule,
                                  const std::string& context) const {
  for (const auto& a : aliases)
    if (a.family == s.family && a.rule == rule && a.context == context) return a.alias;
  return "";
}

FactTables default_facts() {
  using F = FamilyId;
  FactTables t;

  // index for rank <= 2 (Wolf and Klein classifications; Table 4)
  t.rank2 = {
      {F::RH, 1, 1, "Table 4 (Wolf)"},
      {F::SUpq, 1, 2, "Table 4 (Wolf)"},   // CH^{k+1}
      {F::Sppq, 1, 4, "Table 4 (Wolf)"},   // HH^{k+1}
      {F::F4m20, 1, 8, "Table 4 (Wolf)"},  // OH^2
      {F::SLR, 2, 2, "Table 4 (Klein)"},   // SL(3,R)/SO(3)
      {F::SOrrk, 2, 2, "Table 4 (Klein)"},
      {F::SLC, 2, 3, "Table 4 (Klein)"},
      {F::G22, 2, 3, "Table 4 (Klein)"},
      {F::SOoddC, 2, 4, "Table 4 (Klein)"},  // SO(5,C)/SO(5)
      {F::SUpq, 2, 4, "Table 4 (Klein)"},    // SU(2,2+k)
      {F::SUStar, 2, 6, "Table 4 (Klein)"},  // SU*(6)/Sp(3)
      {F::G2C, 2, 6, "Table 4 (Klein)"},
      {F::Sprr, 2, 6, "Table 4 (Klein)"},       // Sp(2,2)
      {F::SOStar4r2, 2, 8, "Table 4 (Klein)"},  // SO*(10)/U(5)
      {F::Sppq, 2, 8, "Table 4 (Klein)"},       // Sp(2,2+k)
      {F::E6m26, 2, 10, "Table 4 (Klein)"},
      {F::E6m14, 2, 12, "Table 4 (Klein)"},
  };

  // reflective index for rank >= 3 (Leung's classification; Table 6):
  // i_r = a*r + c, with the published i(M) = i_r(M) status.
  t.reflective = {
      {F::SLR, 1, 0, ConjMark::Yes, "Table 6 (Leung)"},
      {F::SLC, 2, 0, ConjMark::Open, "Table 6 (Leung)"},   // yes only at r = 3
      {F::SUStar, 4, 0, ConjMark::Open, "Table 6 (Leung)"},
      {F::SOrrk, 1, 0, ConjMark::Yes, "Table 6 (Leung)"},
      {F::SOoddC, 2, 0, ConjMark::Yes, "Table 6 (Leung)"},
      {F::SpRU, 2, -2, ConjMark::YesIfRLe5, "Table 6 (Leung)"},
      {F::SUrr, 2, 0, ConjMark::Yes, "Table 6 (Leung)"},
      {F::SpC, 4, -4, ConjMark::Open, "Table 6 (Leung)"},
      {F::SOStar4r, 4, -2, ConjMark::Open, "Table 6 (Leung)"},
      {F::Sprr, 4, 0, ConjMark::Open, "Table 6 (Leung)"},
      {F::E7m25, 0, 22, ConjMark::Open, "Table 6 (Leung)"},
      {F::SOrr, 1, 0, ConjMark::Yes, "Table 6 (Leung)"},
      {F::SOevenC, 2, -1, ConjMark::Yes, "Table 6 (Leung)"},
      {F::SUpq, 2, 0, ConjMark::Yes, "Table 6 (Leung)"},
      {F::Sppq, 4, 0, ConjMark::YesIfKGeRm1, "Table 6 (Leung)"},
      {F::SOStar4r2, 4, 0, ConjMark::Open, "Table 6 (Leung)"},
      {F::E66, 0, 14, ConjMark::Open, "Table 6 (Leung)"},
      {F::E6C, 0, 26, ConjMark::Open, "Table 6 (Leung)"},
      {F::E77, 0, 27, ConjMark::Open, "Table 6 (Leung)"},
      {F::E7C, 0, 54, ConjMark::Open, "Table 6 (Leung)"},
      {F::E88, 0, 56, ConjMark::Open, "Table 6 (Leung)"},
      {F::E8C, 0, 112, ConjMark::Open, "Table 6 (Leung)"},
      {F::F44, 0, 8, ConjMark::Yes, "Table 6 (Leung)"},
      {F::E62, 0, 12, ConjMark::Open, "Table 6 (Leung)"},
      {F::E7m5, 0, 24, ConjMark::Open, "Table 6 (Leung)"},
      {F::E8m24, 0, 48, ConjMark::Open, "Table 6 (Leung)"},
      {F::F4C, 0, 16, ConjMark::Open, "Table 6 (Leung)"},
  };

  t.conjecture_exception = catalog::make_instance(F::G22);

  // names the classification literature gives to specific rule instantiations
  t.aliases = {
      {F::E66, "R6", "d=6", "Prop 6.5"},
      {F::E77, "R7", "E6^6/Sp4", "Cor 6.6"},
      {F::E88, "R7", "E6^6/Sp4", "Cor 6.6"},
      {F::F44, "R7", "Sp(3,R)/U(3)", "Cor 6.4"},
  };
  return t;
}

}  // namespace symdex::facts
