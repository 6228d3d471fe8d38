#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdex/catalog.hpp"

namespace symdex::facts {

using catalog::FamilyId;
using catalog::SpaceInstance;

// i(M) for the rank <= 2 spaces (external classifications, consumed as data).
// Indices are independent of the k parameter, but a family can have both a
// rank-1 and a rank-2 block with different values, so rows are keyed by
// (family, rank).
struct Rank2Row {
  FamilyId family;
  int rank;
  int index;
  std::string citation;
};

// i_r(M) for the rank >= 3 families; every value is linear in the rank:
// i_r = a*r + c. `status` is the published verdict on i(M) = i_r(M).
enum class ConjMark { Yes, YesIfRLe5, YesIfKGeRm1, Open };

struct ReflectiveRow {
  FamilyId family;
  int a;  // i_r = a*r + c
  int c;
  ConjMark status;
  std::string citation;
};

// Names that specific rule instantiations carry in the source classification
// (pure citation data; keyed by family, rule id and a context tag).
struct CitationAlias {
  FamilyId family;
  std::string rule;
  std::string context;  // boundary-space name for R7, "d=<k>" for R6
  std::string alias;
};

struct FactTables {
  std::vector<Rank2Row> rank2;
  std::vector<ReflectiveRow> reflective;
  SpaceInstance conjecture_exception;  // G2^2/SO4
  std::vector<CitationAlias> aliases;

  std::optional<Rank2Row> rank2_row(const SpaceInstance& s) const;
  std::optional<ReflectiveRow> reflective_row(const SpaceInstance& s) const;
  std::optional<int> reflective_index(const SpaceInstance& s) const;
  std::string alias_for(const SpaceInstance& s, const std::string& rule,
                        const std::string& context) const;
};

FactTables default_facts();

}  // namespace symdex::facts
