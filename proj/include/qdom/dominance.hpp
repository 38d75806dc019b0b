#pragma once

// Truncated certification of 1/lhs >= 1/rhs coefficientwise, and the named
// partition inequalities as parameterized checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdom/series.hpp"

namespace qdom {

struct DominanceReport {
  int holds_up_to = 0;  // truncation order N
  std::optional<NegativeCoefficient> failure;  // minimal failing exponent and deficit
  ProductSpec lhs_spec;
  ProductSpec rhs_spec;
  QSeries difference;  // 1/lhs - 1/rhs

  bool holds() const { return !failure.has_value(); }
  // Same product up to the order of factor families.
  bool specs_equal() const;
};

// 1/lhs - 1/rhs at the given order, scanned for the first negative coefficient.
DominanceReport dominates(const ProductSpec& lhs, const ProductSpec& rhs, int order);

enum class InequalityId { RR, BGa, finiteRR, littleGollnitz, BGr, Thm1, Thm2, Proposal };

std::string to_string(InequalityId id);
// Accepts the names above case-insensitively plus the aliases rr, bga,
// finiterr, lg, bgr, thm1, thm2, proposal.
InequalityId parse_inequality_id(const std::string& name);

// Ordered parameter names for each inequality (proposal: L, m, then x_(i), r_(i)).
std::vector<std::string> parameter_names(InequalityId id, int proposal_n = 0);

struct NamedInequality {
  InequalityId id = InequalityId::Thm1;
  std::map<std::string, int> params;
  // Proposal only: the x_(i) and r_(i) tuples.
  std::vector<int> xs;
  std::vector<int> rs;

  // Builds from a flat list in parameter_names order. For the proposal the
  // list is L, m, x_(1..n), r_(1..n), so its length must be even.
  static NamedInequality from_list(InequalityId id, const std::vector<int>& values);
  std::vector<int> as_list() const;
};

// The two products exactly as displayed; validates parameters.
std::pair<ProductSpec, ProductSpec> named_specs(const NamedInequality& ineq);

DominanceReport check_named(const NamedInequality& ineq, int order);

// Same multiset of factor families.
bool same_product(const ProductSpec& a, const ProductSpec& b);

// BGa predicate: r does not divide m-r and m-r does not divide r.
bool bga_condition(int m, int r);

}  // namespace qdom
