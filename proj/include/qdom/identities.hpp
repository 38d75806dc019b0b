#pragma once

// The symbolic numerator identities behind the two splittings, as
// polynomial identities in t, the base variables and their "r-powers"
// (alpha, beta, gamma).

#include <string>
#include <vector>

#include "qdom/polyring.hpp"

namespace qdom::identities {

struct NamedIdentity {
  std::string name;
  std::vector<RationalTerm> lhs;
  std::vector<RationalTerm> rhs;
};

// (1-ta)(1-tb)(1-txy) - (1-tx)(1-ty)(1-tab)
//   = t(x-a)(1-b)(1-ty) + t(y-b)(1-ta)(1-x)
NamedIdentity two_variable();

// (1-ta)(1-tb)(1-tc)(1-txyz) - (1-tx)(1-ty)(1-tz)(1-tabc) as the four
// half-weighted lines.
NamedIdentity three_variable();

std::vector<NamedIdentity> corpus();

}  // namespace qdom::identities
