#include "qdom/dominance.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "qdom/errors.hpp"

namespace qdom {

DominanceReport dominates(const ProductSpec& lhs, const ProductSpec& rhs, int order) {
  DominanceReport r;
  r.holds_up_to = order;
  r.lhs_spec = lhs;
  r.rhs_spec = rhs;
  r.difference = pochhammer_reciprocal(lhs, order) - pochhammer_reciprocal(rhs, order);
  r.failure = first_negative(r.difference);
  return r;
}

std::string to_string(InequalityId id) {
  switch (id) {
    case InequalityId::RR: return "RR";
    case InequalityId::BGa: return "BGa";
    case InequalityId::finiteRR: return "finiteRR";
    case InequalityId::littleGollnitz: return "littleGollnitz";
    case InequalityId::BGr: return "BGr";
    case InequalityId::Thm1: return "Thm1";
    case InequalityId::Thm2: return "Thm2";
    case InequalityId::Proposal: return "Proposal";
  }
  return "?";
}

InequalityId parse_inequality_id(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "rr") return InequalityId::RR;
  if (s == "bga") return InequalityId::BGa;
  if (s == "finiterr") return InequalityId::finiteRR;
  if (s == "littlegollnitz" || s == "lg") return InequalityId::littleGollnitz;
  if (s == "bgr") return InequalityId::BGr;
  if (s == "thm1") return InequalityId::Thm1;
  if (s == "thm2") return InequalityId::Thm2;
  if (s == "proposal") return InequalityId::Proposal;
  throw UsageError("unknown inequality '" + name + "'");
}

std::vector<std::string> parameter_names(InequalityId id, int proposal_n) {
  switch (id) {
    case InequalityId::RR: return {};
    case InequalityId::BGa: return {"m", "r", "L"};
    case InequalityId::finiteRR: return {"L"};
    case InequalityId::littleGollnitz: return {"L"};
    case InequalityId::BGr: return {"y", "L"};
    case InequalityId::Thm1: return {"L", "m", "x", "y", "r", "R"};
    case InequalityId::Thm2: return {"L", "m", "x", "y", "z", "r", "R", "rho"};
    case InequalityId::Proposal: {
      std::vector<std::string> names{"L", "m"};
      for (int i = 1; i <= proposal_n; ++i) names.push_back("x" + std::to_string(i));
      for (int i = 1; i <= proposal_n; ++i) names.push_back("r" + std::to_string(i));
      return names;
    }
  }
  return {};
}

NamedInequality NamedInequality::from_list(InequalityId id, const std::vector<int>& values) {
  NamedInequality ineq;
  ineq.id = id;
  if (id == InequalityId::Proposal) {
    if (values.size() < 4 || values.size() % 2 != 0)
      throw UsageError("proposal parameters are L, m, x_(1..n), r_(1..n) with n >= 1");
    const std::size_t n = (values.size() - 2) / 2;
    ineq.params["L"] = values[0];
    ineq.params["m"] = values[1];
    ineq.xs.assign(values.begin() + 2, values.begin() + 2 + static_cast<long>(n));
    ineq.rs.assign(values.begin() + 2 + static_cast<long>(n), values.end());
    return ineq;
  }
  const auto names = parameter_names(id);
  if (values.size() != names.size())
    throw UsageError(to_string(id) + " expects " + std::to_string(names.size()) + " parameters, got " +
                     std::to_string(values.size()));
  for (std::size_t i = 0; i < names.size(); ++i) ineq.params[names[i]] = values[i];
  return ineq;
}

std::vector<int> NamedInequality::as_list() const {
  std::vector<int> out;
  if (id == InequalityId::Proposal) {
    out.push_back(params.at("L"));
    out.push_back(params.at("m"));
    out.insert(out.end(), xs.begin(), xs.end());
    out.insert(out.end(), rs.begin(), rs.end());
    return out;
  }
  for (const auto& name : parameter_names(id)) out.push_back(params.at(name));
  return out;
}

namespace {

int get_positive(const NamedInequality& ineq, const std::string& name) {
  auto it = ineq.params.find(name);
  if (it == ineq.params.end()) throw UsageError(to_string(ineq.id) + ": missing parameter " + name);
  if (it->second < 1) throw UsageError(to_string(ineq.id) + ": parameter " + name + " must be a positive integer");
  return it->second;
}

ProductSpec poch(std::initializer_list<int> bases, int modulus, std::optional<int> length) {
  std::vector<int> b(bases);
  return ProductSpec::pochhammer(b, modulus, length);
}

}  // namespace

bool same_product(const ProductSpec& a, const ProductSpec& b) {
  auto key = [](const ProductSpec& s) {
    std::vector<std::tuple<int, int, int>> k;
    for (const auto& f : s.families) k.emplace_back(f.base, f.modulus, f.length.value_or(-1));
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) == key(b);
}

bool DominanceReport::specs_equal() const { return same_product(lhs_spec, rhs_spec); }

bool bga_condition(int m, int r) { return (m - r) % r != 0 && r % (m - r) != 0; }

std::pair<ProductSpec, ProductSpec> named_specs(const NamedInequality& ineq) {
  switch (ineq.id) {
    case InequalityId::RR:
      return {poch({1, 4}, 5, std::nullopt), poch({2, 3}, 5, std::nullopt)};
    case InequalityId::BGa: {
      const int m = get_positive(ineq, "m"), r = get_positive(ineq, "r"), L = get_positive(ineq, "L");
      if (!(0 < r && r < m)) throw UsageError("BGa: need 0 < r < m");
      return {poch({1, m - 1}, m, L), poch({r, m - r}, m, L)};
    }
    case InequalityId::finiteRR: {
      const int L = get_positive(ineq, "L");
      return {poch({1, 4}, 5, L), poch({2, 3}, 5, L)};
    }
    case InequalityId::littleGollnitz: {
      const int L = get_positive(ineq, "L");
      return {poch({1, 5, 6}, 8, L), poch({2, 3, 7}, 8, L)};
    }
    case InequalityId::BGr: {
      const int y = get_positive(ineq, "y"), L = get_positive(ineq, "L");
      if (y <= 1 || y % 2 == 0) throw UsageError("BGr: y must be an odd integer greater than 1");
      const int mod = 2 * y + 2;
      return {poch({1, y + 2, 2 * y}, mod, L), poch({2, y, 2 * y + 1}, mod, L)};
    }
    case InequalityId::Thm1: {
      const int L = get_positive(ineq, "L"), m = get_positive(ineq, "m");
      const int x = get_positive(ineq, "x"), y = get_positive(ineq, "y");
      const int r = get_positive(ineq, "r"), R = get_positive(ineq, "R");
      return {poch({x, y, r * x + R * y}, m, L), poch({r * x, R * y, x + y}, m, L)};
    }
    case InequalityId::Thm2: {
      const int L = get_positive(ineq, "L"), m = get_positive(ineq, "m");
      const int x = get_positive(ineq, "x"), y = get_positive(ineq, "y"), z = get_positive(ineq, "z");
      const int r = get_positive(ineq, "r"), R = get_positive(ineq, "R"), rho = get_positive(ineq, "rho");
      return {poch({x, y, z, r * x + R * y + rho * z}, m, L), poch({r * x, R * y, rho * z, x + y + z}, m, L)};
    }
    case InequalityId::Proposal: {
      const int L = get_positive(ineq, "L"), m = get_positive(ineq, "m");
      if (ineq.xs.empty() || ineq.xs.size() != ineq.rs.size())
        throw UsageError("Proposal: x and r tuples must be nonempty and of equal length");
      std::vector<int> lhs, rhs;
      int big_sigma = 0, small_sigma = 0;
      for (std::size_t i = 0; i < ineq.xs.size(); ++i) {
        if (ineq.xs[i] < 1 || ineq.rs[i] < 1) throw UsageError("Proposal: x and r entries must be positive");
        lhs.push_back(ineq.xs[i]);
        rhs.push_back(ineq.rs[i] * ineq.xs[i]);
        big_sigma += ineq.rs[i] * ineq.xs[i];
        small_sigma += ineq.xs[i];
      }
      lhs.push_back(big_sigma);
      rhs.push_back(small_sigma);
      return {ProductSpec::pochhammer(lhs, m, L), ProductSpec::pochhammer(rhs, m, L)};
    }
  }
  throw UsageError("unhandled inequality");
}

DominanceReport check_named(const NamedInequality& ineq, int order) {
  auto [lhs, rhs] = named_specs(ineq);
  return dominates(lhs, rhs, order);
}

}  // namespace qdom
