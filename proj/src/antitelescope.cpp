#include "qdom/antitelescope.hpp"

#include <algorithm>

#include "qdom/errors.hpp"
#include "qdom/lemma.hpp"

namespace qdom::antitelescope {

// --- factor lists ----------------------------------------------------------

ProductSpec ProductFamily::at(int i) const { return ProductSpec::pochhammer(bases, modulus, i); }

std::vector<int> ProductFamily::factors(int i) const {
  if (i < 0) throw UsageError("ProductFamily: negative index");
  std::vector<int> out;
  for (int a : bases)
    for (int j = 0; j < i; ++j) out.push_back(a + j * modulus);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ProductFamily::step_factors(int i) const {
  if (i < 1) throw UsageError("ProductFamily: step index must be >= 1");
  std::vector<int> out;
  for (int a : bases) out.push_back(a + (i - 1) * modulus);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ProductFamily::quotient_factors(int L, int i) const {
  return multiset_difference(factors(L), factors(i));
}

std::vector<int> multiset_difference(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> out;
  std::size_t ib = 0;
  for (int v : a) {
    if (ib < b.size() && b[ib] == v) {
      ++ib;
      continue;
    }
    if (ib < b.size() && b[ib] < v) throw UsageError("multiset_difference: subtrahend not contained");
    out.push_back(v);
  }
  if (ib != b.size()) throw UsageError("multiset_difference: subtrahend not contained");
  return out;
}

bool multiset_contains(std::vector<int> haystack, std::vector<int> needles) {
  std::sort(haystack.begin(), haystack.end());
  std::sort(needles.begin(), needles.end());
  return std::includes(haystack.begin(), haystack.end(), needles.begin(), needles.end());
}

std::vector<int> addend_denominator(const ProductFamily& P, const ProductFamily& Q, int i, int L) {
  auto d = P.factors(i);
  auto q = Q.quotient_factors(L, i - 1);
  d.insert(d.end(), q.begin(), q.end());
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

void require_index(int i, int L) {
  if (L < 1) throw UsageError("anti-telescoping needs L >= 1");
  if (i < 1 || i > L) throw UsageError("addend index must satisfy 1 <= i <= L");
}

// c * q^shift * prod (1 - q^e)
QSeries term(int order, const Coefficient& c, int shift, std::initializer_list<int> binomials) {
  QSeries s = QSeries::monomial(order, shift, c);
  for (int e : binomials) s.times_binomial(e);
  return s;
}

QSeries over(QSeries num, const std::vector<int>& denominator) {
  for (int e : denominator) num.over_binomial(e);
  return num;
}

QSeries product_of_binomials(int order, const std::vector<int>& exps) {
  QSeries s = QSeries::one(order);
  for (int e : exps) s.times_binomial(e);
  return s;
}

void validate(const Thm1Params& p) {
  if (p.L < 1 || p.m < 1 || p.x < 1 || p.y < 1 || p.r < 1 || p.R < 1)
    throw UsageError("Thm1 parameters must be positive integers");
}

void validate(const Thm2Params& p) {
  if (p.L < 1 || p.m < 1 || p.x < 1 || p.y < 1 || p.z < 1 || p.r < 1 || p.R < 1 || p.rho < 1)
    throw UsageError("Thm2 parameters must be positive integers");
}

const Coefficient kHalf(1, 2);

}  // namespace

QSeries addend(const ProductFamily& P, const ProductFamily& Q, int i, int L, int order) {
  require_index(i, L);
  if (P.modulus != Q.modulus) throw UsageError("addend: families must share the modulus");
  QSeries num = product_of_binomials(order, Q.step_factors(i)) - product_of_binomials(order, P.step_factors(i));
  return over(std::move(num), addend_denominator(P, Q, i, L));
}

std::pair<ProductFamily, ProductFamily> families(const Thm1Params& p) {
  validate(p);
  return {ProductFamily{{p.x, p.y, p.r * p.x + p.R * p.y}, p.m},
          ProductFamily{{p.r * p.x, p.R * p.y, p.x + p.y}, p.m}};
}

std::pair<ProductFamily, ProductFamily> families(const Thm2Params& p) {
  validate(p);
  return {ProductFamily{{p.x, p.y, p.z, p.r * p.x + p.R * p.y + p.rho * p.z}, p.m},
          ProductFamily{{p.r * p.x, p.R * p.y, p.rho * p.z, p.x + p.y + p.z}, p.m}};
}

QSeries AddendDecomposition::group_sum() const {
  QSeries s(addend.order());
  for (const auto& g : groups) s += g.series;
  return s;
}

AddendDecomposition thm1_split(const Thm1Params& p, int i, int order) {
  validate(p);
  require_index(i, p.L);
  auto [P, Q] = families(p);
  const int t = (i - 1) * p.m;
  const auto den = addend_denominator(P, Q, i, p.L);

  AddendDecomposition d;
  d.index = i;
  d.t_exponent = t;
  d.addend = addend(P, Q, i, p.L, order);
  d.groups.push_back(
      {"V", over(term(order, 1, t + p.y, {(p.R - 1) * p.y, p.x, t + p.r * p.x}), den)});
  d.groups.push_back(
      {"W", over(term(order, 1, t + p.x, {(p.r - 1) * p.x, p.R * p.y, t + p.y}), den)});
  return d;
}

TriBounds thm2_lemma_bounds(const Thm2Params& p, int i, int order) {
  validate(p);
  if (i < 2) throw UsageError("the lemma route applies to addends i >= 2");
  const int et = (i - 1) * p.m;
  return TriBounds{order / et, order / p.x, order / p.y};
}

AddendDecomposition thm2_split(const Thm2Params& p, int i, int order, const TriSeries* f_cache) {
  validate(p);
  require_index(i, p.L);
  auto [P, Q] = families(p);
  const int x = p.x, y = p.y, z = p.z, r = p.r, R = p.R, rho = p.rho;
  const auto den = addend_denominator(P, Q, i, p.L);

  AddendDecomposition d;
  d.index = i;
  d.t_exponent = (i - 1) * p.m;
  d.addend = addend(P, Q, i, p.L, order);

  if (i == 1) {
    // Q(1) - P(1) split into three bracketed lines.
    QSeries g1 = term(order, kHalf, x, {(r - 1) * x, R * y, rho * z, y + z}) +
                 term(order, kHalf, x, {(r - 1) * x, y, z, R * y + rho * z});
    QSeries g2 = term(order, kHalf, y, {(R - 1) * y, rho * z, r * x, z + x}) +
                 term(order, kHalf, y, {(R - 1) * y, z, x, rho * z + r * x});
    QSeries g3 = term(order, kHalf, z, {(rho - 1) * z, x, y, r * x + R * y}) +
                 term(order, kHalf, z, {(rho - 1) * z, r * x, R * y, x + y});
    d.groups.push_back({"G1", over(std::move(g1), den)});
    d.groups.push_back({"G2", over(std::move(g2), den)});
    d.groups.push_back({"G3", over(std::move(g3), den)});
    return d;
  }

  const int t = d.t_exponent;
  QSeries g1 = term(order, kHalf, t + x, {(r - 1) * x, t + R * y, t + rho * z, y + z}) +
               term(order, kHalf, t + x, {(r - 1) * x, t + y, t + z, R * y + rho * z});
  QSeries g2 = term(order, kHalf, t + y, {(R - 1) * y, t + rho * z, t + r * x, z + x}) +
               term(order, kHalf, t + y, {(R - 1) * y, t + z, t + x, rho * z + r * x});
  QSeries g3 = term(order, kHalf, t + z, {(rho - 1) * z, t + x, t + y, r * x + R * y});
  QSeries g4_direct = term(order, kHalf, t + z, {(rho - 1) * z, t + r * x, t + R * y, x + y}) +
                      term(order, kHalf, t + z + x + y, {(rho - 1) * z, 2 * t, (r - 1) * x, (R - 1) * y});
  g4_direct = over(std::move(g4_direct), den);

  // Lemma route: (1/2) t q^z (1 - q^{(rho-1)z}) f(q^x, q^y, t) / ((1-tq^{rho z})(1-q^z)(1-tq^z)),
  // times the reciprocals of the denominator factors not absorbed by f.
  const std::vector<int> absorbed{t + r * x, t + R * y, t + rho * z, x, y, z, t + x, t + y, t + z};
  const auto remaining = multiset_difference(den, absorbed);
  const TriBounds need = thm2_lemma_bounds(p, i, order);
  TriSeries local;
  const TriSeries* f = f_cache;
  if (f == nullptr) {
    local = lemma::f_expand({r, R, need});
    f = &local;
  }
  QSeries g4 = specialize(*f, t, x, y, order);
  g4.times_binomial((rho - 1) * z).shift(t + z).scale(kHalf);
  for (int e : {t + rho * z, z, t + z}) g4.over_binomial(e);
  g4 = over(std::move(g4), remaining);

  d.lemma_route_agrees = g4 == g4_direct;
  d.groups.push_back({"G1", over(std::move(g1), den)});
  d.groups.push_back({"G2", over(std::move(g2), den)});
  d.groups.push_back({"G3", over(std::move(g3), den)});
  d.groups.push_back({"G4", std::move(g4)});
  return d;
}

DivisibilityFacts divisibility_facts(const Thm1Params& p, int i) {
  validate(p);
  require_index(i, p.L);
  auto [P, Q] = families(p);
  const int t = (i - 1) * p.m;
  DivisibilityFacts f;
  f.quotient_has_t_factors = multiset_contains(Q.quotient_factors(p.L, i - 1), {t + p.r * p.x, t + p.R * p.y});
  f.p_has_base_factors = multiset_contains(P.factors(i), {p.x, p.y});
  if (i > 1) f.p_has_t_factors = multiset_contains(P.factors(i), {p.x, p.y, t + p.y});
  return f;
}

DivisibilityFacts divisibility_facts(const Thm2Params& p, int i) {
  validate(p);
  require_index(i, p.L);
  auto [P, Q] = families(p);
  const int t = (i - 1) * p.m;
  DivisibilityFacts f;
  f.quotient_has_t_factors =
      multiset_contains(Q.quotient_factors(p.L, i - 1), {t + p.r * p.x, t + p.R * p.y, t + p.rho * p.z});
  f.p_has_base_factors = multiset_contains(P.factors(i), {p.x, p.y, p.z});
  if (i > 1) f.p_has_t_factors = multiset_contains(P.factors(i), {p.x, p.y, p.z, t + p.x, t + p.y, t + p.z});
  return f;
}

// --- scans -----------------------------------------------------------------

bool ScanReport::all_nonnegative() const {
  if (difference_negative) return false;
  for (const auto& ix : indices) {
    if (split == SplitKind::none) {
      if (ix.addend_negative) return false;
    } else {
      for (const auto& g : ix.groups)
        if (g.negative) return false;
    }
  }
  return true;
}

bool ScanReport::identities_hold() const {
  if (!telescopes) return false;
  for (const auto& ix : indices) {
    if (!ix.groups_sum_to_addend || !ix.addend_integral || !ix.divisibility_ok) return false;
    if (ix.lemma_route_agrees && !*ix.lemma_route_agrees) return false;
    for (const auto& g : ix.groups)
      if (!g.integral_or_half) return false;
  }
  return true;
}

std::string to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::none: return "none";
    case SplitKind::thm1: return "thm1";
    case SplitKind::thm2: return "thm2";
  }
  return "?";
}

namespace {

bool denominators_divide_two(const QSeries& s) {
  for (const auto& c : s.coeffs())
    if (c.get_den() != 1 && c.get_den() != 2) return false;
  return true;
}

ScanReport scan_common(const ProductFamily& P, const ProductFamily& Q, int L, int order, SplitKind split) {
  if (L < 1) throw UsageError("positivity_scan: L must be >= 1");
  ScanReport rep;
  rep.split = split;
  rep.L = L;
  rep.order = order;
  const QSeries diff = reciprocal_of_factors(P.factors(L), order) - reciprocal_of_factors(Q.factors(L), order);
  rep.difference_negative = first_negative(diff);
  return rep;
}

IndexReport index_report(const AddendDecomposition& d) {
  IndexReport ix;
  ix.index = d.index;
  ix.addend_negative = first_negative(d.addend);
  ix.addend_integral = is_integral(d.addend);
  for (const auto& g : d.groups) ix.groups.push_back({g.name, first_negative(g.series), denominators_divide_two(g.series)});
  ix.groups_sum_to_addend = d.groups.empty() || d.group_sum() == d.addend;
  ix.lemma_route_agrees = d.lemma_route_agrees;
  return ix;
}

}  // namespace

ScanReport positivity_scan(const ProductFamily& P, const ProductFamily& Q, int L, int order) {
  ScanReport rep = scan_common(P, Q, L, order, SplitKind::none);
  QSeries total(order);
  for (int i = 1; i <= L; ++i) {
    AddendDecomposition d;
    d.index = i;
    d.t_exponent = (i - 1) * P.modulus;
    d.addend = addend(P, Q, i, L, order);
    total += d.addend;
    rep.indices.push_back(index_report(d));
  }
  const QSeries diff = reciprocal_of_factors(P.factors(L), order) - reciprocal_of_factors(Q.factors(L), order);
  rep.telescopes = total == diff;
  return rep;
}

ScanReport positivity_scan(const Thm1Params& p, int order) {
  auto [P, Q] = families(p);
  ScanReport rep = scan_common(P, Q, p.L, order, SplitKind::thm1);
  QSeries total(order);
  for (int i = 1; i <= p.L; ++i) {
    auto d = thm1_split(p, i, order);
    total += d.addend;
    auto ix = index_report(d);
    ix.divisibility_ok = divisibility_facts(p, i).all();
    for (const auto& g : d.groups)
      if (!is_integral(g.series)) ix.groups.back().integral_or_half = false;
    rep.indices.push_back(std::move(ix));
  }
  const QSeries diff = reciprocal_of_factors(P.factors(p.L), order) - reciprocal_of_factors(Q.factors(p.L), order);
  rep.telescopes = total == diff;
  return rep;
}

ScanReport positivity_scan(const Thm2Params& p, int order) {
  auto [P, Q] = families(p);
  ScanReport rep = scan_common(P, Q, p.L, order, SplitKind::thm2);
  std::optional<TriSeries> f;
  if (p.L >= 2) f = lemma::f_expand({p.r, p.R, thm2_lemma_bounds(p, 2, order)});
  QSeries total(order);
  for (int i = 1; i <= p.L; ++i) {
    auto d = thm2_split(p, i, order, f ? &*f : nullptr);
    total += d.addend;
    auto ix = index_report(d);
    ix.divisibility_ok = divisibility_facts(p, i).all();
    rep.indices.push_back(std::move(ix));
  }
  const QSeries diff = reciprocal_of_factors(P.factors(p.L), order) - reciprocal_of_factors(Q.factors(p.L), order);
  rep.telescopes = total == diff;
  return rep;
}

}  // namespace qdom::antitelescope
