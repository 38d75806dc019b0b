#include "qdom/lemma.hpp"

#include "qdom/errors.hpp"

namespace qdom::lemma {

namespace {

const std::vector<std::string> kTXY{"t", "x", "y"};
const std::vector<std::string> kXY{"x", "y"};

void require_positive(int r, int R) {
  if (r < 1 || R < 1) throw UsageError("lemma: r and R must be positive integers");
}

struct XY {
  PolyRing ring{kXY};
  MultiPoly one = ring.constant(1);
  MultiPoly x(int k) const { return ring.var("x", k); }
  MultiPoly y(int k) const { return ring.var("y", k); }
};

}  // namespace

RationalTerm f_term(int r, int R) {
  require_positive(r, R);
  PolyRing ring(kTXY);
  const auto t = ring.var("t"), x = ring.var("x"), y = ring.var("y");
  const auto xr = ring.var("x", r), yR = ring.var("y", R);
  RationalTerm f;
  f.numerator = (1 - x * y) * (1 - t * xr) * (1 - t * yR) + (1 - t * t) * (x - xr) * (y - yR);
  f.denominator_factors = {1 - t * xr, 1 - t * yR, 1 - x, 1 - y, 1 - t * x, 1 - t * y};
  return f;
}

TriSeries f_expand(const LemmaParams& params) { return expand_rational(f_term(params.r, params.R), params.bounds); }

SliceSeries slice_of(const TriSeries& tri, int n) {
  const auto& b = tri.bounds();
  if (n < 0 || n > b.nt) throw UsageError("slice_of: n outside the t bound");
  SliceSeries s{n, b.nx, b.ny, {}};
  s.coeffs.resize(static_cast<std::size_t>(b.nx + 1) * (b.ny + 1));
  for (int j = 0; j <= b.nx; ++j)
    for (int k = 0; k <= b.ny; ++k) s.at(j, k) = tri.at(n, j, k);
  return s;
}

std::vector<std::vector<RationalTerm>> eqtwo_terms(int n, int r, int R) {
  require_positive(r, R);
  if (n < 0) throw UsageError("eqtwo_terms: n must be nonnegative");
  const XY p;
  const auto& one = p.one;
  const int delta = n % 2;
  const std::vector<MultiPoly> xy_den{one - p.y(1), one - p.x(1)};
  const std::vector<MultiPoly> y_den{one - p.y(1)};

  std::vector<std::vector<RationalTerm>> terms(9);
  terms[0].push_back({p.x(n) * (one - p.y(n + 1)), xy_den});
  terms[1].push_back({(p.y(n + 1) - p.y((n + 1) * R)) * (p.x(n) - p.x(r)), xy_den});
  terms[2].push_back({(p.y(n) - p.y(n * R)) * (p.x(2) - p.x(2 * r)), xy_den});
  terms[3].push_back({p.x(1) * (p.y(n) - p.y((n + 1) * R)), y_den});
  for (int j = 1; j <= n - 1; ++j)
    terms[4].push_back({p.x((n - j) * r) * (p.y(j) - p.y(j * R)) * (one - p.x(2 * r)), xy_den});
  for (int j = 0; j <= (n - 2 - delta) / 2; ++j)
    terms[5].push_back({p.x(n - 2 * j - 1) * p.y(R * (2 * j + 1)) * (one + p.x(1)), y_den});
  for (int j = 1; j <= (n - 2 + delta) / 2; ++j)
    terms[6].push_back(
        {p.x(n - 2 * j) * p.y(2 * j * R) * (one - p.y(R * (n + 1 - 2 * j))) * (one + p.x(1)), y_den});
  terms[7].push_back({p.y(n), y_den});
  if (delta) terms[8].push_back({p.x(1) * p.y((n + 1) * R), y_den});
  return terms;
}

namespace {

SliceSeries to_slice(const TriSeries& tri, int n) {
  SliceSeries s = slice_of(tri, 0);
  s.n = n;
  return s;
}

TriBounds slice_bounds(const LemmaParams& params) { return TriBounds{0, params.bounds.nx, params.bounds.ny}; }

}  // namespace

SliceSeries slice_eqtwo(int n, const LemmaParams& params) {
  std::vector<RationalTerm> flat;
  for (auto& group : eqtwo_terms(n, params.r, params.R))
    for (auto& t : group) flat.push_back(std::move(t));
  return to_slice(expand_rational_sum(flat, slice_bounds(params)), n);
}

SliceSeries eqtwo_term_series(int n, int term, const LemmaParams& params) {
  auto terms = eqtwo_terms(n, params.r, params.R);
  if (term < 0 || term >= static_cast<int>(terms.size())) throw UsageError("eqtwo_term_series: no such term");
  return to_slice(expand_rational_sum(terms[static_cast<std::size_t>(term)], slice_bounds(params)), n);
}

std::vector<RationalTerm> eqone_terms(int n, int r, int R, bool literal_transcription) {
  require_positive(r, R);
  if (n < 0) throw UsageError("eqone_terms: n must be nonnegative");
  const XY p;
  const auto& one = p.one;
  const auto x = p.x(1), y = p.y(1);
  const auto xr = p.x(r), yR = p.y(R);
  const std::vector<MultiPoly> d{one - x, one - y, x - y};
  auto with = [&](std::initializer_list<MultiPoly> extra) {
    std::vector<MultiPoly> out = d;
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  };
  const int third_exp = literal_transcription ? n + r : n + R;

  std::vector<RationalTerm> terms;
  terms.push_back({(one - x * y) * (p.x(n + 1) - p.y(n + 1)), d});
  terms.push_back({(-1 * (p.x(n + r) * (one - p.x(2))) + p.x(n * r + 1) * (one - p.x(2 * r))) * (y - yR),
                   with({xr - yR})});
  terms.push_back({(-1 * (p.y(third_exp) * (one - p.y(2))) + p.y(n * R + 1) * (one - p.y(2 * R))) * (x - xr),
                   with({xr - yR})});
  terms.push_back({(p.x((n - 1) * r) * (one - p.x(2 * r)) - p.y(n - 1) * (one - p.y(2))) * y * xr * (x - xr) *
                       (y - yR),
                   with({xr - yR, xr - y})});
  terms.push_back({(p.y((n - 1) * R) * (one - p.y(2 * R)) - p.x(n - 1) * (one - p.x(2))) * x * yR * (x - xr) *
                       (y - yR),
                   with({xr - yR, yR - x})});
  return terms;
}

std::vector<RationalTerm> eqthree_terms(int n, int r, int R) {
  require_positive(r, R);
  if (n < 0) throw UsageError("eqthree_terms: n must be nonnegative");
  const XY p;
  const auto& one = p.one;
  const auto x = p.x(1), y = p.y(1);
  const auto xr = p.x(r), yR = p.y(R);

  std::vector<RationalTerm> terms;
  terms.push_back({p.x(n) * (one - p.y(n + 1)), {one - y, one - x}});
  terms.push_back({(p.y(n + 1) - p.y((n + 1) * R)) * (p.x(n) - xr), {one - y, one - x}});
  terms.push_back({(p.y(n) - p.y(n * R)) * (p.x(2) - p.x(2 * r)), {one - y, one - x}});
  terms.push_back({x * (p.y(n) - p.y((n + 1) * R)), {one - y}});
  terms.push_back({p.y(n), {one - y}});
  terms.push_back({(one + x) * x * yR * (p.x(n - 1) - p.y((n - 1) * R)), {one - y, x - yR}});
  terms.push_back({y * xr * (p.x((n - 1) * r) - p.y(n - 1)) * (one - p.x(2 * r)), {one - y, one - x, xr - y}});
  terms.push_back({-1 * (p.y(R * (n + 1)) * (one + x) * (p.x(2) - p.x(n))), {one - y, one - p.x(2)}});
  terms.push_back(
      {-1 * (yR * xr * (p.x((n - 1) * r) - p.y(R * (n - 1))) * (one - p.x(2 * r))), {one - y, one - x, xr - yR}});
  return terms;
}

EqVerdict check_eqone_eqthree(int n, int r, int R, const IdentityOptions& options) {
  EqVerdict v;
  const auto three = eqthree_terms(n, r, R);
  v.one_vs_three = identity_check(eqone_terms(n, r, R), three, options);
  std::vector<RationalTerm> two;
  for (auto& group : eqtwo_terms(n, r, R))
    for (auto& t : group) two.push_back(std::move(t));
  v.three_vs_two = identity_check(three, two, options);
  return v;
}

WindowReport negativity_window(const LemmaParams& params) { return negativity_window(params, f_expand(params)); }

WindowReport negativity_window(const LemmaParams& params, const TriSeries& f) {
  const int r = params.r, R = params.R;
  const auto& b = params.bounds;
  if (!(f.bounds() == b)) throw UsageError("negativity_window: expansion bounds differ from params");
  WindowReport rep;
  rep.r = r;
  rep.R = R;
  rep.max_n = b.nt;
  bool have_min = false;
  auto note = [&](int n, int term, int j, int k) {
    if (!rep.first_violation) rep.first_violation = std::array<int, 4>{n, term, j, k};
  };

  for (int n = 0; n <= b.nt; ++n) {
    std::vector<SliceSeries> terms;
    for (int t = 0; t < 9; ++t) terms.push_back(eqtwo_term_series(n, t, params));

    for (int j = 0; j <= b.nx; ++j)
      for (int k = 0; k <= b.ny; ++k) {
        Coefficient rest = 0;
        for (int t = 0; t < 9; ++t) {
          const Coefficient& c = terms[static_cast<std::size_t>(t)].at(j, k);
          if (t != 1) rest += c;
          if (sgn(c) < 0) {
            ++rep.negative_per_term_cells;
            const bool in_window = t == 1 && r < n && r <= j && j < n && n < k && k < (n + 1) * R;
            if (!in_window) {
              rep.per_term_in_window = false;
              note(n, t, j, k);
            }
          }
        }
        if (sgn(rest) < 0) {
          rep.rest_nonnegative = false;
          note(n, -2, j, k);
        }
        // Second term when r < n: -(y^{n+1} + ... + y^{(n+1)R-1})(x^r + ... + x^{n-1}).
        if (r < n) {
          const bool inside = r <= j && j <= n - 1 && n + 1 <= k && k <= (n + 1) * R - 1;
          const Coefficient expected = inside ? -1 : 0;
          if (terms[1].at(j, k) != expected) {
            rep.second_term_formula = false;
            note(n, 1, j, k);
          }
        }
        const Coefficient& total = f.at(n, j, k);
        if (!have_min || total < rep.min_coefficient) rep.min_coefficient = total;
        have_min = true;
        if (sgn(total) < 0) {
          rep.totals_nonnegative = false;
          note(n, -1, j, k);
        }
      }
  }
  return rep;
}

SymmetryReport symmetry_check(int r, int R, TriBounds bounds) {
  if (bounds.nx != bounds.ny) throw UsageError("symmetry_check: bounds must be square in (x, y)");
  return symmetry_check(f_expand({r, R, bounds}), f_expand({R, r, bounds}));
}

SymmetryReport symmetry_check(const TriSeries& a, const TriSeries& b) {
  const auto& bd = a.bounds();
  if (bd.nx != bd.ny || !(bd == b.bounds())) throw UsageError("symmetry_check: bounds must be square and equal");
  SymmetryReport rep;
  for (int n = 0; n <= bd.nt; ++n)
    for (int j = 0; j <= bd.nx; ++j)
      for (int k = 0; k <= bd.ny; ++k)
        if (a.at(n, j, k) != b.at(n, k, j)) {
          rep.equal = false;
          rep.first_mismatch = std::array<int, 3>{n, j, k};
          return rep;
        }
  return rep;
}

}  // namespace qdom::lemma
