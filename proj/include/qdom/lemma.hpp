#pragma once

// The trivariate rational function
//
//   f(x,y,t) = [(1-xy)(1-t x^r)(1-t y^R) + (1-t^2)(x-x^r)(y-y^R)]
//              / [(1-t x^r)(1-t y^R)(1-x)(1-y)(1-tx)(1-ty)]
//
// its power-series expansion, the closed forms for the slices [t^n]f, and
// the checks that together certify nonnegativity of every coefficient.

#include <optional>
#include <vector>

#include "qdom/polyring.hpp"

namespace qdom::lemma {

struct LemmaParams {
  int r = 1;
  int R = 1;
  TriBounds bounds{10, 40, 40};
};

// f as a RationalTerm over variables (t, x, y).
RationalTerm f_term(int r, int R);
TriSeries f_expand(const LemmaParams& params);

// Coefficients over (j, k) of x^j y^k for one fixed t-degree n.
struct SliceSeries {
  int n = 0;
  int nx = 0;
  int ny = 0;
  std::vector<Coefficient> coeffs;  // (nx+1) * (ny+1), row-major in j

  const Coefficient& at(int j, int k) const { return coeffs[static_cast<std::size_t>(j) * (ny + 1) + k]; }
  Coefficient& at(int j, int k) { return coeffs[static_cast<std::size_t>(j) * (ny + 1) + k]; }
  bool operator==(const SliceSeries&) const = default;
};

SliceSeries slice_of(const TriSeries& tri, int n);

// The nine displayed terms of the closed form for [t^n]f, in variables (x, y).
// Finite sums run over their displayed ranges; a range whose upper limit is
// below its lower limit is empty. Each displayed summand (a sum counts as one)
// is one entry.
std::vector<std::vector<RationalTerm>> eqtwo_terms(int n, int r, int R);
// Sum of the nine terms as a bivariate series inside (bounds.nx, bounds.ny).
SliceSeries slice_eqtwo(int n, const LemmaParams& params);
// One displayed term (0-based index) as a bivariate series.
SliceSeries eqtwo_term_series(int n, int term, const LemmaParams& params);

// The first closed form, with the sums left in. `literal_transcription`
// reproduces the printed third term, whose y-exponent reads n+r; the default
// uses n+R, the image of the second term under (x,r) <-> (y,R).
std::vector<RationalTerm> eqone_terms(int n, int r, int R, bool literal_transcription = false);
// The closed form with the sums eliminated.
std::vector<RationalTerm> eqthree_terms(int n, int r, int R);

struct EqVerdict {
  IdentityVerdict one_vs_three;
  IdentityVerdict three_vs_two;
  bool equal() const { return one_vs_three.equal && three_vs_two.equal; }
};

EqVerdict check_eqone_eqthree(int n, int r, int R, const IdentityOptions& options = {});

struct WindowReport {
  int r = 0;
  int R = 0;
  int max_n = 0;
  bool rest_nonnegative = true;        // all terms but the second, summed, per slice
  bool second_term_formula = true;     // closed form of the second term when r < n
  bool per_term_in_window = true;      // every per-term negative lies in the window
  bool totals_nonnegative = true;      // f coefficients within the bounds
  std::optional<std::array<int, 4>> first_violation;  // (n, term, j, k); term = -1 for totals
  long negative_per_term_cells = 0;    // how many (n, term, j, k) cells were negative
  Coefficient min_coefficient = 0;     // smallest f coefficient in the box

  bool ok() const { return rest_nonnegative && second_term_formula && per_term_in_window && totals_nonnegative; }
};

// Window: a per-term negative must come from the second term, with r < n and
// r <= j < n < k < (n+1)R.
WindowReport negativity_window(const LemmaParams& params);
// Same, reusing an expansion of f already computed for these params.
WindowReport negativity_window(const LemmaParams& params, const TriSeries& f);

struct SymmetryReport {
  bool equal = true;
  std::optional<std::array<int, 3>> first_mismatch;  // (n, j, k)
};

// c_{(r,R)}(n,j,k) == c_{(R,r)}(n,k,j) throughout a square (nx == ny) box.
SymmetryReport symmetry_check(int r, int R, TriBounds bounds);
SymmetryReport symmetry_check(const TriSeries& f_rR, const TriSeries& f_Rr);

}  // namespace qdom::lemma
