#pragma once

// Sparse multivariate (Laurent) polynomials over the rationals, dense
// truncated trivariate series in (t, x, y), and rational-function identity
// checking by clearing denominators or by sampling over a prime field.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdom/rational.hpp"
#include "qdom/series.hpp"

namespace qdom {

// Exponents may be negative: the closed forms for [t^n]f contain x^{(n-1)r}
// and y^{n-1}, which are Laurent monomials at n = 0.
using Exponents = std::vector<int>;

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Coefficient& c);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exps, const Coefficient& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Coefficient>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of the given monomial (zero if absent).
  Coefficient coefficient(const Exponents& exps) const;
  Coefficient constant_term() const;
  void add_term(const Exponents& exps, const Coefficient& c);

  int total_degree() const;  // max over terms of the exponent sum
  // Componentwise minimum exponent over all terms (zeros if empty).
  Exponents min_exponents() const;
  bool has_negative_exponents() const;

  MultiPoly pow(unsigned k) const;

  bool operator==(const MultiPoly& other) const = default;

  // Canonical text "c * x^a y^b ..." with variables in sorted order.
  std::string to_string() const;
  // Parses the canonical form (and common variants like "2*x^2", "-y").
  static MultiPoly parse(std::string_view text, std::vector<std::string> variables);

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Coefficient> terms_;
};

enum class PolyOp { add, sub, mul };
// Throws UsageError when the variable lists differ.
MultiPoly poly_arith(PolyOp kind, const MultiPoly& a, const MultiPoly& b);

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator+(const Coefficient& c, const MultiPoly& a);
MultiPoly operator+(const MultiPoly& a, const Coefficient& c);
MultiPoly operator-(const Coefficient& c, const MultiPoly& a);
MultiPoly operator-(const MultiPoly& a, const Coefficient& c);
MultiPoly operator*(const Coefficient& c, const MultiPoly& a);
inline MultiPoly operator+(long c, const MultiPoly& a) { return Coefficient(c) + a; }
inline MultiPoly operator-(long c, const MultiPoly& a) { return Coefficient(c) - a; }
inline MultiPoly operator*(long c, const MultiPoly& a) { return Coefficient(c) * a; }

// Builder for polynomials over a fixed variable list.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  MultiPoly zero() const { return MultiPoly(vars_); }
  MultiPoly constant(const Coefficient& c) const { return MultiPoly::constant(vars_, c); }
  MultiPoly var(std::string_view name) const { return var(name, 1); }
  // name^k, negative k allowed.
  MultiPoly var(std::string_view name, int k) const;
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> vars_;
};

// A rational function numerator / prod(denominator_factors).
struct RationalTerm {
  MultiPoly numerator;
  std::vector<MultiPoly> denominator_factors;
};

// --- Truncated trivariate series -------------------------------------------

struct TriBounds {
  int nt = 0;
  int nx = 0;
  int ny = 0;
  bool operator==(const TriBounds&) const = default;
};

// Coefficients of t^n x^j y^k for n <= nt, j <= nx, k <= ny.
class TriSeries {
 public:
  explicit TriSeries(TriBounds bounds = {});

  const TriBounds& bounds() const { return bounds_; }
  const Coefficient& at(int n, int j, int k) const { return data_[index(n, j, k)]; }
  Coefficient& at(int n, int j, int k) { return data_[index(n, j, k)]; }
  const std::vector<Coefficient>& data() const { return data_; }

  TriSeries& operator+=(const TriSeries& other);
  bool operator==(const TriSeries& other) const = default;

 private:
  std::size_t index(int n, int j, int k) const {
    return (static_cast<std::size_t>(n) * (bounds_.nx + 1) + j) * (bounds_.ny + 1) + k;
  }
  TriBounds bounds_;
  std::vector<Coefficient> data_;
};

// Expands numerator * prod(1/factor) inside the bounds. Variables are matched
// by name against {t, x, y}; any other variable is a UsageError. Each
// denominator factor needs a nonzero constant term and no negative exponents,
// otherwise SingularDenominatorError.
TriSeries expand_rational(const RationalTerm& term, TriBounds bounds);
TriSeries expand_rational_sum(const std::vector<RationalTerm>& terms, TriBounds bounds);

// Maps t^n x^j y^k to q^{n*et + j*ex + k*ey}. Throws CoverageError unless the
// bounds contain every monomial whose image has exponent <= order.
QSeries specialize(const TriSeries& tri, int et, int ex, int ey, int order);

// --- Identity checking -----------------------------------------------------

enum class IdentityMethod { exact, randomized };

struct IdentityOptions {
  IdentityMethod method = IdentityMethod::exact;
  std::uint64_t seed = 1;
  int points = 20;
  int max_retries = 16;  // per point, when a denominator vanishes
};

struct IdentityVerdict {
  bool equal = false;
  IdentityMethod method = IdentityMethod::exact;
  // exact mode: leading monomial of the cleared difference on failure
  std::optional<Exponents> witness_monomial;
  std::optional<Coefficient> witness_coefficient;
  // randomized mode: upper bound on P(report equal | identity false)
  double failure_probability = 0.0;
  int points_used = 0;
  std::size_t cleared_terms = 0;  // size of the cleared difference (exact mode)
};

IdentityVerdict identity_check(const std::vector<RationalTerm>& lhs, const std::vector<RationalTerm>& rhs,
                               const IdentityOptions& options = {});

// The cleared-denominator difference sum(lhs) - sum(rhs), times the common
// denominator. Zero iff the identity holds.
MultiPoly cleared_difference(const std::vector<RationalTerm>& lhs, const std::vector<RationalTerm>& rhs);

}  // namespace qdom
