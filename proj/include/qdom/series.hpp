#pragma once

// Truncated univariate power series in q over exact rationals, and the
// Pochhammer-type products (a;q^m)_L they are built from.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdom/rational.hpp"

namespace qdom {

// Coefficients of q^0 .. q^order. Nothing beyond q^order is ever read or written.
class QSeries {
 public:
  explicit QSeries(int order = 0);
  // Extra entries past `order` are dropped; missing ones are zero.
  QSeries(int order, std::vector<Coefficient> coeffs);

  static QSeries one(int order);
  static QSeries monomial(int order, int exponent, const Coefficient& c = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coefficient& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Coefficient& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  std::span<const Coefficient> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const QSeries& other) const = default;

  // In-place multiplication by (1 - q^e). e = 0 zeroes the series.
  QSeries& times_binomial(int e);
  // In-place multiplication by 1/(1 - q^e); requires e >= 1.
  QSeries& over_binomial(int e);
  // In-place multiplication by q^k, k >= 0.
  QSeries& shift(int k);
  QSeries& scale(const Coefficient& c);

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);

  // Same series at a smaller order.
  QSeries truncated(int order) const;

 private:
  std::vector<Coefficient> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
// Forward substitution; throws SingularSeriesError on a zero constant term.
QSeries series_reciprocal(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

struct NegativeCoefficient {
  int index;
  Coefficient value;
  bool operator==(const NegativeCoefficient&) const = default;
};

std::optional<NegativeCoefficient> first_negative(const QSeries& a);

// True when every coefficient has denominator 1.
bool is_integral(const QSeries& a);

// Text form: one "index: numerator/denominator" line per coefficient, "/1" elided.
std::string to_text(const QSeries& a);
// Inverse of to_text. Lines must cover 0..N contiguously; blank lines are ignored.
QSeries parse_series_text(std::string_view text);

// --- Pochhammer products ---------------------------------------------------

// Factors (1 - q^{base + j*modulus}) for j = 0 .. length-1, or all j when
// length is unset (infinite). Under truncation at N only exponents <= N are
// materialized; larger factors are 1 mod q^{N+1}.
struct FactorFamily {
  int base = 1;
  int modulus = 1;
  std::optional<int> length;  // nullopt = infinite

  bool infinite() const { return !length.has_value(); }
  bool operator==(const FactorFamily&) const = default;
};

struct ProductSpec {
  std::vector<FactorFamily> families;

  // Convenience: (q^{b1}, ..., q^{bk}; q^m)_L, with L unset for infinite.
  static ProductSpec pochhammer(std::span<const int> bases, int modulus, std::optional<int> length);

  // Materialized factor exponents <= order, family by family.
  std::vector<int> factor_exponents(int order) const;
  bool operator==(const ProductSpec&) const = default;
};

std::string to_string(const ProductSpec& spec);

// Product of (1 - q^e) over the materialized factors.
QSeries pochhammer(const ProductSpec& spec, int order);
// 1 / pochhammer(...), built factor by factor as geometric series.
QSeries pochhammer_reciprocal(const ProductSpec& spec, int order);
// 1 / prod (1 - q^e) for an explicit factor list; exponents > order are skipped.
QSeries reciprocal_of_factors(std::span<const int> exponents, int order);

}  // namespace qdom
