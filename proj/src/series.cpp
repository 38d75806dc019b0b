#include "qdom/series.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qdom/errors.hpp"

namespace qdom {

namespace {

void require_same_order(const QSeries& a, const QSeries& b, const char* op) {
  if (a.order() != b.order())
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()) + ")");
}

}  // namespace

QSeries::QSeries(int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(int order, std::vector<Coefficient> coeffs) : QSeries(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

QSeries QSeries::one(int order) { return monomial(order, 0); }

QSeries QSeries::monomial(int order, int exponent, const Coefficient& c) {
  if (exponent < 0) throw UsageError("negative exponent in monomial");
  QSeries s(order);
  if (exponent <= order) s[exponent] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return sgn(c) == 0; });
}

QSeries& QSeries::times_binomial(int e) {
  if (e < 0) throw UsageError("negative exponent in binomial factor");
  if (e == 0) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  for (int n = order(); n >= e; --n) (*this)[n] -= (*this)[n - e];
  return *this;
}

QSeries& QSeries::over_binomial(int e) {
  if (e <= 0) throw SingularSeriesError("reciprocal of (1 - q^0) is undefined");
  for (int n = e; n <= order(); ++n) (*this)[n] += (*this)[n - e];
  return *this;
}

QSeries& QSeries::shift(int k) {
  if (k < 0) throw UsageError("negative shift");
  if (k == 0) return *this;
  for (int n = order(); n >= 0; --n) {
    if (n >= k)
      (*this)[n] = (*this)[n - k];
    else
      (*this)[n] = 0;
  }
  return *this;
}

QSeries& QSeries::scale(const Coefficient& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_order(*this, other, "series_add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  require_same_order(*this, other, "series_sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order()) throw UsageError("cannot truncate to a larger order");
  return QSeries(new_order, std::vector<Coefficient>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

QSeries series_add(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r += b;
  return r;
}

QSeries series_sub(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r -= b;
  return r;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "series_mul");
  const int n = a.order();
  QSeries r(n);
  Coefficient tmp;
  for (int i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      tmp = a[i] * b[j];
      r[i + j] += tmp;
    }
  }
  return r;
}

QSeries series_reciprocal(const QSeries& a) {
  if (sgn(a[0]) == 0) throw SingularSeriesError("series_reciprocal: zero constant term");
  const int n = a.order();
  QSeries b(n);
  const Coefficient inv0 = 1 / a[0];
  b[0] = inv0;
  Coefficient acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j)
      if (sgn(a[j]) != 0) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return b;
}

std::optional<NegativeCoefficient> first_negative(const QSeries& a) {
  for (int n = 0; n <= a.order(); ++n)
    if (sgn(a[n]) < 0) return NegativeCoefficient{n, a[n]};
  return std::nullopt;
}

bool is_integral(const QSeries& a) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [](const Coefficient& c) { return is_integer(c); });
}

std::string to_text(const QSeries& a) {
  std::string out;
  for (int n = 0; n <= a.order(); ++n) {
    out += std::to_string(n);
    out += ": ";
    out += to_string(a[n]);
    out += '\n';
  }
  return out;
}

QSeries parse_series_text(std::string_view text) {
  std::vector<Coefficient> coeffs;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw UsageError("series text line " + std::to_string(line_no) + ": missing ':'");
    std::string_view idx_text = line.substr(0, colon);
    while (!idx_text.empty() && idx_text.front() == ' ') idx_text.remove_prefix(1);
    while (!idx_text.empty() && idx_text.back() == ' ') idx_text.remove_suffix(1);
    int idx = -1;
    auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
    if (ec != std::errc() || ptr != idx_text.data() + idx_text.size())
      throw UsageError("series text line " + std::to_string(line_no) + ": bad index");
    if (idx != static_cast<int>(coeffs.size()))
      throw UsageError("series text line " + std::to_string(line_no) + ": indices must run 0..N in order");
    std::string_view value = line.substr(colon + 1);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.remove_suffix(1);
    coeffs.push_back(parse_coefficient(value));
  }
  if (coeffs.empty()) throw UsageError("series text is empty");
  const int order = static_cast<int>(coeffs.size()) - 1;
  return QSeries(order, std::move(coeffs));
}

// --- Pochhammer products ---------------------------------------------------

ProductSpec ProductSpec::pochhammer(std::span<const int> bases, int modulus, std::optional<int> length) {
  ProductSpec spec;
  for (int b : bases) spec.families.push_back(FactorFamily{b, modulus, length});
  return spec;
}

std::vector<int> ProductSpec::factor_exponents(int order) const {
  std::vector<int> out;
  for (const auto& f : families) {
    if (f.base < 1 || f.modulus < 1) throw UsageError("factor family needs base >= 1 and modulus >= 1");
    if (f.length && *f.length < 0) throw UsageError("factor family length must be nonnegative");
    for (int j = 0; !f.length || j < *f.length; ++j) {
      const long e = f.base + static_cast<long>(j) * f.modulus;
      if (e > order) break;
      out.push_back(static_cast<int>(e));
    }
  }
  return out;
}

std::string to_string(const ProductSpec& spec) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < spec.families.size(); ++i) {
    const auto& f = spec.families[i];
    if (i) os << ", ";
    os << "(q^" << f.base << ";q^" << f.modulus << ")_";
    if (f.length)
      os << *f.length;
    else
      os << "inf";
  }
  os << ']';
  return os.str();
}

QSeries pochhammer(const ProductSpec& spec, int order) {
  QSeries s = QSeries::one(order);
  for (int e : spec.factor_exponents(order)) s.times_binomial(e);
  return s;
}

QSeries pochhammer_reciprocal(const ProductSpec& spec, int order) {
  const auto exps = spec.factor_exponents(order);
  return reciprocal_of_factors(exps, order);
}

QSeries reciprocal_of_factors(std::span<const int> exponents, int order) {
  QSeries s = QSeries::one(order);
  for (int e : exponents)
    if (e <= order) s.over_binomial(e);
  return s;
}

}  // namespace qdom
