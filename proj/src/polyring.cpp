#include "qdom/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>

#include "qdom/errors.hpp"

namespace qdom {

// --- MultiPoly -------------------------------------------------------------

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Coefficient& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps, const Coefficient& c) {
  MultiPoly p(std::move(variables));
  if (exps.size() != p.vars_.size()) throw UsageError("monomial: exponent tuple length != number of variables");
  p.add_term(exps, c);
  return p;
}

Coefficient MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

Coefficient MultiPoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void MultiPoly::add_term(const Exponents& exps, const Coefficient& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

Exponents MultiPoly::min_exponents() const {
  Exponents out(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = first ? e[i] : std::min(out[i], e[i]);
    first = false;
  }
  return out;
}

bool MultiPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int v : e)
      if (v < 0) return true;
  return false;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) throw UsageError("polynomial variable lists differ");
}

// Index permutation that lists variables alphabetically.
std::vector<std::size_t> sorted_order(const std::vector<std::string>& vars) {
  std::vector<std::size_t> idx(vars.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  return idx;
}

}  // namespace

MultiPoly poly_arith(PolyOp kind, const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a, b);
  MultiPoly r(a.variables());
  switch (kind) {
    case PolyOp::add:
      r = a;
      for (const auto& [e, c] : b.terms()) r.add_term(e, c);
      break;
    case PolyOp::sub:
      r = a;
      for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
      break;
    case PolyOp::mul: {
      Exponents e(a.variables().size());
      Coefficient prod;
      for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
          for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
          prod = ca * cb;
          r.add_term(e, prod);
        }
      }
      break;
    }
  }
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return poly_arith(PolyOp::add, a, b); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return poly_arith(PolyOp::sub, a, b); }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_arith(PolyOp::mul, a, b); }
MultiPoly operator-(const MultiPoly& a) { return Coefficient(-1) * a; }
MultiPoly operator+(const Coefficient& c, const MultiPoly& a) { return MultiPoly::constant(a.variables(), c) + a; }
MultiPoly operator+(const MultiPoly& a, const Coefficient& c) { return a + MultiPoly::constant(a.variables(), c); }
MultiPoly operator-(const Coefficient& c, const MultiPoly& a) { return MultiPoly::constant(a.variables(), c) - a; }
MultiPoly operator-(const MultiPoly& a, const Coefficient& c) { return a - MultiPoly::constant(a.variables(), c); }

MultiPoly operator*(const Coefficient& c, const MultiPoly& a) {
  MultiPoly r(a.variables());
  for (const auto& [e, v] : a.terms()) r.add_term(e, c * v);
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto order = sorted_order(vars_);
  // Canonical term order: descending total degree, then descending exponents
  // in sorted-variable order.
  std::vector<std::pair<Exponents, const Coefficient*>> list;
  for (const auto& [e, c] : terms_) {
    Exponents key;
    for (std::size_t i : order) key.push_back(e[i]);
    list.emplace_back(std::move(key), &c);
  }
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [key, cp] : list) {
    const Coefficient& c = *cp;
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Coefficient mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += vars_[order[i]];
      if (key[i] != 1) mono += "^" + std::to_string(key[i]);
    }
    if (mono.empty())
      out += qdom::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += qdom::to_string(mag) + " * " + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly result(vars_);
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_ws();
      auto [e, c] = parse_term();
      result.add_term(e, sign * c);
      skip_ws();
    }
    if (first) fail("empty polynomial");
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string read_digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }

  std::pair<Exponents, Coefficient> parse_term() {
    Exponents e(vars_.size(), 0);
    Coefficient c = 1;
    bool any = false;
    while (true) {
      skip_ws();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = read_digits();
        if (peek() == '/') {
          ++pos_;
          std::string den = read_digits();
          if (den.empty()) fail("missing denominator");
          num += "/" + den;
        }
        c *= parse_coefficient(num);
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += s_[pos_++];
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) fail("unknown variable '" + name + "'");
        int k = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          int sign = 1;
          if (peek() == '-') {
            sign = -1;
            ++pos_;
          }
          std::string d = read_digits();
          if (d.empty()) fail("missing exponent");
          k = sign * std::stoi(d);
        }
        e[static_cast<std::size_t>(it - vars_.begin())] += k;
        any = true;
      } else if (ch == '*') {
        ++pos_;
        continue;
      } else {
        break;
      }
    }
    if (!any) fail("expected a coefficient or variable");
    return {e, c};
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> variables) {
  return PolyParser(text, variables).parse();
}

// --- PolyRing --------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {}

std::size_t PolyRing::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw UsageError("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

MultiPoly PolyRing::var(std::string_view name, int k) const {
  Exponents e(vars_.size(), 0);
  e[index_of(name)] = k;
  return MultiPoly::monomial(vars_, e);
}

// --- TriSeries -------------------------------------------------------------

TriSeries::TriSeries(TriBounds bounds) : bounds_(bounds) {
  if (bounds.nt < 0 || bounds.nx < 0 || bounds.ny < 0) throw UsageError("TriSeries bounds must be nonnegative");
  data_.resize(static_cast<std::size_t>(bounds.nt + 1) * (bounds.nx + 1) * (bounds.ny + 1));
}

TriSeries& TriSeries::operator+=(const TriSeries& other) {
  if (!(bounds_ == other.bounds_)) throw UsageError("TriSeries bounds differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

namespace {

// Maps a polynomial's variables onto (t, x, y) slots.
std::array<int, 3> tri_slots_for(const std::vector<std::string>& vars, std::vector<int>& slot_of_var) {
  slot_of_var.assign(vars.size(), -1);
  std::array<int, 3> used{-1, -1, -1};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    int slot = vars[i] == "t" ? 0 : vars[i] == "x" ? 1 : vars[i] == "y" ? 2 : -1;
    if (slot < 0) throw UsageError("expand_rational: variable '" + vars[i] + "' is not one of t, x, y");
    slot_of_var[i] = slot;
    used[static_cast<std::size_t>(slot)] = static_cast<int>(i);
  }
  return used;
}

std::array<int, 3> to_tri(const Exponents& e, const std::vector<int>& slot_of_var) {
  std::array<int, 3> out{0, 0, 0};
  for (std::size_t i = 0; i < e.size(); ++i) out[static_cast<std::size_t>(slot_of_var[i])] += e[i];
  return out;
}

struct SparseTerm {
  std::array<int, 3> exp;
  Coefficient coef;
};

// In place: a <- a / factor, where factor = c0 + sum(rest), inside the box.
void divide_in_place(TriSeries& a, const Coefficient& c0, const std::vector<SparseTerm>& rest) {
  const auto& b = a.bounds();
  const bool unit = c0 == 1;
  const Coefficient inv0 = 1 / c0;
  Coefficient tmp;
  for (int n = 0; n <= b.nt; ++n)
    for (int j = 0; j <= b.nx; ++j)
      for (int k = 0; k <= b.ny; ++k) {
        Coefficient& cell = a.at(n, j, k);
        for (const auto& t : rest) {
          const int pn = n - t.exp[0], pj = j - t.exp[1], pk = k - t.exp[2];
          if (pn < 0 || pj < 0 || pk < 0) continue;
          const Coefficient& prev = a.at(pn, pj, pk);
          if (sgn(prev) == 0) continue;
          tmp = t.coef * prev;
          cell -= tmp;
        }
        if (!unit) cell *= inv0;
      }
}

}  // namespace

TriSeries expand_rational(const RationalTerm& term, TriBounds bounds) {
  TriSeries out(bounds);
  std::vector<int> slot_of_var;
  tri_slots_for(term.numerator.variables(), slot_of_var);
  for (const auto& [e, c] : term.numerator.terms()) {
    for (int v : e)
      if (v < 0) throw UsageError("expand_rational: numerator has a negative exponent");
    auto te = to_tri(e, slot_of_var);
    if (te[0] <= bounds.nt && te[1] <= bounds.nx && te[2] <= bounds.ny) out.at(te[0], te[1], te[2]) += c;
  }
  for (const auto& factor : term.denominator_factors) {
    if (factor.variables() != term.numerator.variables())
      throw UsageError("expand_rational: denominator variables differ from numerator");
    if (factor.has_negative_exponents())
      throw SingularDenominatorError("expand_rational: denominator factor " + factor.to_string() +
                                     " has negative exponents");
    const Coefficient c0 = factor.constant_term();
    if (sgn(c0) == 0)
      throw SingularDenominatorError("expand_rational: denominator factor " + factor.to_string() +
                                     " has zero constant term");
    std::vector<SparseTerm> rest;
    for (const auto& [e, c] : factor.terms()) {
      auto te = to_tri(e, slot_of_var);
      if (te == std::array<int, 3>{0, 0, 0}) continue;
      rest.push_back(SparseTerm{te, c});
    }
    divide_in_place(out, c0, rest);
  }
  return out;
}

TriSeries expand_rational_sum(const std::vector<RationalTerm>& terms, TriBounds bounds) {
  TriSeries out(bounds);
  for (const auto& t : terms) out += expand_rational(t, bounds);
  return out;
}

QSeries specialize(const TriSeries& tri, int et, int ex, int ey, int order) {
  if (et < 1 || ex < 1 || ey < 1) throw UsageError("specialize: weights must be positive");
  const auto& b = tri.bounds();
  if (b.nt < order / et || b.nx < order / ex || b.ny < order / ey)
    throw CoverageError("specialize: bounds (" + std::to_string(b.nt) + "," + std::to_string(b.nx) + "," +
                        std::to_string(b.ny) + ") do not cover order " + std::to_string(order) +
                        " with weights (" + std::to_string(et) + "," + std::to_string(ex) + "," +
                        std::to_string(ey) + ")");
  QSeries s(order);
  for (int n = 0; n <= b.nt && n * et <= order; ++n)
    for (int j = 0; j <= b.nx && n * et + j * ex <= order; ++j)
      for (int k = 0; k <= b.ny; ++k) {
        const int e = n * et + j * ex + k * ey;
        if (e > order) break;
        const Coefficient& c = tri.at(n, j, k);
        if (sgn(c) != 0) s[e] += c;
      }
  return s;
}

// --- Identity checking -----------------------------------------------------

namespace {

struct FactorCount {
  MultiPoly factor;
  int count;
};

void require_common_vars(const std::vector<RationalTerm>& lhs, const std::vector<RationalTerm>& rhs,
                         std::vector<std::string>& vars) {
  bool have = false;
  auto visit = [&](const MultiPoly& p) {
    if (!have) {
      vars = p.variables();
      have = true;
    } else if (p.variables() != vars) {
      throw UsageError("identity_check: all polynomials must share one variable list");
    }
  };
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : *side) {
      visit(t.numerator);
      for (const auto& f : t.denominator_factors) {
        visit(f);
        if (f.is_zero()) throw SingularDenominatorError("identity_check: zero denominator factor");
      }
    }
}

std::vector<FactorCount> count_factors(const std::vector<MultiPoly>& factors) {
  std::vector<FactorCount> out;
  for (const auto& f : factors) {
    auto it = std::find_if(out.begin(), out.end(), [&](const FactorCount& fc) { return fc.factor == f; });
    if (it == out.end())
      out.push_back({f, 1});
    else
      ++it->count;
  }
  return out;
}

// Multiset union (max multiplicity) of all denominator factor lists.
std::vector<FactorCount> common_denominator(const std::vector<RationalTerm>& lhs,
                                            const std::vector<RationalTerm>& rhs) {
  std::vector<FactorCount> common;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : *side)
      for (const auto& fc : count_factors(t.denominator_factors)) {
        auto it = std::find_if(common.begin(), common.end(),
                               [&](const FactorCount& c) { return c.factor == fc.factor; });
        if (it == common.end())
          common.push_back(fc);
        else
          it->count = std::max(it->count, fc.count);
      }
  return common;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1u) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const mpz_class& z) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), kPrime);
}

std::uint64_t reduce(const Coefficient& c) {
  const std::uint64_t den = reduce(c.get_den());
  if (den == 0) throw UsageError("identity_check: coefficient denominator divisible by the field prime");
  return mulmod(reduce(c.get_num()), invmod(den));
}

std::uint64_t evaluate_mod(const MultiPoly& p, const std::vector<std::uint64_t>& point,
                           const std::vector<std::uint64_t>& inverse) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t v = reduce(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) v = mulmod(v, powmod(point[i], static_cast<std::uint64_t>(e[i])));
      if (e[i] < 0) v = mulmod(v, powmod(inverse[i], static_cast<std::uint64_t>(-e[i])));
    }
    acc = (acc + v) % kPrime;
  }
  return acc;
}

// Total degree of the polynomial obtained by shifting out negative exponents.
int shifted_degree(const MultiPoly& p) {
  auto mins = p.min_exponents();
  int shift = 0;
  for (int m : mins) shift += std::min(m, 0);
  return p.total_degree() - shift;
}

}  // namespace

MultiPoly cleared_difference(const std::vector<RationalTerm>& lhs, const std::vector<RationalTerm>& rhs) {
  std::vector<std::string> vars;
  require_common_vars(lhs, rhs, vars);
  const auto common = common_denominator(lhs, rhs);
  MultiPoly diff(vars);
  auto accumulate = [&](const RationalTerm& t, int sign) {
    const auto own = count_factors(t.denominator_factors);
    MultiPoly acc = t.numerator;
    for (const auto& c : common) {
      auto it = std::find_if(own.begin(), own.end(), [&](const FactorCount& o) { return o.factor == c.factor; });
      const int missing = c.count - (it == own.end() ? 0 : it->count);
      if (missing > 0) acc = acc * c.factor.pow(static_cast<unsigned>(missing));
    }
    diff = sign > 0 ? diff + acc : diff - acc;
  };
  for (const auto& t : lhs) accumulate(t, +1);
  for (const auto& t : rhs) accumulate(t, -1);
  return diff;
}

IdentityVerdict identity_check(const std::vector<RationalTerm>& lhs, const std::vector<RationalTerm>& rhs,
                               const IdentityOptions& options) {
  IdentityVerdict v;
  v.method = options.method;
  if (options.method == IdentityMethod::exact) {
    const MultiPoly diff = cleared_difference(lhs, rhs);
    v.cleared_terms = diff.size();
    v.equal = diff.is_zero();
    if (!v.equal) {
      // Leading monomial in the canonical order.
      auto best = diff.terms().begin();
      for (auto it = diff.terms().begin(); it != diff.terms().end(); ++it) {
        int da = std::accumulate(it->first.begin(), it->first.end(), 0);
        int db = std::accumulate(best->first.begin(), best->first.end(), 0);
        if (da > db || (da == db && it->first > best->first)) best = it;
      }
      v.witness_monomial = best->first;
      v.witness_coefficient = best->second;
    }
    return v;
  }

  std::vector<std::string> vars;
  require_common_vars(lhs, rhs, vars);
  if (options.points < 1) throw UsageError("identity_check: randomized mode needs at least one point");

  // Degree bound of the cleared difference, for the Schwartz-Zippel estimate.
  const auto common = common_denominator(lhs, rhs);
  int denom_degree = 0;
  for (const auto& c : common) denom_degree += c.count * shifted_degree(c.factor);
  int degree = 0;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : *side) degree = std::max(degree, shifted_degree(t.numerator) + denom_degree);

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  std::vector<std::uint64_t> point(vars.size()), inverse(vars.size());
  auto side_value = [&](const std::vector<RationalTerm>& side, std::uint64_t& out) -> bool {
    std::uint64_t total = 0;
    for (const auto& t : side) {
      std::uint64_t den = 1;
      for (const auto& f : t.denominator_factors) den = mulmod(den, evaluate_mod(f, point, inverse));
      if (den == 0) return false;
      total = (total + mulmod(evaluate_mod(t.numerator, point, inverse), invmod(den))) % kPrime;
    }
    out = total;
    return true;
  };

  v.equal = true;
  for (int p = 0; p < options.points; ++p) {
    bool ok = false;
    std::uint64_t a = 0, b = 0;
    for (int attempt = 0; attempt <= options.max_retries && !ok; ++attempt) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        point[i] = dist(rng);
        inverse[i] = invmod(point[i]);
      }
      ok = side_value(lhs, a) && side_value(rhs, b);
    }
    if (!ok) throw SingularDenominatorError("identity_check: denominators kept vanishing at sampled points");
    ++v.points_used;
    if (a != b) {
      v.equal = false;
      break;
    }
  }
  const double per_point = std::min(1.0, static_cast<double>(degree) / static_cast<double>(kPrime - 1));
  v.failure_probability = v.equal ? std::pow(per_point, v.points_used) : 0.0;
  return v;
}

}  // namespace qdom
