#include "qdom/proposal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qdom/errors.hpp"

namespace qdom::proposal {

int ProposalParams::Sigma() const {
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += r[i] * x[i];
  return s;
}

int ProposalParams::sigma() const { return std::accumulate(x.begin(), x.end(), 0); }

void ProposalParams::validate() const {
  if (x.empty()) throw UsageError("proposal: need n >= 1 variables");
  if (x.size() != r.size()) throw UsageError("proposal: x and r must have the same length");
  if (m < 1) throw UsageError("proposal: m must be positive");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 1 || r[i] < 1) throw UsageError("proposal: x_(i) and r_(i) must be positive");
}

int min_small(const CountVector& v) {
  if (v.small.empty()) throw UsageError("count vector has no small parts");
  return *std::min_element(v.small.begin(), v.small.end());
}

namespace {

void require_shape(const CountVector& v, const ProposalParams& p) {
  if (static_cast<int>(v.small.size()) != p.n()) throw UsageError("count vector length differs from n");
  if (v.top < 0) throw UsageError("negative multiplicity");
  for (int c : v.small)
    if (c < 0) throw UsageError("negative multiplicity");
}

}  // namespace

long weight_prime(const CountVector& v, const ProposalParams& p) {
  require_shape(v, p);
  long w = static_cast<long>(v.top) * p.sigma();
  for (int i = 0; i < p.n(); ++i) w += static_cast<long>(v.small[i]) * p.r[i] * p.x[i];
  return w;
}

long weight(const CountVector& v, const ProposalParams& p) {
  require_shape(v, p);
  long w = static_cast<long>(v.top) * p.Sigma();
  for (int i = 0; i < p.n(); ++i) w += static_cast<long>(v.small[i]) * p.x[i];
  return w;
}

CountVector inject(const CountVector& pi_prime, const ProposalParams& p) {
  require_shape(pi_prime, p);
  const int mu_prime = min_small(pi_prime);
  CountVector pi;
  pi.top = mu_prime;
  for (int i = 0; i < p.n(); ++i) pi.small.push_back(p.r[i] * (pi_prime.small[i] - mu_prime) + pi_prime.top);
  return pi;
}

bool in_image(const CountVector& pi, const ProposalParams& p) {
  require_shape(pi, p);
  const int mu = min_small(pi);
  for (int i = 0; i < p.n(); ++i)
    if ((pi.small[i] - mu) % p.r[i] != 0) return false;
  return true;
}

CountVector invert(const CountVector& pi, const ProposalParams& p) {
  if (!in_image(pi, p)) throw NotInImageError("count vector is not in the image of the injection");
  const int mu = min_small(pi);
  CountVector pi_prime;
  pi_prime.top = mu;
  for (int i = 0; i < p.n(); ++i) pi_prime.small.push_back((pi.small[i] - mu) / p.r[i] + pi.top);
  return pi_prime;
}

int congruence_witness(const CountVector& pi_prime) { return pi_prime.top; }

std::vector<CountVector> enumerate_counts(const ProposalParams& p, int max_weight, bool prime) {
  p.validate();
  if (max_weight < 0) throw UsageError("max_weight must be nonnegative");
  std::vector<int> sizes;
  for (int i = 0; i < p.n(); ++i) sizes.push_back(prime ? p.r[i] * p.x[i] : p.x[i]);
  const int top_size = prime ? p.sigma() : p.Sigma();

  std::vector<CountVector> out;
  CountVector cur{std::vector<int>(static_cast<std::size_t>(p.n()), 0), 0};
  auto rec = [&](auto&& self, int k, int remaining) -> void {
    if (k == p.n()) {
      for (int c = 0; c * top_size <= remaining; ++c) {
        cur.top = c;
        out.push_back(cur);
      }
      cur.top = 0;
      return;
    }
    for (int c = 0; c * sizes[k] <= remaining; ++c) {
      cur.small[k] = c;
      self(self, k + 1, remaining - c * sizes[k]);
    }
    cur.small[k] = 0;
  };
  rec(rec, 0, max_weight);
  return out;
}

InjectionReport injection_check(const ProposalParams& p, int max_weight) {
  p.validate();
  InjectionReport rep;
  auto fail = [&](bool& flag, const CountVector& v) {
    flag = false;
    if (!rep.first_failure) rep.first_failure = v;
  };

  std::set<CountVector> images;
  for (const auto& pp : enumerate_counts(p, max_weight, true)) {
    ++rep.checked;
    const CountVector pi = inject(pp, p);
    if (weight(pi, p) != weight_prime(pp, p)) fail(rep.weight_preserved, pp);
    if (!images.insert(pi).second) fail(rep.injective, pp);
    const int A = congruence_witness(pp);
    for (int i = 0; i < p.n(); ++i)
      if (((pi.small[i] - A) % p.r[i]) != 0) fail(rep.witness_ok, pp);
    if (!in_image(pi, p) || invert(pi, p) != pp) fail(rep.round_trip, pp);
  }
  // Inject preserves weight, so images of weight <= max_weight are all found above.
  for (const auto& pi : enumerate_counts(p, max_weight, false)) {
    const bool hit = images.count(pi) > 0;
    bool refuses = false;
    try {
      (void)invert(pi, p);
    } catch (const NotInImageError&) {
      refuses = true;
    }
    if (hit == refuses) fail(rep.image_characterized, pi);
  }
  return rep;
}

// --- h and the four-variable identity -----------------------------------

namespace {

// q^a (1 - q^{(k-1)a}) / ((1 - q^a)(1 - q^{ka}))
QSeries block(int a, int k, int order) {
  QSeries s = QSeries::monomial(order, a);
  s.times_binomial((k - 1) * a).over_binomial(a).over_binomial(k * a);
  return s;
}

// q^e / (1 - q^e)
QSeries tail(int e, int order) {
  QSeries s = QSeries::monomial(order, e);
  s.over_binomial(e);
  return s;
}

QSeries scaled(QSeries s, const Coefficient& c) {
  s.scale(c);
  return s;
}

}  // namespace

QSeries h_series(const HParams& hp, int order) {
  if (hp.x < 1 || hp.y < 1 || hp.z < 1 || hp.r < 1 || hp.R < 1 || hp.rho < 1)
    throw UsageError("h: parameters must be positive");
  const QSeries A = block(hp.x, hp.r, order), B = block(hp.y, hp.R, order), C = block(hp.z, hp.rho, order);
  const QSeries ux = tail(hp.r * hp.x, order), uy = tail(hp.R * hp.y, order), uz = tail(hp.rho * hp.z, order);
  const Coefficient half(1, 2), third(1, 3);

  const QSeries AB = A * B, AC = A * C, BC = B * C;
  QSeries h = AB * C;
  h += scaled(AB + BC + AC, half);
  h += scaled(A * uy + A * uz + B * uz + B * ux + C * uy + C * ux, half);
  h += scaled(A + B + C, third);
  h += AB * uz + AC * uy + BC * ux;
  h += A * (uy * uz) + B * (ux * uz) + C * (uy * ux);
  return h;
}

FourVarVerdict fourvar_identity(const FourVarParams& f, int order) {
  if (f.x < 1 || f.y < 1 || f.z < 1 || f.w < 1 || f.r < 1 || f.R < 1 || f.rho < 1 || f.P < 1)
    throw UsageError("fourvar: parameters must be positive");
  const int big = f.r * f.x + f.R * f.y + f.rho * f.z + f.P * f.w;
  const int small = f.x + f.y + f.z + f.w;
  const std::vector<int> left{f.x, f.y, f.z, f.w, big};
  const std::vector<int> right{f.r * f.x, f.R * f.y, f.rho * f.z, f.P * f.w, small};

  FourVarVerdict v;
  v.lhs = reciprocal_of_factors(left, order) - reciprocal_of_factors(right, order);
  QSeries num = h_series({f.x, f.y, f.z, f.r, f.R, f.rho}, order);
  num += h_series({f.x, f.y, f.w, f.r, f.R, f.P}, order);
  num += h_series({f.x, f.z, f.w, f.r, f.rho, f.P}, order);
  num += h_series({f.y, f.z, f.w, f.R, f.rho, f.P}, order);
  num.over_binomial(small).over_binomial(big);
  v.rhs = std::move(num);
  for (int n = 0; n <= order; ++n)
    if (v.lhs[n] != v.rhs[n]) {
      v.equal = false;
      v.first_mismatch = n;
      break;
    }
  return v;
}

// --- the inequality ------------------------------------------------------

std::pair<ProductSpec, ProductSpec> proposal_specs(const ProposalParams& p, int L) {
  p.validate();
  if (L < 1) throw UsageError("proposal: L must be positive");
  std::vector<int> lhs = p.x, rhs;
  lhs.push_back(p.Sigma());
  for (int i = 0; i < p.n(); ++i) rhs.push_back(p.r[i] * p.x[i]);
  rhs.push_back(p.sigma());
  return {ProductSpec::pochhammer(lhs, p.m, L), ProductSpec::pochhammer(rhs, p.m, L)};
}

std::string proposal_status(const ProposalParams& p, int L) {
  if (p.n() == 1) return "theorem";
  if (L == 1) return "proved-L1";
  return "conjecture-evidence";
}

ProposalReport check_proposal(const ProposalParams& p, int L, int order, int injection_weight) {
  auto [lhs, rhs] = proposal_specs(p, L);
  ProposalReport rep;
  rep.dominance = dominates(lhs, rhs, order);
  rep.status = proposal_status(p, L);
  if (L != 1) return rep;

  const int W = std::min(order, injection_weight);
  rep.injection = injection_check(p, W);
  // Per-weight tallies against the two generating functions.
  std::vector<long> primes(static_cast<std::size_t>(W) + 1, 0), all(static_cast<std::size_t>(W) + 1, 0),
      imaged(static_cast<std::size_t>(W) + 1, 0);
  for (const auto& pp : enumerate_counts(p, W, true)) ++primes[static_cast<std::size_t>(weight_prime(pp, p))];
  for (const auto& pi : enumerate_counts(p, W, false)) {
    const auto w = static_cast<std::size_t>(weight(pi, p));
    ++all[w];
    if (in_image(pi, p)) ++imaged[w];
  }
  const QSeries left = pochhammer_reciprocal(lhs, W), right = pochhammer_reciprocal(rhs, W);
  for (int w = 0; w <= W; ++w) {
    const auto k = static_cast<std::size_t>(w);
    if (Coefficient(primes[k]) != right[w] || Coefficient(all[k]) != left[w] || imaged[k] != primes[k] ||
        imaged[k] > all[k])
      rep.counts_consistent = false;
  }
  return rep;
}

}  // namespace qdom::proposal
