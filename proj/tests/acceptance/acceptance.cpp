// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run criteria 1..9
//   acceptance --criterion 4   run one criterion

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qdom/antitelescope.hpp"
#include "qdom/dominance.hpp"
#include "qdom/identities.hpp"
#include "qdom/lemma.hpp"
#include "qdom/partitions.hpp"
#include "qdom/polyring.hpp"
#include "qdom/proposal.hpp"
#include "qdom/series.hpp"

using namespace qdom;

namespace {

// Every comparison below is exact. The constants are the sweep sizes.
constexpr int kNaiveOrder = 12;
constexpr int kThm1Order = 60;
constexpr int kThm2Order = 60;
constexpr int kThm2Samples = 500;
constexpr std::uint64_t kThm2Seed = 20260601;
constexpr TriBounds kLemmaBounds{10, 40, 40};
constexpr int kLemmaMaxN = 10;
constexpr int kInterpretOrder = 30;
constexpr int kBgaOrder = 40;
constexpr int kHOrder = 60;
constexpr int kFourVarOrder = 40;
constexpr int kFourVarSamples = 50;
constexpr int kInjectionWeight = 40;
constexpr int kProposalOrder = 60;
constexpr int kProposalSamples = 200;
constexpr std::uint64_t kSection5Seed = 5150;
constexpr int kRandomTrials = 1000;
constexpr std::uint64_t kRandomSeed = 99991;

struct Result {
  bool pass = true;
  std::string detail;
};

// Criterion 1: the naive split of the finite Rogers-Ramanujan difference.
Result naive_failure() {
  const antitelescope::ProductFamily P{{1, 4}, 5}, Q{{2, 3}, 5};
  Result res;
  std::ostringstream os;
  for (int L = 2; L <= 5; ++L) {
    const auto a = antitelescope::addend(P, Q, 2, L, kNaiveOrder);
    const auto neg = first_negative(a);
    const bool ok = a[8] == -1 && neg && neg->index == 8;
    res.pass = res.pass && ok;
    os << " L=" << L << ":[q^8]=" << a[8].get_str();
  }
  res.detail = os.str().substr(1);
  return res;
}

// Criterion 2.
Result theorem1_sweep() {
  Result res;
  long checked = 0, bad = 0;
  std::string first;
  for (int L = 1; L <= 4; ++L)
    for (int m = 1; m <= 4; ++m)
      for (int x = 1; x <= 4; ++x)
        for (int y = 1; y <= 4; ++y)
          for (int r = 1; r <= 4; ++r)
            for (int R = 1; R <= 4; ++R) {
              const antitelescope::Thm1Params p{L, m, x, y, r, R};
              const auto scan = antitelescope::positivity_scan(p, kThm1Order);
              ++checked;
              if (!scan.all_nonnegative() || !scan.identities_hold() || scan.difference_negative) {
                if (bad++ == 0) {
                  std::ostringstream os;
                  os << "(" << L << "," << m << "," << x << "," << y << "," << r << "," << R << ")";
                  first = os.str();
                }
              }
            }
  res.pass = checked == 4096 && bad == 0;
  res.detail = std::to_string(checked) + " sextuples, " + std::to_string(bad) + " failures" +
               (first.empty() ? "" : ", first " + first);
  return res;
}

// Criterion 3.
Result theorem2_sweep() {
  std::mt19937_64 rng(kThm2Seed);
  std::uniform_int_distribution<int> d(1, 4);
  long bad = 0;
  std::string first;
  for (int s = 0; s < kThm2Samples; ++s) {
    const antitelescope::Thm2Params p{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const auto scan = antitelescope::positivity_scan(p, kThm2Order);
    bool ok = scan.all_nonnegative() && scan.identities_hold() && !scan.difference_negative;
    for (const auto& ix : scan.indices) ok = ok && ix.groups_sum_to_addend && ix.lemma_route_agrees.value_or(true);
    if (!ok && bad++ == 0) {
      std::ostringstream os;
      os << "(" << p.L << "," << p.m << "," << p.x << "," << p.y << "," << p.z << "," << p.r << "," << p.R << ","
         << p.rho << ")";
      first = os.str();
    }
  }
  Result res;
  res.pass = bad == 0;
  res.detail = std::to_string(kThm2Samples) + " octuples, " + std::to_string(bad) + " failures" +
               (first.empty() ? "" : ", first " + first);
  return res;
}

// Criterion 4.
Result lemma_sweep() {
  std::vector<TriSeries> fs;
  long negative_grids = 0, slice_failures = 0, window_failures = 0, symmetry_failures = 0;
  std::vector<std::string> slice_witnesses;
  for (int r = 1; r <= 5; ++r)
    for (int R = 1; R <= 5; ++R) {
      const lemma::LemmaParams lp{r, R, kLemmaBounds};
      fs.push_back(lemma::f_expand(lp));
      const auto& f = fs.back();
      for (const auto& c : f.data())
        if (sgn(c) < 0) {
          ++negative_grids;
          break;
        }
      for (int n = 0; n <= kLemmaMaxN; ++n)
        if (!(lemma::slice_eqtwo(n, lp) == lemma::slice_of(f, n))) {
          ++slice_failures;
          if (slice_witnesses.size() < 3)
            slice_witnesses.push_back("(r=" + std::to_string(r) + ",R=" + std::to_string(R) + ",n=" + std::to_string(n) + ")");
        }
      if (!lemma::negativity_window(lp, f).ok()) ++window_failures;
    }
  for (int r = 1; r <= 5; ++r)
    for (int R = 1; R <= 5; ++R)
      if (!lemma::symmetry_check(fs[static_cast<std::size_t>((r - 1) * 5 + R - 1)],
                                 fs[static_cast<std::size_t>((R - 1) * 5 + r - 1)])
               .equal)
        ++symmetry_failures;

  Result res;
  res.pass = negative_grids == 0 && slice_failures == 0 && window_failures == 0 && symmetry_failures == 0;
  std::ostringstream os;
  os << "25 grids: negative " << negative_grids << ", slice mismatches " << slice_failures << "/275, window "
     << window_failures << ", symmetry " << symmetry_failures;
  if (!slice_witnesses.empty()) {
    os << "; first slice mismatches";
    for (const auto& w : slice_witnesses) os << " " << w;
  }
  res.detail = os.str();
  return res;
}

// Criterion 5.
Result identity_certification() {
  long bad = 0, checked = 0;
  std::string first;
  for (int n = 0; n <= 6; ++n)
    for (int r = 1; r <= 4; ++r)
      for (int R = 1; R <= 4; ++R) {
        ++checked;
        const auto v = identity_check(lemma::eqone_terms(n, r, R), lemma::eqthree_terms(n, r, R));
        if (!v.equal && bad++ == 0)
          first = "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",R=" + std::to_string(R) + ")";
      }
  std::ostringstream os;
  os << checked << " slice identities, " << bad << " failures" << (first.empty() ? "" : ", first " + first);
  bool corpus_ok = true;
  for (const auto& id : identities::corpus()) {
    const bool eq = identity_check(id.lhs, id.rhs).equal;
    corpus_ok = corpus_ok && eq;
    os << "; " << id.name << " " << (eq ? "exact" : "FAILS");
  }
  return {bad == 0 && corpus_ok, os.str()};
}

// Criterion 6.
Result partition_interpretation() {
  using partitions::PartitionParams;
  const std::vector<PartitionParams> tuples{
      {5, 1, 1, 2, 2, 2}, {3, 1, 2, 2, 2, 1}, {4, 2, 2, 3, 2, 2}, {2, 1, 1, 1, 1, 1}, {3, 1, 1, 3, 3, 3},
      {5, 2, 3, 2, 3, 2}, {1, 1, 2, 1, 2, 2}, {4, 3, 1, 2, 4, 1}, {6, 2, 2, 2, 1, 3}, {3, 1, 3, 4, 2, 2},
      {2, 2, 1, 3, 3, 2}, {7, 1, 1, 4, 4, 1}};
  std::vector<partitions::InterpretReport> reps;
  int mismatched = 0;
  for (const auto& t : tuples) {
    reps.push_back(partitions::interpret_check(t, kInterpretOrder));
    if (!reps.back().match()) ++mismatched;
  }
  std::ostringstream os;
  os << tuples.size() << " tuples, n <= " << kInterpretOrder << ", " << mismatched << " mismatched";
  if (const auto w = partitions::minimal_witness(reps)) {
    os << "; minimal witness " << partitions::to_string(w->params) << " n=" << w->row.n << " V_count=" << w->row.v_count.get_str()
       << " series_V=" << w->row.series_v.get_str() << " W_count=" << w->row.w_count.get_str()
       << " series_W=" << w->row.series_w.get_str();
  }
  return {mismatched == 0, os.str()};
}

// Criterion 7.
Result bga_both_directions() {
  long holds_expected = 0, fails_expected = 0, degenerate = 0, wrong = 0;
  std::string first, degenerate_list;
  for (int m = 3; m <= 8; ++m)
    for (int r = 1; r <= m - 1; ++r)
      for (int L = 1; L <= 3; ++L) {
        const auto rep = check_named(NamedInequality::from_list(InequalityId::BGa, {m, r, L}), kBgaOrder);
        const bool predicted = bga_condition(m, r);
        if (!predicted && rep.specs_equal()) {
          ++degenerate;
          degenerate_list += " (" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(L) + ")";
          continue;
        }
        (predicted ? holds_expected : fails_expected)++;
        if (rep.holds() != predicted && wrong++ == 0)
          first = "(" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(L) + ")";
      }
  std::ostringstream os;
  os << holds_expected << " predicted to hold, " << fails_expected << " predicted to fail, " << wrong
     << " disagreements" << (first.empty() ? "" : ", first " + first) << "; degenerate (not counted):" << degenerate_list;
  const auto six = check_named(NamedInequality::from_list(InequalityId::BGa, {6, 2, 1}), kBgaOrder);
  const bool example = six.failure && six.failure->index == 4;
  return {wrong == 0 && example, os.str()};
}

// Criterion 8.
Result proposal_suite() {
  std::ostringstream os;
  bool ok = true;

  long h_negative = 0;
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      for (int z = 1; z <= 3; ++z)
        for (int r = 1; r <= 3; ++r)
          for (int R = 1; R <= 3; ++R)
            for (int rho = 1; rho <= 3; ++rho)
              if (first_negative(proposal::h_series({x, y, z, r, R, rho}, kHOrder))) ++h_negative;
  ok = ok && h_negative == 0;
  os << "h: 729 tuples, " << h_negative << " negative";

  std::mt19937_64 rng(kSection5Seed);
  std::uniform_int_distribution<int> d3(1, 3), d4(1, 4), dL(2, 3), dn(2, 3);
  long fourvar_bad = 0;
  for (int s = 0; s < kFourVarSamples; ++s) {
    const proposal::FourVarParams f{d4(rng), d4(rng), d4(rng), d4(rng), d3(rng), d3(rng), d3(rng), d3(rng)};
    if (!proposal::fourvar_identity(f, kFourVarOrder).equal) ++fourvar_bad;
  }
  ok = ok && fourvar_bad == 0;
  os << "; fourvar: " << kFourVarSamples << " tuples, " << fourvar_bad << " failures";

  long inj_tuples = 0, inj_vectors = 0, inj_bad = 0;
  std::vector<proposal::ProposalParams> all_small;
  std::function<void(proposal::ProposalParams&, int)> gen = [&](proposal::ProposalParams& p, int n) {
    if (p.n() == n) {
      all_small.push_back(p);
      return;
    }
    for (int x = 1; x <= 3; ++x)
      for (int r = 1; r <= 3; ++r) {
        p.x.push_back(x);
        p.r.push_back(r);
        gen(p, n);
        p.x.pop_back();
        p.r.pop_back();
      }
  };
  for (int n = 1; n <= 3; ++n) {
    proposal::ProposalParams p{1, {}, {}};
    gen(p, n);
  }
  for (const auto& p : all_small) {
    const auto rep = proposal::injection_check(p, kInjectionWeight);
    ++inj_tuples;
    inj_vectors += rep.checked;
    if (!rep.ok()) ++inj_bad;
  }
  ok = ok && inj_bad == 0;
  os << "; injection: " << inj_tuples << " tuples, " << inj_vectors << " vectors, " << inj_bad << " failures";

  long l1_tuples = 0, l1_bad = 0;
  for (const auto& base : all_small) {
    if (base.n() > 2) continue;
    for (int m = 1; m <= 3; ++m) {
      auto p = base;
      p.m = m;
      ++l1_tuples;
      if (!proposal::check_proposal(p, 1, kProposalOrder, kInjectionWeight).holds()) ++l1_bad;
    }
  }
  for (int s = 0; s < 40; ++s) {
    proposal::ProposalParams p{d4(rng), {d3(rng), d3(rng), d3(rng)}, {d3(rng), d3(rng), d3(rng)}};
    ++l1_tuples;
    if (!proposal::check_proposal(p, 1, kProposalOrder, kInjectionWeight).holds()) ++l1_bad;
  }
  ok = ok && l1_bad == 0;
  os << "; L=1 (proved-L1): " << l1_tuples << " tuples, " << l1_bad << " failures";

  long ev_bad = 0;
  std::string ev_first;
  for (int s = 0; s < kProposalSamples; ++s) {
    const int n = dn(rng), L = dL(rng);
    proposal::ProposalParams p{d4(rng), {}, {}};
    for (int i = 0; i < n; ++i) {
      p.x.push_back(d3(rng));
      p.r.push_back(d3(rng));
    }
    if (!proposal::check_proposal(p, L, kProposalOrder).holds() && ev_bad++ == 0) {
      std::ostringstream w;
      w << "m=" << p.m << " L=" << L;
      ev_first = w.str();
    }
  }
  ok = ok && ev_bad == 0;
  os << "; L in {2,3} (conjecture evidence): " << kProposalSamples << " tuples, " << ev_bad << " failures"
     << (ev_first.empty() ? "" : ", first " + ev_first);
  return {ok, os.str()};
}

// Criterion 9.
Result infrastructure() {
  std::mt19937_64 rng(kRandomSeed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6), ord(1, 30), nf(1, 6), ex(1, 12);
  auto random_series = [&](int order, bool unit) {
    QSeries s(order);
    for (int n = 0; n <= order; ++n) {
      Coefficient c(num(rng), den(rng));
      c.canonicalize();
      s[n] = c;
    }
    while (unit && sgn(s[0]) == 0) s[0] = Coefficient(num(rng), den(rng));
    s[0].canonicalize();
    return s;
  };
  long bad = 0;
  for (int t = 0; t < kRandomTrials; ++t) {
    const int N = ord(rng);
    const auto a = random_series(2 * N, true), b = random_series(2 * N, false);
    bool ok = a * series_reciprocal(a) == QSeries::one(2 * N);
    ok = ok && series_reciprocal(series_reciprocal(a)) == a;
    ok = ok && (a * b).truncated(N) == a.truncated(N) * b.truncated(N);
    ok = ok && series_reciprocal(a).truncated(N) == series_reciprocal(a.truncated(N));
    ok = ok && parse_series_text(to_text(b)) == b;
    std::vector<int> exps;
    const int k = nf(rng);
    for (int i = 0; i < k; ++i) exps.push_back(ex(rng));
    QSeries prod = QSeries::one(2 * N);
    for (int e : exps) prod.times_binomial(e);
    const auto inv = reciprocal_of_factors(exps, 2 * N);
    ok = ok && is_integral(inv) && is_integral(prod) && prod * inv == QSeries::one(2 * N);
    ok = ok && !first_negative(inv);
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(kRandomTrials) + " randomized trials, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1..9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Result()>> criteria{naive_failure,    theorem1_sweep,         theorem2_sweep,
                                                      lemma_sweep,      identity_certification, partition_interpretation,
                                                      bga_both_directions, proposal_suite,     infrastructure};
  int failures = 0;
  for (int c = 1; c <= 9; ++c) {
    if (only != 0 && c != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Result res = criteria[static_cast<std::size_t>(c - 1)]();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!res.pass) ++failures;
    std::printf("criterion %d: %s (%.1fs) %s\n", c, res.pass ? "PASS" : "FAIL", secs, res.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
