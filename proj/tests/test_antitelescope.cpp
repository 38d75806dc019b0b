#include <doctest.h>

#include "qdom/antitelescope.hpp"
#include "qdom/dominance.hpp"
#include "qdom/errors.hpp"
#include "qdom/lemma.hpp"

using namespace qdom;
using namespace qdom::antitelescope;

namespace {

const ProductFamily kRR1{{1, 4}, 5};
const ProductFamily kRR2{{2, 3}, 5};

QSeries reciprocal(const ProductFamily& f, int i, int N) { return reciprocal_of_factors(f.factors(i), N); }

}  // namespace

TEST_CASE("factor lists") {
  CHECK(kRR1.factors(2) == std::vector<int>{1, 4, 6, 9});
  CHECK(kRR1.step_factors(2) == std::vector<int>{6, 9});
  CHECK(kRR2.quotient_factors(3, 1) == std::vector<int>{7, 8, 12, 13});
  CHECK(multiset_difference({1, 1, 2, 5}, {1, 5}) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(multiset_difference({1, 2}, {3}), UsageError);
  CHECK(multiset_contains({1, 1, 2}, {1, 1}));
  CHECK_FALSE(multiset_contains({1, 2}, {1, 1}));
}

TEST_CASE("naive addends") {
  const int N = 10;
  // i = 1: (Q(1) - P(1)) / (P(1) Q(L)).
  QSeries first = QSeries::one(N);
  for (int e : kRR2.factors(1)) first.times_binomial(e);
  QSeries p1 = QSeries::one(N);
  for (int e : kRR1.factors(1)) p1.times_binomial(e);
  first -= p1;
  CHECK(addend(kRR1, kRR2, 1, 2, N) == first * reciprocal(kRR1, 1, N) * reciprocal(kRR2, 2, N));

  const auto second = addend(kRR1, kRR2, 2, 2, N);
  CHECK(second[6] == 1);
  for (int n = 0; n < 6; ++n) CHECK(second[n] == 0);
  const auto neg = first_negative(second);
  REQUIRE(neg);
  CHECK(neg->index == 8);
  CHECK(neg->value == -1);

  for (int L = 1; L <= 4; ++L) {
    QSeries total(20);
    for (int i = 1; i <= L; ++i) total += addend(kRR1, kRR2, i, L, 20);
    CHECK(total == reciprocal(kRR1, L, 20) - reciprocal(kRR2, L, 20));
  }
  CHECK_THROWS_AS(addend(kRR1, kRR2, 3, 2, N), UsageError);
}

TEST_CASE("V and W") {
  for (int i = 1; i <= 2; ++i) {
    const auto w0 = thm1_split({2, 3, 1, 2, 1, 3}, i, 20);
    CHECK(w0.groups[1].series.is_zero());
    const auto v0 = thm1_split({2, 3, 1, 2, 3, 1}, i, 20);
    CHECK(v0.groups[0].series.is_zero());
  }
  const auto d = thm1_split({2, 5, 1, 1, 2, 2}, 1, 30);
  CHECK(d.group_sum() == d.addend);
  CHECK_FALSE(first_negative(d.groups[0].series));
  CHECK_FALSE(first_negative(d.groups[1].series));
  CHECK(d.t_exponent == 0);
}

TEST_CASE("four groups") {
  const Thm2Params p{3, 2, 1, 2, 1, 2, 3, 1};
  for (int i = 2; i <= 3; ++i) {
    const auto d = thm2_split(p, i, 30);
    REQUIRE(d.groups.size() == 4);
    CHECK(d.groups[2].series.is_zero());
    CHECK(d.groups[3].series.is_zero());
    CHECK(d.group_sum() == d.addend);
  }

  const Thm2Params q{1, 2, 1, 1, 1, 2, 2, 2};
  const auto one = thm2_split(q, 1, 20);
  REQUIRE(one.groups.size() == 3);
  CHECK(one.group_sum() == one.addend);
  for (const auto& g : one.groups) CHECK_FALSE(first_negative(g.series));
  CHECK(!one.lemma_route_agrees.has_value());

  const Thm2Params r{3, 1, 1, 2, 3, 2, 3, 2};
  const auto f = lemma::f_expand({r.r, r.R, thm2_lemma_bounds(r, 2, 40)});
  for (int i = 2; i <= 3; ++i) {
    const auto cached = thm2_split(r, i, 40, &f);
    const auto fresh = thm2_split(r, i, 40);
    REQUIRE(cached.lemma_route_agrees.has_value());
    CHECK(*cached.lemma_route_agrees);
    CHECK(cached.group_sum() == cached.addend);
    CHECK(cached.groups[3].series == fresh.groups[3].series);
  }
}

TEST_CASE("divisibility facts on factor lists") {
  for (int L = 1; L <= 3; ++L)
    for (int i = 1; i <= L; ++i) {
      CHECK(divisibility_facts(Thm1Params{L, 2, 1, 3, 2, 2}, i).all());
      CHECK(divisibility_facts(Thm2Params{L, 3, 1, 2, 2, 3, 1, 2}, i).all());
    }
}

TEST_CASE("scans") {
  const auto naive = positivity_scan(kRR1, kRR2, 2, 20);
  CHECK(naive.telescopes);
  CHECK_FALSE(naive.indices[0].addend_negative);
  REQUIRE(naive.indices[1].addend_negative);
  CHECK(naive.indices[1].addend_negative->index == 8);
  CHECK_FALSE(naive.all_nonnegative());

  const auto t1 = positivity_scan(Thm1Params{2, 5, 1, 1, 2, 2}, 60);
  CHECK(t1.all_nonnegative());
  CHECK(t1.identities_hold());

  const auto t2 = positivity_scan(Thm2Params{2, 3, 1, 1, 1, 2, 2, 2}, 60);
  CHECK(t2.all_nonnegative());
  CHECK(t2.identities_hold());
  for (const auto& ix : t2.indices)
    for (const auto& g : ix.groups) CHECK(g.integral_or_half);
}

TEST_CASE("half-integral groups restore integrality when summed") {
  const auto d = thm2_split(Thm2Params{2, 1, 1, 1, 2, 3, 2, 2}, 2, 30);
  CHECK(is_integral(d.group_sum()));
  bool any_half = false;
  for (const auto& g : d.groups) any_half = any_half || !is_integral(g.series);
  CHECK(any_half);
}
