#include <doctest.h>

#include <random>

#include "qdom/dominance.hpp"
#include "qdom/errors.hpp"
#include "qdom/proposal.hpp"

using namespace qdom;
using namespace qdom::proposal;

TEST_CASE("the injection on a worked example") {
  const ProposalParams p{3, {1, 2}, {2, 3}};
  CHECK(p.sigma() == 3);
  CHECK(p.Sigma() == 8);

  const CountVector pp{{3, 1}, 2};
  const auto pi = inject(pp, p);
  CHECK(pi == CountVector{{6, 2}, 1});
  CHECK(weight_prime(pp, p) == 18);
  CHECK(weight(pi, p) == 18);
  CHECK(congruence_witness(pp) == 2);
  CHECK(invert(pi, p) == pp);

  const CountVector zero{{0, 0}, 0};
  CHECK(inject(zero, p) == zero);
  CHECK(invert(zero, p) == zero);

  // With mu' = 0 nothing lands on Sigma.
  const auto z = inject({{0, 4}, 1}, p);
  CHECK(z == CountVector{{1, 13}, 0});

  CHECK_FALSE(in_image({{1, 0}, 0}, p));
  CHECK_THROWS_AS(invert({{1, 0}, 0}, p), NotInImageError);
  CHECK_THROWS_AS(inject({{1}, 0}, p), UsageError);
}

TEST_CASE("exhaustive injection checks") {
  for (const ProposalParams& p : {ProposalParams{1, {1, 2}, {2, 3}}, ProposalParams{1, {1, 1, 2}, {2, 3, 2}},
                                  ProposalParams{1, {3}, {2}}, ProposalParams{1, {2, 2}, {1, 3}}}) {
    const auto rep = injection_check(p, 30);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
    CHECK_FALSE(rep.first_failure);
  }
  // Weight-30 enumeration over S' for x = (1,2), r = (2,3): parts 2, 6 and 3.
  long count = 0;
  for (int a = 0; 2 * a <= 30; ++a)
    for (int b = 0; 2 * a + 6 * b <= 30; ++b) count += (30 - 2 * a - 6 * b) / 3 + 1;
  CHECK(static_cast<long>(enumerate_counts({1, {1, 2}, {2, 3}}, 30, true).size()) == count);
}

TEST_CASE("the splitting function h") {
  for (int x = 1; x <= 3; ++x) CHECK(h_series({x, 2, 1, 1, 1, 1}, 30).is_zero());
  CHECK_FALSE(first_negative(h_series({1, 1, 1, 2, 2, 2}, 40)));
  CHECK_FALSE(first_negative(h_series({2, 3, 5, 2, 2, 3}, 40)));
  CHECK_FALSE(h_series({1, 1, 1, 2, 2, 2}, 40).is_zero());
  CHECK_THROWS_AS(h_series({0, 1, 1, 1, 1, 1}, 10), UsageError);
}

TEST_CASE("four-variable identity") {
  const auto ones = fourvar_identity({1, 1, 1, 1, 1, 1, 1, 1}, 20);
  CHECK(ones.equal);
  CHECK(ones.lhs.is_zero());
  CHECK(ones.rhs.is_zero());
  CHECK(fourvar_identity({1, 1, 1, 1, 2, 2, 2, 2}, 30).equal);
  CHECK(fourvar_identity({1, 2, 3, 4, 2, 3, 2, 3}, 30).equal);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    FourVarParams f{};
    int* fields[] = {&f.x, &f.y, &f.z, &f.w, &f.r, &f.R, &f.rho, &f.P};
    for (int* v : fields) *v = 1 + static_cast<int>(rng() % 3);
    const auto v = fourvar_identity(f, 25);
    CHECK(v.equal);
    CHECK_FALSE(first_negative(v.lhs));
  }
}

TEST_CASE("proposal checks") {
  const auto n1 = check_proposal({3, {2}, {3}}, 2, 30);
  CHECK(n1.holds());
  CHECK(n1.dominance.specs_equal());
  CHECK(n1.status == "theorem");

  const auto n2 = check_proposal({3, {1, 2}, {2, 3}}, 1, 40);
  CHECK(n2.holds());
  CHECK(n2.status == "proved-L1");
  REQUIRE(n2.injection);
  CHECK(n2.injection->ok());
  CHECK(n2.counts_consistent);

  const auto n3 = check_proposal({2, {1, 1, 2}, {2, 3, 2}}, 2, 40);
  CHECK(n3.holds());
  CHECK(n3.status == "conjecture-evidence");
  CHECK_FALSE(n3.injection);

  CHECK_THROWS_AS(check_proposal({2, {1, 0}, {2, 3}}, 1, 10), UsageError);
  CHECK_THROWS_AS(check_proposal({2, {1, 2}, {2}}, 1, 10), UsageError);
}

TEST_CASE("specializations coincide with the two-parameter theorems") {
  for (int L = 1; L <= 3; ++L) {
    const auto t1 = check_named(NamedInequality::from_list(InequalityId::Thm1, {L, 3, 1, 2, 2, 3}), 40);
    const auto p2 = check_proposal({3, {1, 2}, {2, 3}}, L, 40);
    CHECK(t1.difference == p2.dominance.difference);
    CHECK(t1.holds() == p2.dominance.holds());

    const auto t2 = check_named(NamedInequality::from_list(InequalityId::Thm2, {L, 2, 1, 1, 2, 2, 3, 2}), 40);
    const auto p3 = check_proposal({2, {1, 1, 2}, {2, 3, 2}}, L, 40);
    CHECK(t2.difference == p3.dominance.difference);
    CHECK(t2.holds() == p3.dominance.holds());
  }
}
