#include <doctest.h>

#include <random>

#include "qdom/dominance.hpp"
#include "qdom/errors.hpp"

using namespace qdom;

namespace {

// Partitions of each n <= N into colored parts, one color per listed size.
std::vector<long> colored_counts(const std::vector<int>& sizes, int N) {
  std::vector<long> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int s : sizes)
    for (int n = s; n <= N; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - s)];
  return p;
}

std::vector<long> counts_of(const ProductSpec& spec, int N) { return colored_counts(spec.factor_exponents(N), N); }

}  // namespace

TEST_CASE("basic verdicts") {
  const auto triv = check_named(NamedInequality::from_list(InequalityId::Thm1, {1, 1, 1, 1, 1, 1}), 20);
  CHECK(triv.holds());
  CHECK(triv.difference.is_zero());
  CHECK(triv.specs_equal());

  const auto bga = check_named(NamedInequality::from_list(InequalityId::BGa, {6, 2, 1}), 10);
  REQUIRE(bga.failure);
  CHECK(bga.failure->index == 4);
  CHECK(bga.failure->value == -1);

  CHECK(check_named(NamedInequality::from_list(InequalityId::finiteRR, {3}), 30).holds());
  CHECK(check_named(NamedInequality::from_list(InequalityId::Thm1, {2, 3, 1, 2, 2, 2}), 40).holds());
  CHECK(check_named(NamedInequality::from_list(InequalityId::BGa, {7, 2, 2}), 40).holds());
  CHECK(check_named(NamedInequality::from_list(InequalityId::Thm2, {1, 2, 1, 1, 1, 2, 2, 2}), 40).holds());
  CHECK(check_named(NamedInequality::from_list(InequalityId::RR, {}), 60).holds());
  CHECK(check_named(NamedInequality::from_list(InequalityId::littleGollnitz, {2}), 60).holds());
  CHECK(check_named(NamedInequality::from_list(InequalityId::BGr, {3, 2}), 60).holds());
}

TEST_CASE("enumeration oracle for the series") {
  const auto ineq = NamedInequality::from_list(InequalityId::Thm1, {2, 3, 1, 2, 2, 2});
  auto [lhs, rhs] = named_specs(ineq);
  const auto rep = dominates(lhs, rhs, 12);
  const auto a = counts_of(lhs, 12), b = counts_of(rhs, 12);
  for (int n = 0; n <= 12; ++n) CHECK(rep.difference[n] == a[static_cast<std::size_t>(n)] - b[static_cast<std::size_t>(n)]);

  const auto bga = named_specs(NamedInequality::from_list(InequalityId::BGa, {6, 2, 1}));
  CHECK(counts_of(bga.first, 4)[4] == 1);
  CHECK(counts_of(bga.second, 4)[4] == 2);
}

TEST_CASE("malformed parameters") {
  CHECK_THROWS_AS(check_named(NamedInequality::from_list(InequalityId::Thm1, {0, 1, 1, 1, 1, 1}), 10), UsageError);
  CHECK_THROWS_AS(NamedInequality::from_list(InequalityId::Thm1, {1, 1, 1}), UsageError);
  CHECK_THROWS_AS(check_named(NamedInequality::from_list(InequalityId::BGa, {5, 5, 1}), 10), UsageError);
  CHECK_THROWS_AS(check_named(NamedInequality::from_list(InequalityId::BGr, {4, 1}), 10), UsageError);
  CHECK_THROWS_AS(NamedInequality::from_list(InequalityId::Proposal, {1, 1, 1}), UsageError);
  CHECK_THROWS_AS(parse_inequality_id("nope"), UsageError);
  CHECK(parse_inequality_id("LG") == InequalityId::littleGollnitz);
}

TEST_CASE("parameter lists round trip") {
  for (auto id : {InequalityId::BGa, InequalityId::Thm1, InequalityId::Thm2, InequalityId::BGr}) {
    std::vector<int> v;
    for (std::size_t i = 0; i < parameter_names(id).size(); ++i) v.push_back(static_cast<int>(i) + 3);
    CHECK(NamedInequality::from_list(id, v).as_list() == v);
  }
  const std::vector<int> prop{2, 3, 1, 2, 4, 2, 3, 5};
  const auto p = NamedInequality::from_list(InequalityId::Proposal, prop);
  CHECK(p.xs == std::vector<int>{1, 2, 4});
  CHECK(p.rs == std::vector<int>{2, 3, 5});
  CHECK(p.as_list() == prop);
}

TEST_CASE("reflexivity, transitivity and stability") {
  std::mt19937_64 rng(11);
  auto random_spec = [&] {
    std::vector<int> bases;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) bases.push_back(1 + static_cast<int>(rng() % 6));
    return ProductSpec::pochhammer(bases, 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3));
  };
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_spec();
    const auto self = dominates(s, s, 30);
    CHECK(self.holds());
    CHECK(self.difference.is_zero());
  }
  int transitive_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_spec(), b = random_spec(), c = random_spec();
    if (dominates(a, b, 25).holds() && dominates(b, c, 25).holds()) {
      ++transitive_cases;
      CHECK(dominates(a, c, 25).holds());
    }
  }
  CHECK(transitive_cases > 0);

  const auto bga = named_specs(NamedInequality::from_list(InequalityId::BGa, {6, 2, 1}));
  for (int N = 4; N <= 40; N += 6) {
    const auto rep = dominates(bga.first, bga.second, N);
    REQUIRE(rep.failure);
    CHECK(rep.failure->index == 4);
  }
}

TEST_CASE("BGa predicate") {
  CHECK(bga_condition(7, 2));
  CHECK_FALSE(bga_condition(6, 2));
  CHECK_FALSE(bga_condition(6, 3));
  CHECK_FALSE(bga_condition(5, 1));
}
