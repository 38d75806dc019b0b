#include <doctest.h>

#include <random>

#include "qdom/errors.hpp"
#include "qdom/identities.hpp"
#include "qdom/lemma.hpp"
#include "qdom/polyring.hpp"

using namespace qdom;

TEST_CASE("sparse arithmetic") {
  const PolyRing ring({"x", "a", "b"});
  const auto x = ring.var("x"), a = ring.var("a"), b = ring.var("b");
  CHECK(((1 - x) * (1 + x)).to_string() == "-x^2 + 1");
  CHECK((a - a).is_zero());
  CHECK((a - a).size() == 0);
  const auto e = (x - a) * (1 - b);
  CHECK(e.size() == 4);
  CHECK(e == x - x * b - a + a * b);
  CHECK_THROWS_AS(x + PolyRing({"y"}).var("y"), UsageError);
}

TEST_CASE("canonical text round trip") {
  const std::vector<std::string> vars{"t", "x", "y"};
  const PolyRing ring(vars);
  const auto p = Coefficient(3, 2) * ring.var("t") * ring.var("x", 2) - ring.var("y", 5) + 7;
  const auto text = p.to_string();
  CHECK(text == "-y^5 + 3/2 * t x^2 + 7");
  CHECK(MultiPoly::parse(text, vars) == p);
  CHECK(MultiPoly::parse("2*x^2 - y", vars) == 2 * ring.var("x", 2) - ring.var("y"));
  CHECK(MultiPoly::parse("x^-2", vars) == ring.var("x", -2));
  CHECK_THROWS_AS(MultiPoly::parse("2 * z", vars), UsageError);
}

TEST_CASE("expansion of rational terms") {
  const PolyRing ring({"t", "x", "y"});
  const auto one = ring.constant(1), x = ring.var("x"), y = ring.var("y");

  const auto geo = expand_rational({one, {1 - x}}, {0, 3, 0});
  for (int j = 0; j <= 3; ++j) CHECK(geo.at(0, j, 0) == 1);

  const auto box = expand_rational({1 - x * y, {1 - x, 1 - y}}, {0, 3, 3});
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k) CHECK(box.at(0, j, k) == ((j == 0 || k == 0) ? 1 : 0));

  const auto f11 = lemma::f_expand({1, 1, {4, 4, 4}});
  CHECK(f11.at(0, 0, 0) == 1);
  CHECK(f11 == expand_rational({1 - x * y, {1 - x, 1 - y, 1 - ring.var("t") * x, 1 - ring.var("t") * y}}, {4, 4, 4}));

  CHECK_THROWS_AS(expand_rational({one, {x - y}}, {1, 1, 1}), SingularDenominatorError);
  CHECK_THROWS_AS(expand_rational({one, {1 - ring.var("x", -1)}}, {1, 1, 1}), SingularDenominatorError);
  const PolyRing other({"t", "x", "z"});
  CHECK_THROWS_AS(expand_rational({other.var("z"), {}}, {1, 1, 1}), UsageError);
}

TEST_CASE("multiply-back recovers the numerator") {
  const PolyRing ring({"t", "x", "y"});
  const auto t = ring.var("t"), x = ring.var("x"), y = ring.var("y");
  const RationalTerm term{(1 - x * y) * (1 + t * x) - 3 * t * y, {1 - t * x * x, 1 - y, 1 - t * y}};
  const TriBounds b{5, 6, 6};
  auto series = expand_rational(term, b);
  // Multiply by each denominator factor in turn.
  for (const auto& d : term.denominator_factors) {
    TriSeries next(b);
    for (const auto& [e, c] : d.terms())
      for (int n = 0; n + e[0] <= b.nt; ++n)
        for (int j = 0; j + e[1] <= b.nx; ++j)
          for (int k = 0; k + e[2] <= b.ny; ++k) next.at(n + e[0], j + e[1], k + e[2]) += c * series.at(n, j, k);
    series = next;
  }
  CHECK(series == expand_rational({term.numerator, {}}, b));
}

TEST_CASE("specialization to one variable") {
  TriSeries tri({4, 5, 2});
  tri.at(1, 2, 0) = 1;
  const auto s = specialize(tri, 3, 2, 5, 10);
  CHECK(s == QSeries::monomial(10, 7));
  CHECK(specialize(TriSeries({4, 5, 2}), 3, 2, 5, 10).is_zero());
  TriSeries small({2, 3, 1});
  small.at(1, 2, 0) = 1;
  CHECK_THROWS_AS(specialize(small, 3, 2, 5, 10), CoverageError);
  CHECK_THROWS_AS(specialize(tri, 1, 1, 1, 10), CoverageError);

  // f with r = R = 1 at t = q, x = q, y = q is (1 - q^2) / ((1-q)^2 (1-q^2)^2).
  const auto f = lemma::f_expand({1, 1, {8, 8, 8}});
  QSeries direct = QSeries::one(8);
  direct.times_binomial(2).over_binomial(1).over_binomial(1).over_binomial(2).over_binomial(2);
  CHECK(specialize(f, 1, 1, 1, 8) == direct);

  TriSeries a({6, 3, 6}), b({6, 3, 6});
  a.at(1, 1, 0) = 2;
  b.at(0, 2, 1) = Coefficient(-1, 3);
  TriSeries ab = a;
  ab += b;
  CHECK(specialize(ab, 1, 2, 1, 6) == specialize(a, 1, 2, 1, 6) + specialize(b, 1, 2, 1, 6));
}

TEST_CASE("identity checking") {
  const PolyRing ring({"x"});
  const auto x = ring.var("x");
  const std::vector<RationalTerm> geo{{ring.constant(1), {1 - x}}};
  CHECK(identity_check(geo, geo).equal);

  for (const auto& id : identities::corpus()) {
    CAPTURE(id.name);
    CHECK(identity_check(id.lhs, id.rhs).equal);
    IdentityOptions opt;
    opt.method = IdentityMethod::randomized;
    opt.seed = 7;
    const auto v = identity_check(id.lhs, id.rhs, opt);
    CHECK(v.equal);
    CHECK(v.failure_probability < 1e-10);
  }

  // A broken identity is caught by both methods, with a witness in exact mode.
  auto broken = identities::two_variable();
  broken.rhs.pop_back();
  const auto exact = identity_check(broken.lhs, broken.rhs);
  CHECK_FALSE(exact.equal);
  CHECK(exact.witness_monomial.has_value());
  IdentityOptions opt;
  opt.method = IdentityMethod::randomized;
  CHECK_FALSE(identity_check(broken.lhs, broken.rhs, opt).equal);

  // Removable singularities: (x^2 - y^2)/(x - y) = x + y.
  const PolyRing xy({"x", "y"});
  const auto X = xy.var("x"), Y = xy.var("y");
  CHECK(identity_check({{X * X - Y * Y, {X - Y}}}, {{X + Y, {}}}).equal);
}

TEST_CASE("exact and randomized checks agree on the slice closed forms") {
  IdentityOptions rnd;
  rnd.method = IdentityMethod::randomized;
  rnd.seed = 3;
  for (int n = 0; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int R = 1; R <= 3; ++R) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(R);
        const auto e = lemma::check_eqone_eqthree(n, r, R);
        const auto s = lemma::check_eqone_eqthree(n, r, R, rnd);
        CHECK(e.one_vs_three.equal == s.one_vs_three.equal);
        CHECK(e.three_vs_two.equal == s.three_vs_two.equal);
      }
}
