#include "qdom/identities.hpp"

namespace qdom::identities {

namespace {

RationalTerm poly(MultiPoly p) { return RationalTerm{std::move(p), {}}; }

}  // namespace

NamedIdentity two_variable() {
  const PolyRing ring({"t", "x", "y", "a", "b"});
  const auto t = ring.var("t"), x = ring.var("x"), y = ring.var("y"), a = ring.var("a"), b = ring.var("b");
  NamedIdentity id{"two-variable", {}, {}};
  id.lhs.push_back(poly((1 - t * a) * (1 - t * b) * (1 - t * x * y) - (1 - t * x) * (1 - t * y) * (1 - t * a * b)));
  id.rhs.push_back(poly(t * (x - a) * (1 - b) * (1 - t * y)));
  id.rhs.push_back(poly(t * (y - b) * (1 - t * a) * (1 - x)));
  return id;
}

NamedIdentity three_variable() {
  const PolyRing ring({"t", "x", "y", "z", "a", "b", "c"});
  const auto t = ring.var("t"), x = ring.var("x"), y = ring.var("y"), z = ring.var("z");
  const auto a = ring.var("a"), b = ring.var("b"), c = ring.var("c");
  const Coefficient half(1, 2);
  NamedIdentity id{"three-variable", {}, {}};
  id.lhs.push_back(poly((1 - t * a) * (1 - t * b) * (1 - t * c) * (1 - t * x * y * z) -
                        (1 - t * x) * (1 - t * y) * (1 - t * z) * (1 - t * a * b * c)));
  id.rhs.push_back(poly(half * t * (x - a) *
                        ((1 - t * b) * (1 - t * c) * (1 - y * z) + (1 - t * y) * (1 - t * z) * (1 - b * c))));
  id.rhs.push_back(poly(half * t * (y - b) *
                        ((1 - t * c) * (1 - t * a) * (1 - z * x) + (1 - t * z) * (1 - t * x) * (1 - c * a))));
  id.rhs.push_back(poly(half * t * (z - c) * (1 - t * x) * (1 - t * y) * (1 - a * b)));
  id.rhs.push_back(poly(half * t * (z - c) *
                        ((1 - t * a) * (1 - t * b) * (1 - x * y) + (1 - t * t) * (x - a) * (y - b))));
  return id;
}

std::vector<NamedIdentity> corpus() { return {two_variable(), three_variable()}; }

}  // namespace qdom::identities
