#pragma once

// Naive anti-telescoping:
//
//   1/P(L) - 1/Q(L) = sum_{i=1..L} (Q(i)/Q(i-1) - P(i)/P(i-1)) / (P(i) * Q(L)/Q(i-1))
//
// for families P(i) = (q^{a_1}, ..., q^{a_k}; q^m)_i, together with the
// positivity splittings of the addends used for the two theorems.

#include <optional>
#include <string>
#include <vector>

#include "qdom/polyring.hpp"
#include "qdom/series.hpp"

namespace qdom::antitelescope {

// P(i) = prod over bases a, j < i of (1 - q^{a + j m}); P(0) = 1.
struct ProductFamily {
  std::vector<int> bases;
  int modulus = 1;

  ProductSpec at(int i) const;
  // Factor exponents of P(i), as a multiset (sorted).
  std::vector<int> factors(int i) const;
  // Factors of P(i)/P(i-1): the j = i-1 layer.
  std::vector<int> step_factors(int i) const;
  // Factors of P(L)/P(i), by multiset difference of factor lists.
  std::vector<int> quotient_factors(int L, int i) const;
};

// Multiset difference a - b; throws UsageError unless b is contained in a.
std::vector<int> multiset_difference(std::vector<int> a, std::vector<int> b);
bool multiset_contains(std::vector<int> haystack, std::vector<int> needles);

// Denominator factors of the i-th addend: P(i) together with Q(L)/Q(i-1).
std::vector<int> addend_denominator(const ProductFamily& P, const ProductFamily& Q, int i, int L);

QSeries addend(const ProductFamily& P, const ProductFamily& Q, int i, int L, int order);

struct Thm1Params {
  int L, m, x, y, r, R;
};

struct Thm2Params {
  int L, m, x, y, z, r, R, rho;
};

std::pair<ProductFamily, ProductFamily> families(const Thm1Params& p);
std::pair<ProductFamily, ProductFamily> families(const Thm2Params& p);

struct Group {
  std::string name;
  QSeries series;
};

struct AddendDecomposition {
  int index = 0;
  int t_exponent = 0;  // (i-1) m
  QSeries addend;
  std::vector<Group> groups;
  // Thm2, i >= 2: the f-route value of the last group agrees with its
  // direct expansion.
  std::optional<bool> lemma_route_agrees;

  QSeries group_sum() const;
};

AddendDecomposition thm1_split(const Thm1Params& p, int i, int order);

// For i >= 2 the last group is evaluated through the lemma's function f,
// specialized at (t, x, y) -> (q^{(i-1)m}, q^x, q^y). `f_cache`, when given,
// must be an expansion of f for (r, R) whose bounds cover that substitution.
AddendDecomposition thm2_split(const Thm2Params& p, int i, int order, const TriSeries* f_cache = nullptr);

// Bounds sufficient to specialize f for addend i of Thm2 at the given order.
TriBounds thm2_lemma_bounds(const Thm2Params& p, int i, int order);

// Structural divisibility facts on factor lists.
struct DivisibilityFacts {
  bool quotient_has_t_factors = true;  // (1-tq^{rx})(1-tq^{Ry})[(1-tq^{rho z})] | Q(L)/Q(i-1)
  bool p_has_base_factors = true;      // (1-q^x)(1-q^y)[(1-q^z)] | P(i)
  bool p_has_t_factors = true;         // i > 1: (1-tq^x)(1-tq^y)[(1-tq^z)] | P(i) alongside the base ones
  bool all() const { return quotient_has_t_factors && p_has_base_factors && p_has_t_factors; }
};

DivisibilityFacts divisibility_facts(const Thm1Params& p, int i);
DivisibilityFacts divisibility_facts(const Thm2Params& p, int i);

enum class SplitKind { none, thm1, thm2 };

struct GroupCheck {
  std::string name;
  std::optional<NegativeCoefficient> negative;
  bool integral_or_half = true;  // denominators divide 2
};

struct IndexReport {
  int index = 0;
  std::optional<NegativeCoefficient> addend_negative;
  bool addend_integral = true;
  std::vector<GroupCheck> groups;
  bool groups_sum_to_addend = true;
  std::optional<bool> lemma_route_agrees;
  bool divisibility_ok = true;
};

struct ScanReport {
  SplitKind split = SplitKind::none;
  int L = 0;
  int order = 0;
  std::vector<IndexReport> indices;  // increasing i
  std::optional<NegativeCoefficient> difference_negative;  // 1/P(L) - 1/Q(L)
  bool telescopes = true;  // sum of addends equals the difference exactly

  // Every addend (split none) or every group (split thm1/thm2) nonnegative,
  // together with the exact identities.
  bool all_nonnegative() const;
  bool identities_hold() const;
};

ScanReport positivity_scan(const ProductFamily& P, const ProductFamily& Q, int L, int order);
ScanReport positivity_scan(const Thm1Params& p, int order);
ScanReport positivity_scan(const Thm2Params& p, int order);

std::string to_string(SplitKind kind);

}  // namespace qdom::antitelescope
