#pragma once

// n-variable generalization: the L = 1 injection between multiplicity
// vectors, the four-variable splitting function h, and the series checks.

#include <optional>
#include <string>
#include <vector>

#include "qdom/dominance.hpp"
#include "qdom/series.hpp"

namespace qdom::proposal {

struct ProposalParams {
  int m = 1;
  std::vector<int> x;  // x_(1..n)
  std::vector<int> r;  // r_(1..n)

  int n() const { return static_cast<int>(x.size()); }
  int Sigma() const;  // sum r_(i) x_(i)
  int sigma() const;  // sum x_(i)
  void validate() const;
};

// Multiplicities of the n "small" parts and of the one combined part.
// For pi' over S' = {r_(i)x_(i)} + {sigma}: small[i] = nu(r_(i)x_(i)), top = nu(sigma).
// For pi  over S  = {x_(i)} + {Sigma}:     small[i] = nu(x_(i)),      top = nu(Sigma).
struct CountVector {
  std::vector<int> small;
  int top = 0;
  auto operator<=>(const CountVector&) const = default;
};

int min_small(const CountVector& v);

long weight_prime(const CountVector& pi_prime, const ProposalParams& p);
long weight(const CountVector& pi, const ProposalParams& p);

CountVector inject(const CountVector& pi_prime, const ProposalParams& p);
// Throws NotInImageError unless r_(i) divides nu(x_(i)) - min_i nu(x_(i)) for all i.
CountVector invert(const CountVector& pi, const ProposalParams& p);
bool in_image(const CountVector& pi, const ProposalParams& p);
// The integer A with A = nu(x_(i), inject(pi')) mod r_(i) for every i.
int congruence_witness(const CountVector& pi_prime);

// All count vectors of total weight <= max_weight over S' (prime = true) or S.
std::vector<CountVector> enumerate_counts(const ProposalParams& p, int max_weight, bool prime);

struct InjectionReport {
  long checked = 0;               // number of pi' examined
  bool weight_preserved = true;
  bool injective = true;
  bool round_trip = true;
  bool witness_ok = true;         // A = nu(sigma, pi') satisfies every congruence
  bool image_characterized = true;  // pi outside the image is exactly where invert refuses
  std::optional<CountVector> first_failure;  // pi' (or pi for the image test)

  bool ok() const { return weight_preserved && injective && round_trip && witness_ok && image_characterized; }
};

InjectionReport injection_check(const ProposalParams& p, int max_weight);

struct HParams {
  int x, y, z, r, R, rho;
};

QSeries h_series(const HParams& hp, int order);

struct FourVarParams {
  int x, y, z, w, r, R, rho, P;
};

struct FourVarVerdict {
  bool equal = true;
  std::optional<int> first_mismatch;  // smallest differing exponent
  QSeries lhs;
  QSeries rhs;
};

FourVarVerdict fourvar_identity(const FourVarParams& fp, int order);

std::pair<ProductSpec, ProductSpec> proposal_specs(const ProposalParams& p, int L);

struct ProposalReport {
  DominanceReport dominance;
  std::string status;  // theorem | proved-L1 | conjecture-evidence
  // L = 1: per weight, count of pi' (right side), of their images, and of
  // all pi (left side), and whether images never outnumber all partitions.
  std::optional<InjectionReport> injection;
  bool counts_consistent = true;

  bool holds() const { return dominance.holds() && counts_consistent && (!injection || injection->ok()); }
};

// `injection_weight` bounds the exhaustive L = 1 enumeration.
ProposalReport check_proposal(const ProposalParams& p, int L, int order, int injection_weight = 40);

std::string proposal_status(const ProposalParams& p, int L);

}  // namespace qdom::proposal
