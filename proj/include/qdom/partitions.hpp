#pragma once

// Six-colored partitions with parts p_j = p + (j-1)m, their occupancy
// statistics, and the two restriction systems whose generating functions
// are meant to be sum V(i) and sum W(i).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdom/rational.hpp"

namespace qdom::partitions {

enum class BaseLabel { X, Y, XY, RX, RY, S };

inline constexpr std::array<BaseLabel, 6> kAllBases{BaseLabel::X,  BaseLabel::Y,  BaseLabel::XY,
                                                    BaseLabel::RX, BaseLabel::RY, BaseLabel::S};

std::string to_string(BaseLabel b);

// (m, x, y, r, R, L), all positive.
struct PartitionParams {
  int m = 1, x = 1, y = 1, r = 1, R = 1, L = 1;

  int base_value(BaseLabel b) const;
  // Size of p_j, 1 <= j <= L.
  int part_size(BaseLabel b, int j) const;
  void validate() const;
  bool operator==(const PartitionParams&) const = default;
};

std::string to_string(const PartitionParams& p);

struct ColoredPart {
  BaseLabel base = BaseLabel::X;
  int index = 1;
  auto operator<=>(const ColoredPart&) const = default;
};

struct ColoredPartition {
  PartitionParams context;
  std::map<ColoredPart, int> counts;  // positive multiplicities only

  int nu(BaseLabel b, int j) const;
  long weight() const;
  void add(BaseLabel b, int j, int multiplicity = 1);
  bool operator==(const ColoredPartition&) const = default;
};

std::string to_string(const ColoredPartition& p);

struct Stats {
  int Mmax = 0;
  int mmin = 0;
  bool operator==(const Stats&) const = default;
};

Stats stats(const ColoredPartition& p, BaseLabel b);

enum class System { V, W };

std::string to_string(System s);

struct RuleVerdict {
  System system = System::V;
  std::optional<int> failed_rule;  // 1..7, the first rule that fails

  bool pass() const { return !failed_rule.has_value(); }
  std::string label() const;  // "pass" or e.g. "V3"
};

RuleVerdict satisfies(const ColoredPartition& p, System system);

inline constexpr int kDefaultCap = 40;

// Every colored partition of weight n, in lexicographic order of the
// multiplicity vector taken over (base, index). Throws ResourceError when n
// exceeds `cap`.
std::vector<ColoredPartition> enumerate(int n, const PartitionParams& params, int cap = kDefaultCap);

// Number of colored partitions of each weight 0..order satisfying the system.
// Exact; sums over classes of partitions sharing the statistics the rules read.
std::vector<mpz_class> restricted_counts(int order, System system, const PartitionParams& params);
mpz_class count_restricted(int n, System system, const PartitionParams& params);

// Same counts by filtering `enumerate`; only usable for small weights.
std::vector<mpz_class> restricted_counts_by_enumeration(int order, System system, const PartitionParams& params,
                                                        int cap = kDefaultCap);

struct InterpretRow {
  int n = 0;
  mpz_class v_count;
  mpz_class w_count;
  Coefficient series_v;
  Coefficient series_w;
  bool match() const { return v_count == series_v && w_count == series_w; }
};

struct InterpretReport {
  PartitionParams params;
  std::vector<InterpretRow> rows;  // n = 0..order
  std::optional<int> first_mismatch;  // smallest n with a mismatch

  bool match() const { return !first_mismatch.has_value(); }
};

InterpretReport interpret_check(const PartitionParams& params, int order);

struct InterpretWitness {
  PartitionParams params;
  InterpretRow row;
};

// Smallest (n, tuple position) mismatch over a list of tuples, if any.
std::optional<InterpretWitness> minimal_witness(const std::vector<InterpretReport>& reports);

}  // namespace qdom::partitions
