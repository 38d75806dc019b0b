#include "qdom/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "qdom/antitelescope.hpp"
#include "qdom/errors.hpp"

namespace qdom::partitions {

std::string to_string(BaseLabel b) {
  switch (b) {
    case BaseLabel::X: return "x";
    case BaseLabel::Y: return "y";
    case BaseLabel::XY: return "xy";
    case BaseLabel::RX: return "rx";
    case BaseLabel::RY: return "Ry";
    case BaseLabel::S: return "rx+Ry";
  }
  return "?";
}

int PartitionParams::base_value(BaseLabel b) const {
  switch (b) {
    case BaseLabel::X: return x;
    case BaseLabel::Y: return y;
    case BaseLabel::XY: return x + y;
    case BaseLabel::RX: return r * x;
    case BaseLabel::RY: return R * y;
    case BaseLabel::S: return r * x + R * y;
  }
  return 0;
}

int PartitionParams::part_size(BaseLabel b, int j) const {
  if (j < 1 || j > L) throw UsageError("part index outside 1..L");
  return base_value(b) + (j - 1) * m;
}

void PartitionParams::validate() const {
  if (m < 1 || x < 1 || y < 1 || r < 1 || R < 1 || L < 1)
    throw UsageError("partition parameters (m, x, y, r, R, L) must be positive");
}

std::string to_string(const PartitionParams& p) {
  std::ostringstream os;
  os << "(" << p.m << "," << p.x << "," << p.y << "," << p.r << "," << p.R << "," << p.L << ")";
  return os.str();
}

int ColoredPartition::nu(BaseLabel b, int j) const {
  auto it = counts.find({b, j});
  return it == counts.end() ? 0 : it->second;
}

long ColoredPartition::weight() const {
  long w = 0;
  for (const auto& [part, c] : counts) w += static_cast<long>(c) * context.part_size(part.base, part.index);
  return w;
}

void ColoredPartition::add(BaseLabel b, int j, int multiplicity) {
  if (multiplicity < 0) throw UsageError("negative multiplicity");
  if (j < 1 || j > context.L) throw UsageError("part index outside 1..L");
  if (multiplicity == 0) return;
  counts[{b, j}] += multiplicity;
}

std::string to_string(const ColoredPartition& p) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [part, c] : p.counts) {
    if (!first) os << ", ";
    first = false;
    os << to_string(part.base) << "_" << part.index;
    if (c != 1) os << "^" << c;
  }
  os << "}";
  return os.str();
}

Stats stats(const ColoredPartition& p, BaseLabel b) {
  Stats s{0, p.context.L + 1};
  for (const auto& [part, c] : p.counts) {
    if (part.base != b || c <= 0) continue;
    s.Mmax = std::max(s.Mmax, part.index);
    s.mmin = std::min(s.mmin, part.index);
  }
  return s;
}

std::string to_string(System s) { return s == System::V ? "V" : "W"; }

std::string RuleVerdict::label() const {
  if (pass()) return "pass";
  return to_string(system) + std::to_string(*failed_rule);
}

RuleVerdict satisfies(const ColoredPartition& p, System system) {
  using B = BaseLabel;
  const int Mx = stats(p, B::X).Mmax, My = stats(p, B::Y).Mmax, MS = stats(p, B::S).Mmax;
  const int mRX = stats(p, B::RX).mmin, mRY = stats(p, B::RY).mmin, mXY = stats(p, B::XY).mmin;
  const int nx1 = p.nu(B::X, 1), ny1 = p.nu(B::Y, 1);
  const int r = p.context.r, R = p.context.R;

  std::array<bool, 7> rules{};
  if (system == System::V) {
    rules = {My >= std::max(1, Mx), My >= MS, mRX > My, mRY >= My, mXY >= My, nx1 == 0, ny1 < R - 1};
  } else {
    rules = {Mx > My, Mx >= MS, mRX >= Mx, mRY >= std::max(2, Mx), mXY >= Mx, nx1 < r - 1, ny1 < R};
  }
  RuleVerdict v{system, std::nullopt};
  for (int k = 0; k < 7; ++k)
    if (!rules[static_cast<std::size_t>(k)]) {
      v.failed_rule = k + 1;
      break;
    }
  return v;
}

// --- enumeration -----------------------------------------------------------

std::vector<ColoredPartition> enumerate(int n, const PartitionParams& params, int cap) {
  params.validate();
  if (n < 0) throw UsageError("enumerate: weight must be nonnegative");
  if (n > cap) throw ResourceError("enumerate: weight " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  std::vector<ColoredPart> types;
  for (BaseLabel b : kAllBases)
    for (int j = 1; j <= params.L; ++j) types.push_back({b, j});

  std::vector<ColoredPartition> out;
  ColoredPartition cur{params, {}};
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k == types.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int size = params.part_size(types[k].base, types[k].index);
    for (int c = 0; c * size <= remaining; ++c) {
      if (c > 0) cur.counts[types[k]] = c;
      self(self, k + 1, remaining - c * size);
    }
    cur.counts.erase(types[k]);
  };
  rec(rec, 0, n);
  return out;
}

std::vector<mpz_class> restricted_counts_by_enumeration(int order, System system, const PartitionParams& params,
                                                        int cap) {
  std::vector<mpz_class> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    for (const auto& p : enumerate(n, params, cap))
      if (satisfies(p, system).pass()) ++out[static_cast<std::size_t>(n)];
  return out;
}

// --- class counting --------------------------------------------------------

namespace {

using Counts = std::vector<std::uint64_t>;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  if (__builtin_add_overflow(a, b, &s)) throw ResourceError("partition count exceeds 64 bits");
  return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  if (__builtin_mul_overflow(a, b, &s)) throw ResourceError("partition count exceeds 64 bits");
  return s;
}

Counts unit(int order) {
  Counts c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  return c;
}

// c *= 1/(1-q^s)
void geometric(Counts& c, int s) {
  for (std::size_t n = static_cast<std::size_t>(s); n < c.size(); ++n) c[n] = checked_add(c[n], c[n - s]);
}

// c *= q^k
void shifted(Counts& c, long k) {
  for (std::size_t n = c.size(); n-- > 0;) c[n] = static_cast<long>(n) >= k ? c[n - static_cast<std::size_t>(k)] : 0;
}

bool all_zero(const Counts& c) {
  return std::all_of(c.begin(), c.end(), [](std::uint64_t v) { return v == 0; });
}

Counts convolve(const Counts& a, const Counts& b) {
  Counts out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (b[j] != 0) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

// A class of sub-multisets of one base's parts, described by the statistic
// the rules read, with its weight enumerator.
struct BaseClass {
  int stat = 0;       // Mmax or mmin
  int nu_first = 0;   // class of nu(p_1): exact below `tail`, `tail` meaning >= tail
  Counts series;
};

// Classes by (Mmax, nu(p_1)) with nu(p_1) bucketed at `tail`.
std::vector<BaseClass> max_classes(const PartitionParams& p, BaseLabel b, int tail, int order) {
  std::vector<BaseClass> out;
  out.push_back({0, 0, unit(order)});
  const int s1 = p.part_size(b, 1);
  for (int c = 1; c <= tail; ++c) {
    Counts g = unit(order);
    shifted(g, static_cast<long>(c) * s1);
    if (c == tail) geometric(g, s1);
    out.push_back({1, c, g});
  }
  for (int M = 2; M <= p.L; ++M) {
    Counts middle = unit(order);
    for (int j = 2; j < M; ++j) geometric(middle, p.part_size(b, j));
    shifted(middle, p.part_size(b, M));
    geometric(middle, p.part_size(b, M));
    for (int c = 0; c <= tail; ++c) {
      Counts g = middle;
      shifted(g, static_cast<long>(c) * s1);
      if (c == tail) geometric(g, s1);
      out.push_back({M, c, g});
    }
  }
  return out;
}

// Classes by Mmax only.
std::vector<BaseClass> plain_max_classes(const PartitionParams& p, BaseLabel b, int order) {
  std::vector<BaseClass> out;
  out.push_back({0, 0, unit(order)});
  for (int M = 1; M <= p.L; ++M) {
    Counts g = unit(order);
    for (int j = 1; j < M; ++j) geometric(g, p.part_size(b, j));
    shifted(g, p.part_size(b, M));
    geometric(g, p.part_size(b, M));
    out.push_back({M, 0, g});
  }
  return out;
}

// Classes by mmin.
std::vector<BaseClass> min_classes(const PartitionParams& p, BaseLabel b, int order) {
  std::vector<BaseClass> out;
  for (int mi = 1; mi <= p.L; ++mi) {
    Counts g = unit(order);
    for (int j = mi + 1; j <= p.L; ++j) geometric(g, p.part_size(b, j));
    shifted(g, p.part_size(b, mi));
    geometric(g, p.part_size(b, mi));
    out.push_back({mi, 0, g});
  }
  out.push_back({p.L + 1, 0, unit(order)});
  return out;
}

void represent_max(ColoredPartition& pi, BaseLabel b, const BaseClass& c) {
  if (c.nu_first > 0) pi.add(b, 1, c.nu_first);
  if (c.stat >= 2) pi.add(b, c.stat);
}

}  // namespace

std::vector<mpz_class> restricted_counts(int order, System system, const PartitionParams& params) {
  params.validate();
  if (order < 0) throw UsageError("restricted_counts: order must be nonnegative");
  using B = BaseLabel;
  // The rules compare nu(x_1) with 0 and r-1, nu(y_1) with R-1 and R.
  const auto X = max_classes(params, B::X, std::max(params.r, 1), order);
  const auto Y = max_classes(params, B::Y, std::max(params.R, 1), order);
  const auto S = plain_max_classes(params, B::S, order);
  const auto RX = min_classes(params, B::RX, order);
  const auto RY = min_classes(params, B::RY, order);
  const auto XY = min_classes(params, B::XY, order);

  Counts total(static_cast<std::size_t>(order) + 1, 0);
  for (const auto& cx : X)
    for (const auto& cy : Y) {
      const Counts g2 = convolve(cx.series, cy.series);
      if (all_zero(g2)) continue;
      for (const auto& cs : S) {
        const Counts g3 = convolve(g2, cs.series);
        if (all_zero(g3)) continue;
        for (const auto& crx : RX) {
          const Counts g4 = convolve(g3, crx.series);
          if (all_zero(g4)) continue;
          for (const auto& cry : RY) {
            const Counts g5 = convolve(g4, cry.series);
            if (all_zero(g5)) continue;
            for (const auto& cxy : XY) {
              ColoredPartition rep{params, {}};
              represent_max(rep, B::X, cx);
              represent_max(rep, B::Y, cy);
              if (cs.stat > 0) rep.add(B::S, cs.stat);
              if (crx.stat <= params.L) rep.add(B::RX, crx.stat);
              if (cry.stat <= params.L) rep.add(B::RY, cry.stat);
              if (cxy.stat <= params.L) rep.add(B::XY, cxy.stat);
              if (!satisfies(rep, system).pass()) continue;
              const Counts g6 = convolve(g5, cxy.series);
              for (std::size_t n = 0; n < total.size(); ++n) total[n] = checked_add(total[n], g6[n]);
            }
          }
        }
      }
    }

  std::vector<mpz_class> out;
  out.reserve(total.size());
  for (std::uint64_t v : total) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

mpz_class count_restricted(int n, System system, const PartitionParams& params) {
  if (n < 0) throw UsageError("count_restricted: weight must be nonnegative");
  return restricted_counts(n, system, params)[static_cast<std::size_t>(n)];
}

// --- interpretation check --------------------------------------------------

InterpretReport interpret_check(const PartitionParams& params, int order) {
  params.validate();
  const antitelescope::Thm1Params tp{params.L, params.m, params.x, params.y, params.r, params.R};
  QSeries sv(order), sw(order);
  for (int i = 1; i <= params.L; ++i) {
    const auto d = antitelescope::thm1_split(tp, i, order);
    sv += d.groups[0].series;
    sw += d.groups[1].series;
  }
  const auto cv = restricted_counts(order, System::V, params);
  const auto cw = restricted_counts(order, System::W, params);

  InterpretReport rep;
  rep.params = params;
  for (int n = 0; n <= order; ++n) {
    InterpretRow row{n, cv[static_cast<std::size_t>(n)], cw[static_cast<std::size_t>(n)], sv[n], sw[n]};
    if (!row.match() && !rep.first_mismatch) rep.first_mismatch = n;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::optional<InterpretWitness> minimal_witness(const std::vector<InterpretReport>& reports) {
  std::optional<InterpretWitness> best;
  for (const auto& rep : reports) {
    if (!rep.first_mismatch) continue;
    if (!best || *rep.first_mismatch < best->row.n)
      best = InterpretWitness{rep.params, rep.rows[static_cast<std::size_t>(*rep.first_mismatch)]};
  }
  return best;
}

}  // namespace qdom::partitions
