#include "qdom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "qdom/antitelescope.hpp"
#include "qdom/dominance.hpp"
#include "qdom/errors.hpp"
#include "qdom/identities.hpp"
#include "qdom/lemma.hpp"
#include "qdom/partitions.hpp"
#include "qdom/proposal.hpp"

namespace qdom::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr long kMaxSweep = 10'000'000;

Json coeff_json(const Coefficient& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return to_string(c);
}

Json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json negative_json(const std::optional<NegativeCoefficient>& neg) {
  if (!neg) return nullptr;
  return Json{{"exponent", neg->index}, {"value", coeff_json(neg->value)}};
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "?";
}

Json config_json(const RunConfig& c) {
  return Json{{"order", c.order},          {"bounds", c.bounds}, {"cap", c.cap},
              {"seed", c.seed},            {"jobs", c.jobs},     {"format", format_name(c.format)}};
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(std::ostream& out, const RunConfig& cfg, const Json& report, const std::optional<Csv>& csv = std::nullopt) {
  switch (cfg.format) {
    case Format::json:
      out << report.dump() << "\n";
      break;
    case Format::text:
      flatten(report, "", out);
      break;
    case Format::csv: {
      if (!csv) throw UsageError("--format csv is available for interpret-check and sweep only");
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << "\n";
      };
      line(csv->header);
      for (const auto& r : csv->rows) line(r);
      break;
    }
  }
}

Json header(const std::string& command, const RunConfig& cfg, const Json& params) {
  Json j;
  j["command"] = command;
  j["config"] = config_json(cfg);
  j["params"] = params;
  j["status"] = "pass";
  return j;
}

int finish(Json& j, bool ok) {
  j["status"] = ok ? "pass" : "fail";
  return ok ? 0 : 1;
}

// --- named inequalities -----------------------------------------------------

struct IneqArgs {
  std::string name;
  std::vector<int> params;
  std::optional<int> L;
  std::vector<int> xs, rs;
  std::optional<int> m;
};

NamedInequality build_named(const IneqArgs& a) {
  const InequalityId id = parse_inequality_id(a.name);
  NamedInequality ineq;
  ineq.id = id;
  if (id == InequalityId::Proposal && a.params.empty()) {
    if (!a.L || !a.m) throw UsageError("proposal needs --params or --L, --m, --x, --r");
    ineq.params["L"] = *a.L;
    ineq.params["m"] = *a.m;
    ineq.xs = a.xs;
    ineq.rs = a.rs;
  } else if (!a.params.empty()) {
    ineq = NamedInequality::from_list(id, a.params);
  } else if (!parameter_names(id).empty() && !(parameter_names(id) == std::vector<std::string>{"L"} && a.L)) {
    throw UsageError(to_string(id) + " needs --params " + [&] {
      std::string s;
      for (const auto& n : parameter_names(id)) s += (s.empty() ? "" : ",") + n;
      return s;
    }());
  }
  if (a.L) ineq.params["L"] = *a.L;
  return ineq;
}

Json named_params_json(const NamedInequality& ineq) {
  Json p = Json::object();
  if (ineq.id == InequalityId::Proposal) {
    p["L"] = ineq.params.at("L");
    p["m"] = ineq.params.at("m");
    p["x"] = ineq.xs;
    p["r"] = ineq.rs;
    return p;
  }
  for (const auto& n : parameter_names(ineq.id)) p[n] = ineq.params.at(n);
  return p;
}

Json dominance_fields(Json j, const DominanceReport& rep, const RunConfig& cfg) {
  j["order"] = rep.holds_up_to;
  j["holds"] = rep.holds();
  j["failure_exponent"] = rep.failure ? Json(rep.failure->index) : Json(nullptr);
  j["deficit"] = rep.failure ? coeff_json(rep.failure->value) : Json(nullptr);
  j["lhs"] = to_string(rep.lhs_spec);
  j["rhs"] = to_string(rep.rhs_spec);
  j["specs_equal"] = rep.specs_equal();
  if (rep.failure) j["witness"] = negative_json(rep.failure);
  if (cfg.dump_series) j["series"] = to_text(rep.difference);
  return j;
}

Json check_named_json(const NamedInequality& ineq, const RunConfig& cfg, bool& ok) {
  const auto rep = check_named(ineq, cfg.order);
  Json j = header("check", cfg, ineq.as_list());
  j["inequality"] = to_string(ineq.id);
  j["parameters"] = named_params_json(ineq);
  j = dominance_fields(std::move(j), rep, cfg);
  ok = rep.holds();
  j["status"] = ok ? "pass" : "fail";
  return j;
}

// --- antitelescoping ------------------------------------------------------

antitelescope::SplitKind parse_split(const std::string& s, InequalityId id) {
  if (s.empty()) {
    if (id == InequalityId::Thm1) return antitelescope::SplitKind::thm1;
    if (id == InequalityId::Thm2) return antitelescope::SplitKind::thm2;
    return antitelescope::SplitKind::none;
  }
  if (s == "none") return antitelescope::SplitKind::none;
  if (s == "thm1") return antitelescope::SplitKind::thm1;
  if (s == "thm2") return antitelescope::SplitKind::thm2;
  throw UsageError("unknown split '" + s + "' (none, thm1, thm2)");
}

antitelescope::Thm1Params thm1_params(const NamedInequality& q) {
  const auto& p = q.params;
  return {p.at("L"), p.at("m"), p.at("x"), p.at("y"), p.at("r"), p.at("R")};
}

antitelescope::Thm2Params thm2_params(const NamedInequality& q) {
  const auto& p = q.params;
  return {p.at("L"), p.at("m"), p.at("x"), p.at("y"), p.at("z"), p.at("r"), p.at("R"), p.at("rho")};
}

antitelescope::ScanReport scan_named(const NamedInequality& ineq, antitelescope::SplitKind split, int order) {
  using antitelescope::SplitKind;
  auto [lhs, rhs] = named_specs(ineq);
  if (split == SplitKind::thm1) {
    if (ineq.id != InequalityId::Thm1) throw UsageError("split thm1 applies to --ineq thm1");
    return antitelescope::positivity_scan(thm1_params(ineq), order);
  }
  if (split == SplitKind::thm2) {
    if (ineq.id != InequalityId::Thm2) throw UsageError("split thm2 applies to --ineq thm2");
    return antitelescope::positivity_scan(thm2_params(ineq), order);
  }
  auto family = [](const ProductSpec& s) {
    antitelescope::ProductFamily f;
    if (s.families.empty()) throw UsageError("empty product");
    f.modulus = s.families.front().modulus;
    for (const auto& fam : s.families) {
      if (fam.infinite()) throw UsageError("anti-telescoping needs a finite L");
      if (fam.modulus != f.modulus || fam.length != s.families.front().length)
        throw UsageError("anti-telescoping needs one modulus and one length");
      f.bases.push_back(fam.base);
    }
    return f;
  };
  const auto P = family(lhs), Q = family(rhs);
  return antitelescope::positivity_scan(P, Q, *lhs.families.front().length, order);
}

bool scan_ok(const antitelescope::ScanReport& rep) { return rep.all_nonnegative() && rep.identities_hold(); }

Json scan_json(const antitelescope::ScanReport& rep, const NamedInequality& ineq, const RunConfig& cfg) {
  Json j = header("antitelescope", cfg, ineq.as_list());
  j["inequality"] = to_string(ineq.id);
  j["parameters"] = named_params_json(ineq);
  j["split"] = antitelescope::to_string(rep.split);
  j["order"] = rep.order;
  j["L"] = rep.L;
  Json addends = Json::array();
  Json witness = nullptr;
  for (const auto& ix : rep.indices) {
    Json a;
    a["i"] = ix.index;
    a["addend_first_negative"] = negative_json(ix.addend_negative);
    a["addend_integral"] = ix.addend_integral;
    Json groups = Json::array();
    for (const auto& g : ix.groups) {
      groups.push_back(Json{{"name", g.name},
                            {"first_negative", negative_json(g.negative)},
                            {"denominators_divide_two", g.integral_or_half}});
      if (g.negative && witness.is_null())
        witness = Json{{"i", ix.index}, {"group", g.name}, {"exponent", g.negative->index},
                       {"value", coeff_json(g.negative->value)}};
    }
    if (rep.split == antitelescope::SplitKind::none && ix.addend_negative && witness.is_null())
      witness = Json{{"i", ix.index}, {"group", nullptr}, {"exponent", ix.addend_negative->index},
                     {"value", coeff_json(ix.addend_negative->value)}};
    a["groups"] = groups;
    a["groups_sum_to_addend"] = ix.groups_sum_to_addend;
    a["lemma_route_agrees"] = ix.lemma_route_agrees ? Json(*ix.lemma_route_agrees) : Json(nullptr);
    a["divisibility_ok"] = ix.divisibility_ok;
    addends.push_back(std::move(a));
  }
  j["addends"] = std::move(addends);
  j["difference_first_negative"] = negative_json(rep.difference_negative);
  j["telescopes"] = rep.telescopes;
  j["all_nonnegative"] = rep.all_nonnegative();
  j["identities_hold"] = rep.identities_hold();
  if (!witness.is_null()) j["witness"] = witness;
  if (cfg.dump_series) {
    auto [P, Q] = named_specs(ineq);
    j["series"] = to_text(dominates(P, Q, cfg.order).difference);
  }
  j["status"] = scan_ok(rep) ? "pass" : "fail";
  return j;
}

// --- lemma ---------------------------------------------------------------

TriBounds bounds_of(const RunConfig& cfg) { return TriBounds{cfg.bounds[0], cfg.bounds[1], cfg.bounds[2]}; }

Json lemma_json(int r, int R, const RunConfig& cfg, bool& ok) {
  const lemma::LemmaParams lp{r, R, bounds_of(cfg)};
  const TriSeries f = lemma::f_expand(lp);
  const auto window = lemma::negativity_window(lp, f);
  Json j = header("lemma", cfg, std::vector<int>{r, R});
  j["parameters"] = Json{{"r", r}, {"R", R}};
  j["f_nonnegative"] = window.totals_nonnegative;
  j["min_coefficient"] = coeff_json(window.min_coefficient);
  j["window"] = Json{{"rest_nonnegative", window.rest_nonnegative},
                     {"second_term_formula", window.second_term_formula},
                     {"per_term_in_window", window.per_term_in_window},
                     {"negative_per_term_cells", window.negative_per_term_cells}};
  Json slices = Json::array();
  for (int n = 0; n <= lp.bounds.nt; ++n)
    if (!(lemma::slice_eqtwo(n, lp) == lemma::slice_of(f, n))) slices.push_back(n);
  j["slice_mismatches"] = slices;
  bool symmetric = true;
  if (lp.bounds.nx == lp.bounds.ny) {
    const auto sym = lemma::symmetry_check(f, lemma::f_expand({R, r, lp.bounds}));
    symmetric = sym.equal;
    j["symmetry"] = sym.equal;
    if (sym.first_mismatch) j["symmetry_mismatch"] = *sym.first_mismatch;
  } else {
    j["symmetry"] = nullptr;
  }
  if (window.first_violation) {
    const auto& v = *window.first_violation;
    j["witness"] = Json{{"n", v[0]}, {"term", v[1]}, {"j", v[2]}, {"k", v[3]}};
  } else if (!slices.empty()) {
    j["witness"] = Json{{"slice_n", slices.front()}};
  }
  if (cfg.dump_poly) {
    const auto term = lemma::f_term(r, R);
    j["numerator"] = term.numerator.to_string();
    Json den = Json::array();
    for (const auto& d : term.denominator_factors) den.push_back(d.to_string());
    j["denominator_factors"] = den;
  }
  ok = window.ok() && slices.empty() && symmetric;
  j["status"] = ok ? "pass" : "fail";
  return j;
}

// --- partitions -----------------------------------------------------------

partitions::PartitionParams partition_params(const std::vector<int>& v) {
  if (v.size() != 6) throw UsageError("partition parameters are m,x,y,r,R,L");
  partitions::PartitionParams p{v[0], v[1], v[2], v[3], v[4], v[5]};
  p.validate();
  return p;
}

Json interpret_json(const partitions::InterpretReport& rep, const std::vector<int>& params, const RunConfig& cfg) {
  Json j = header("interpret-check", cfg, params);
  j["max_weight"] = static_cast<int>(rep.rows.size()) - 1;
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back(Json{{"n", r.n},
                        {"V_count", mpz_json(r.v_count)},
                        {"W_count", mpz_json(r.w_count)},
                        {"series_V", coeff_json(r.series_v)},
                        {"series_W", coeff_json(r.series_w)},
                        {"match", r.match()}});
  j["rows"] = rows;
  if (rep.first_mismatch) {
    const auto& r = rep.rows[static_cast<std::size_t>(*rep.first_mismatch)];
    j["witness"] = Json{{"n", r.n},
                        {"V_count", mpz_json(r.v_count)},
                        {"W_count", mpz_json(r.w_count)},
                        {"series_V", coeff_json(r.series_v)},
                        {"series_W", coeff_json(r.series_w)}};
  }
  j["status"] = rep.match() ? "pass" : "fail";
  return j;
}

Csv interpret_csv(const partitions::InterpretReport& rep) {
  Csv c{{"n", "V_count", "W_count", "series_V", "series_W", "match"}, {}};
  for (const auto& r : rep.rows)
    c.rows.push_back({std::to_string(r.n), r.v_count.get_str(), r.w_count.get_str(), to_string(r.series_v),
                      to_string(r.series_w), r.match() ? "true" : "false"});
  return c;
}

// --- proposal -------------------------------------------------------------

Json proposal_json(const proposal::ProposalParams& p, int L, const RunConfig& cfg, bool& ok) {
  const auto rep = proposal::check_proposal(p, L, cfg.order, cfg.cap);
  std::vector<int> flat{L, p.m};
  flat.insert(flat.end(), p.x.begin(), p.x.end());
  flat.insert(flat.end(), p.r.begin(), p.r.end());
  Json j = header("proposal", cfg, flat);
  j["parameters"] = Json{{"n", p.n()}, {"L", L}, {"m", p.m}, {"x", p.x}, {"r", p.r}};
  j = dominance_fields(std::move(j), rep.dominance, cfg);
  j["holds"] = rep.holds();
  j["status"] = rep.status;
  if (rep.injection) {
    const auto& inj = *rep.injection;
    j["injection"] = Json{{"max_weight", std::min(cfg.order, cfg.cap)},
                          {"checked", inj.checked},
                          {"weight_preserved", inj.weight_preserved},
                          {"injective", inj.injective},
                          {"round_trip", inj.round_trip},
                          {"witness_ok", inj.witness_ok},
                          {"image_characterized", inj.image_characterized},
                          {"counts_consistent", rep.counts_consistent}};
  }
  ok = rep.holds();
  return j;
}

// --- identities -----------------------------------------------------------

Json verdict_json(const std::string& name, const IdentityVerdict& v) {
  Json j{{"name", name}, {"equal", v.equal}, {"method", v.method == IdentityMethod::exact ? "exact" : "randomized"}};
  if (v.method == IdentityMethod::exact) {
    j["cleared_terms"] = v.cleared_terms;
  } else {
    j["points"] = v.points_used;
    j["failure_probability"] = v.failure_probability;
  }
  if (v.witness_monomial) j["witness_monomial"] = *v.witness_monomial;
  if (v.witness_coefficient) j["witness_coefficient"] = coeff_json(*v.witness_coefficient);
  return j;
}

// --- sweeps ---------------------------------------------------------------

struct SweepItem {
  bool ok = true;
  bool skipped = false;
  bool degenerate = false;
  std::string detail;
};

std::vector<std::vector<int>> box_points(const std::vector<std::pair<int, int>>& box, std::optional<int> sample,
                                         std::uint64_t seed) {
  long total = 1;
  for (auto [lo, hi] : box) {
    if (hi < lo) throw UsageError("empty range in --box");
    total *= (hi - lo + 1);
    if (total > kMaxSweep) throw ResourceError("sweep box exceeds " + std::to_string(kMaxSweep) + " points");
  }
  std::vector<std::vector<int>> pts;
  if (sample) {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < *sample; ++s) {
      std::vector<int> p;
      for (auto [lo, hi] : box) p.push_back(std::uniform_int_distribution<int>(lo, hi)(rng));
      pts.push_back(std::move(p));
    }
    return pts;
  }
  std::vector<int> cur;
  for (auto [lo, hi] : box) cur.push_back(lo);
  for (;;) {
    pts.push_back(cur);
    std::size_t k = box.size();
    while (k > 0) {
      --k;
      if (cur[k] < box[k].second) {
        ++cur[k];
        break;
      }
      cur[k] = box[k].first;
      if (k == 0) return pts;
    }
    if (box.empty()) return pts;
  }
}

std::vector<SweepItem> run_parallel(const std::vector<std::vector<int>>& pts, int jobs,
                                    const std::function<SweepItem(const std::vector<int>&)>& task) {
  std::vector<SweepItem> out(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      try {
        out[i] = task(pts[i]);
      } catch (const UsageError& e) {
        out[i] = SweepItem{true, true, false, e.what()};
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(pts.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

std::string neg_detail(const std::optional<NegativeCoefficient>& n) {
  if (!n) return "";
  return "q^" + std::to_string(n->index) + " coefficient " + to_string(n->value);
}

}  // namespace

std::vector<std::pair<int, int>> parse_box(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const auto colon = item.find(':');
      std::size_t used = 0;
      if (colon == std::string::npos) {
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw UsageError("");
        out.emplace_back(v, v);
      } else {
        const std::string a = item.substr(0, colon), b = item.substr(colon + 1);
        std::size_t ua = 0, ub = 0;
        const int lo = std::stoi(a, &ua), hi = std::stoi(b, &ub);
        if (ua != a.size() || ub != b.size() || lo > hi) throw UsageError("");
        out.emplace_back(lo, hi);
      }
    } catch (const std::exception&) {
      throw UsageError("bad --box entry '" + item + "' (expected lo:hi or a single integer)");
    }
  }
  if (out.empty()) throw UsageError("--box is empty");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kOrderEnv)) {
    try {
      cfg.order = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: " << kOrderEnv << " must be an integer\n";
      return 2;
    }
  }

  CLI::App app{"Exact q-series verification of partition inequalities", "qdom"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  std::string format = "json";
  std::vector<int> bounds;
  app.add_option("--order", cfg.order, "truncation order N (env " + std::string(kOrderEnv) + ")");
  app.add_option("--bounds", bounds, "lemma bounds Nt,Nx,Ny")->delimiter(',')->expected(3);
  app.add_option("--seed", cfg.seed, "seed for randomized checks and sampling");
  app.add_option("--jobs", cfg.jobs, "worker threads for sweeps");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--dump-series", cfg.dump_series, "include series in text form");
  app.add_flag("--dump-poly", cfg.dump_poly, "include polynomials in canonical text form");
  app.add_option("--cap", cfg.cap, "enumeration weight cap");
  app.add_flag("--timings", cfg.timings, "add wall-clock timings to the report");

  IneqArgs ineq;
  std::string split, box, tmpl = "check";
  std::optional<int> n_opt, sample;
  bool randomized = false;
  int rmax = 4;

  auto add_ineq = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--ineq", ineq.name, "inequality: RR, BGa, finiteRR, lg, BGr, thm1, thm2, proposal");
    if (required) o->required();
    sub->add_option("--params", ineq.params, "comma-separated parameters")->delimiter(',');
    sub->add_option("--L", ineq.L, "number of factors L");
  };

  auto* check = app.add_subcommand("check", "truncated dominance check of a named inequality");
  add_ineq(check, true);
  check->add_option("--m", ineq.m, "modulus (proposal)");
  check->add_option("--x", ineq.xs, "x_(i) (proposal)")->delimiter(',');
  check->add_option("--r", ineq.rs, "r_(i) (proposal)")->delimiter(',');

  auto* anti = app.add_subcommand("antitelescope", "per-addend positivity of the anti-telescoped difference");
  add_ineq(anti, true);
  anti->add_option("--split", split, "none, thm1 or thm2");

  auto* lem = app.add_subcommand("lemma", "expansion, closed forms and window of f for one (r, R)");
  lem->add_option("--params", ineq.params, "r,R")->delimiter(',')->required();

  auto* en = app.add_subcommand("enumerate", "list colored partitions of weight n with V/W verdicts");
  en->add_option("--n", n_opt, "weight")->required();
  en->add_option("--params", ineq.params, "m,x,y,r,R,L")->delimiter(',')->required();

  auto* interp = app.add_subcommand("interpret-check", "restricted partition counts against sum V(i), sum W(i)");
  interp->add_option("--n", n_opt, "largest weight (default 30)");
  interp->add_option("--params", ineq.params, "m,x,y,r,R,L (default 5,1,1,2,2,2)")->delimiter(',');

  auto* prop = app.add_subcommand("proposal", "n-variable inequality with the L = 1 injection");
  prop->add_option("--n", n_opt, "number of variables");
  prop->add_option("--x", ineq.xs, "x_(1..n)")->delimiter(',')->required();
  prop->add_option("--r", ineq.rs, "r_(1..n)")->delimiter(',')->required();
  prop->add_option("--m", ineq.m, "modulus")->required();
  prop->add_option("--L", ineq.L, "number of factors L")->required();

  auto* ids = app.add_subcommand("identities", "polynomial and rational-function identities");
  ids->add_option("--n", n_opt, "largest n for the slice closed forms (default 6)");
  ids->add_option("--rmax", rmax, "largest r and R (default 4)");
  ids->add_flag("--randomized", randomized, "sample over a prime field instead of clearing denominators");

  auto* sw = app.add_subcommand("sweep", "run a check over a parameter box");
  sw->add_option("--template", tmpl, "check, antitelescope, lemma, h or interpret")
      ->check(CLI::IsMember({"check", "antitelescope", "lemma", "h", "interpret"}));
  sw->add_option("--ineq", ineq.name, "inequality for check/antitelescope");
  sw->add_option("--box", box, "ranges lo:hi per parameter")->required();
  sw->add_option("--sample", sample, "sample this many points instead of the full box");
  sw->add_option("--split", split, "split for the antitelescope template");
  sw->add_option("--n", n_opt, "largest weight for the interpret template (default 30)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  auto stamp = [&](Json& j) {
    if (!cfg.timings) return;
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    j["timings"] = Json{{"wall_ms", ms}};
  };

  try {
    cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
    if (!bounds.empty()) std::copy(bounds.begin(), bounds.end(), cfg.bounds.begin());
    if (cfg.order < 0) throw UsageError("--order must be nonnegative");
    for (int b : cfg.bounds)
      if (b < 1) throw UsageError("--bounds entries must be positive");
    if (cfg.cap < 0) throw UsageError("--cap must be nonnegative");
    if (cfg.jobs < 1) throw UsageError("--jobs must be positive");

    if (check->parsed()) {
      bool ok = false;
      Json j = check_named_json(build_named(ineq), cfg, ok);
      stamp(j);
      emit(out, cfg, j);
      return ok ? 0 : 1;
    }

    if (anti->parsed()) {
      const auto named = build_named(ineq);
      const auto rep = scan_named(named, parse_split(split, named.id), cfg.order);
      Json j = scan_json(rep, named, cfg);
      stamp(j);
      emit(out, cfg, j);
      return scan_ok(rep) ? 0 : 1;
    }

    if (lem->parsed()) {
      if (ineq.params.size() != 2) throw UsageError("lemma takes --params r,R");
      bool ok = false;
      Json j = lemma_json(ineq.params[0], ineq.params[1], cfg, ok);
      stamp(j);
      emit(out, cfg, j);
      return ok ? 0 : 1;
    }

    if (en->parsed()) {
      const auto p = partition_params(ineq.params);
      const auto parts = partitions::enumerate(*n_opt, p, cfg.cap);
      Json j = header("enumerate", cfg, ineq.params);
      j["n"] = *n_opt;
      j["count"] = parts.size();
      Json list = Json::array();
      long v = 0, w = 0;
      for (const auto& pi : parts) {
        const auto sv = partitions::satisfies(pi, partitions::System::V);
        const auto sw2 = partitions::satisfies(pi, partitions::System::W);
        v += sv.pass();
        w += sw2.pass();
        list.push_back(Json{{"partition", partitions::to_string(pi)}, {"V", sv.label()}, {"W", sw2.label()}});
      }
      j["V_count"] = v;
      j["W_count"] = w;
      j["partitions"] = list;
      stamp(j);
      emit(out, cfg, j);
      return 0;
    }

    if (interp->parsed()) {
      const std::vector<int> params = ineq.params.empty() ? std::vector<int>{5, 1, 1, 2, 2, 2} : ineq.params;
      const int maxw = n_opt.value_or(30);
      if (maxw < 0) throw UsageError("--n must be nonnegative");
      const auto rep = partitions::interpret_check(partition_params(params), maxw);
      Json j = interpret_json(rep, params, cfg);
      stamp(j);
      emit(out, cfg, j, interpret_csv(rep));
      return rep.match() ? 0 : 1;
    }

    if (prop->parsed()) {
      proposal::ProposalParams p{*ineq.m, ineq.xs, ineq.rs};
      if (n_opt && *n_opt != p.n()) throw UsageError("--n differs from the length of --x");
      p.validate();
      bool ok = false;
      Json j = proposal_json(p, *ineq.L, cfg, ok);
      stamp(j);
      emit(out, cfg, j);
      return ok ? 0 : 1;
    }

    if (ids->parsed()) {
      IdentityOptions opt;
      opt.method = randomized ? IdentityMethod::randomized : IdentityMethod::exact;
      opt.seed = cfg.seed;
      const int nmax = n_opt.value_or(6);
      if (nmax < 0 || rmax < 1) throw UsageError("--n must be nonnegative and --rmax positive");
      Json j = header("identities", cfg, Json{{"n", nmax}, {"rmax", rmax}});
      Json list = Json::array();
      bool ok = true;
      Json witness = nullptr;
      auto record = [&](Json v) {
        if (!v["equal"].get<bool>()) {
          ok = false;
          if (witness.is_null()) witness = v;
        }
        list.push_back(std::move(v));
      };
      for (const auto& id : identities::corpus()) {
        Json v = verdict_json(id.name, identity_check(id.lhs, id.rhs, opt));
        if (cfg.dump_poly) v["cleared_difference"] = cleared_difference(id.lhs, id.rhs).to_string();
        record(std::move(v));
      }
      for (int n = 0; n <= nmax; ++n)
        for (int r = 1; r <= rmax; ++r)
          for (int R = 1; R <= rmax; ++R) {
            const auto v = lemma::check_eqone_eqthree(n, r, R, opt);
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(R) + ")";
            record(verdict_json("slice-sums-eliminated" + tag, v.one_vs_three));
            record(verdict_json("slice-nine-terms" + tag, v.three_vs_two));
          }
      j["identities"] = list;
      if (!witness.is_null()) j["witness"] = witness;
      finish(j, ok);
      stamp(j);
      emit(out, cfg, j);
      return ok ? 0 : 1;
    }

    if (sw->parsed()) {
      const auto ranges = parse_box(box);
      const auto pts = box_points(ranges, sample, cfg.seed);
      std::function<SweepItem(const std::vector<int>&)> task;
      std::optional<InequalityId> id;
      if (tmpl == "check" || tmpl == "antitelescope") {
        if (ineq.name.empty()) throw UsageError("sweep --template " + tmpl + " needs --ineq");
        id = parse_inequality_id(ineq.name);
      }
      if (tmpl == "check") {
        const bool bga = *id == InequalityId::BGa;
        task = [&, bga](const std::vector<int>& v) {
          const auto named = NamedInequality::from_list(*id, v);
          const auto rep = check_named(named, cfg.order);
          SweepItem it;
          it.detail = neg_detail(rep.failure);
          if (bga) {
            it.degenerate = rep.specs_equal();
            const bool predicted = bga_condition(named.params.at("m"), named.params.at("r"));
            it.ok = it.degenerate || rep.holds() == predicted;
            if (!it.ok) it.detail = "predicted " + std::string(predicted ? "holds" : "fails") + "; " + it.detail;
          } else {
            it.ok = rep.holds();
          }
          return it;
        };
      } else if (tmpl == "antitelescope") {
        task = [&](const std::vector<int>& v) {
          const auto named = NamedInequality::from_list(*id, v);
          const auto rep = scan_named(named, parse_split(split, named.id), cfg.order);
          SweepItem it;
          it.ok = scan_ok(rep);
          if (!it.ok) {
            it.detail = rep.identities_hold() ? "negative coefficient" : "identity failure";
            for (const auto& ix : rep.indices)
              for (const auto& g : ix.groups)
                if (g.negative && it.detail == "negative coefficient")
                  it.detail = "i=" + std::to_string(ix.index) + " " + g.name + " " + neg_detail(g.negative);
          }
          return it;
        };
      } else if (tmpl == "lemma") {
        task = [&](const std::vector<int>& v) {
          if (v.size() != 2) throw UsageError("lemma sweep box is r,R");
          const lemma::LemmaParams lp{v[0], v[1], bounds_of(cfg)};
          const auto w = lemma::negativity_window(lp);
          SweepItem it;
          it.ok = w.ok();
          if (w.first_violation) {
            const auto& f = *w.first_violation;
            it.detail = "n=" + std::to_string(f[0]) + " term=" + std::to_string(f[1]) + " j=" + std::to_string(f[2]) +
                        " k=" + std::to_string(f[3]);
          }
          return it;
        };
      } else if (tmpl == "h") {
        task = [&](const std::vector<int>& v) {
          if (v.size() != 6) throw UsageError("h sweep box is x,y,z,r,R,rho");
          const auto neg = first_negative(proposal::h_series({v[0], v[1], v[2], v[3], v[4], v[5]}, cfg.order));
          return SweepItem{!neg, false, false, neg_detail(neg)};
        };
      } else {
        const int maxw = n_opt.value_or(30);
        task = [&, maxw](const std::vector<int>& v) {
          const auto rep = partitions::interpret_check(partition_params(v), maxw);
          SweepItem it;
          it.ok = rep.match();
          if (rep.first_mismatch) it.detail = "n=" + std::to_string(*rep.first_mismatch);
          return it;
        };
      }
      const auto items = run_parallel(pts, cfg.jobs, task);

      Json j = header("sweep", cfg, Json{{"template", tmpl}, {"ineq", ineq.name}, {"box", box}});
      long passed = 0, failed = 0, skipped = 0, degenerate = 0;
      Json witnesses = Json::array();
      Csv csv{{"params", "ok", "skipped", "degenerate", "detail"}, {}};
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& it = items[i];
        if (it.skipped) {
          ++skipped;
        } else if (it.degenerate) {
          ++degenerate;
        } else if (it.ok) {
          ++passed;
        } else {
          ++failed;
          witnesses.push_back(Json{{"params", pts[i]}, {"detail", it.detail}});
        }
        csv.rows.push_back({"\"" + join(pts[i]) + "\"", it.ok ? "true" : "false", it.skipped ? "true" : "false",
                            it.degenerate ? "true" : "false", "\"" + it.detail + "\""});
      }
      j["total"] = pts.size();
      j["passed"] = passed;
      j["failed"] = failed;
      j["skipped"] = skipped;
      j["degenerate"] = degenerate;
      if (!witnesses.empty()) j["witness"] = witnesses.front();
      j["failures"] = witnesses;
      finish(j, failed == 0);
      stamp(j);
      emit(out, cfg, j, csv);
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CoverageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qdom::cli
