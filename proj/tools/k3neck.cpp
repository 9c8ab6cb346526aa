// k3neck command-line front end. Every subcommand writes one JSON document
// (or a CSV table with a header row) to stdout; diagnostics go to stderr.
// Exit status: 0 ok, 1 a verification failed, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3neck/acceptance.hpp"
#include "k3neck/config.hpp"
#include "k3neck/diophantine.hpp"
#include "k3neck/elliptic.hpp"
#include "k3neck/errors.hpp"
#include "k3neck/family.hpp"
#include "k3neck/metric.hpp"
#include "k3neck/neck.hpp"
#include "k3neck/picard.hpp"
#include "k3neck/real_number.hpp"
#include "k3neck/toroidal.hpp"

using nlohmann::json;
using namespace k3neck;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// "i", "2i", "-0.5+0.866i", "1+3*i", "0.25"
cplx parse_complex(std::string text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw DomainError("empty complex number");
  auto number = [&](const std::string& part, double sign_only) -> double {
    if (part.empty() || part == "+") return sign_only;
    if (part == "-") return -sign_only;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse complex number '" + text + "'");
    }
    if (used != part.size()) throw DomainError("cannot parse complex number '" + text + "'");
    return v;
  };
  if (s.back() != 'i') return {number(s, 0.0), 0.0};
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s, 1.0)};
  return {number(s.substr(0, split), 0.0), number(s.substr(split), 1.0)};
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json tol_subset(const RunConfig& cfg, std::initializer_list<const char*> names) {
  json t = json::object();
  for (const char* n : names) t[n] = cfg.tol(n);
  return t;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

struct Globals {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  RunConfig cfg;

  void resolve() {
    cfg = load_run_config(config_path);
    if (seed) cfg.seed = *seed;
    if (format) cfg.output = *format == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  bool csv() const { return cfg.output == OutputFormat::csv; }
};

LatticeSumConfig lattice_cfg(const RunConfig& cfg) {
  LatticeSumConfig l;
  l.truncation_radius = cfg.truncation_radius;
  l.target_tol = cfg.tol("ode");
  return l;
}

// ---- subcommands -----------------------------------------------------------

int cmd_dioph(const Globals& g, const std::string& p_text, const std::string& q_text, std::optional<std::int64_t> n_opt) {
  const RealNumberRep p = RealNumberRep::parse(p_text), q = RealNumberRep::parse(q_text);
  const std::int64_t n_max = n_opt.value_or(g.cfg.n_max);
  if (n_max < 1) throw DomainError("--n-max must be positive");
  if (g.csv()) {
    const std::vector<double> d = distance_scan(p, q, n_max);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) rows.push_back({std::to_string(i + 1), fmt(d[i])});
    emit_csv({"n", "min_distance"}, rows);
    return kOk;
  }
  const DiophantineVerdict v = check_pair(p, q, n_max);
  json out{{"p", p.to_string()}, {"q", q.to_string()}, {"status", to_string(v.status)}, {"n_max", n_max}};
  bool ok = true;
  if (v.status == DiophantineVerdict::Status::refuted) {
    out["witness_n"] = v.witness_n;
    ok = min_distance_is_zero(p, q, v.witness_n) || min_distance(p, q, v.witness_n) == 0.0;
  } else {
    out["theta"] = v.theta;
    out["A"] = v.A;
    out["theta_fit"] = v.theta_fit;
    out["A_fit"] = v.A_fit;
    out["min_slack"] = v.min_slack;
    out["record_count"] = v.record_count;
    out["basis"] = v.basis;
    if (v.status == DiophantineVerdict::Status::estimated) ok = v.min_slack >= 1.0 - g.cfg.tol("slope");
    if (const auto cert = certify_pair(p, q)) out["certified"] = {{"theta", cert->theta}, {"A", cert->A}, {"basis", cert->basis}};
  }
  const ExponentialCheck e = check_exponential(p, q, std::min<std::int64_t>(n_max, 10000));
  out["exponential"] = {{"passes", e.passes}, {"c", e.c}, {"a", e.a}, {"sigma_max", e.sigma_max},
                        {"implication_holds", e.implication_holds}};
  out["tolerances"] = tol_subset(g.cfg, {"slope"});
  out["verified"] = ok;
  emit(out);
  return ok ? kOk : kVerifyFailed;
}

int cmd_embed(const Globals& g, const std::string& tau_text, const std::vector<std::string>& points) {
  const ComplexLattice lat(parse_complex(tau_text));
  const LatticeSumConfig lcfg = lattice_cfg(g.cfg);
  const Invariants inv = weierstrass_invariants(lat, lcfg);
  const double tol = g.cfg.tol("cubic");
  json rows = json::array();
  bool ok = true;
  std::vector<std::vector<std::string>> csv_rows;
  for (const std::string& text : points) {
    const TorusPoint pt(lat, parse_complex(text));
    const ProjectivePoint proj = embed(pt, lcfg).normalized();
    const double res = cubic_residual(proj, inv.g2, inv.g3);
    ok = ok && res <= tol;
    const auto& c = proj.coords();
    rows.push_back({{"z", cjson(pt.z())}, {"point", json::array({cjson(c[0]), cjson(c[1]), cjson(c[2])})},
                    {"cubic_residual", res}});
    csv_rows.push_back({fmt(pt.z().real()), fmt(pt.z().imag()), fmt(c[0].real()), fmt(c[0].imag()), fmt(c[1].real()),
                        fmt(c[1].imag()), fmt(c[2].real()), fmt(c[2].imag()), fmt(res), fmt(tol)});
  }
  if (g.csv()) {
    emit_csv({"z_re", "z_im", "x0_re", "x0_im", "x1_re", "x1_im", "x2_re", "x2_im", "cubic_residual", "tol"}, csv_rows);
  } else {
    emit({{"tau", cjson(lat.tau())}, {"g2", cjson(inv.g2)}, {"g3", cjson(inv.g3)}, {"points", rows},
          {"tolerances", tol_subset(g.cfg, {"cubic"})}, {"verified", ok}});
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_picard(const Globals& g, std::int64_t dmax) {
  if (dmax < 1 || dmax > 100000) throw DomainError("--dmax must be in [1, 100000]");
  const DivisorClass K = anticanonical();
  json rows = json::array();
  std::vector<std::vector<std::string>> csv_rows;
  for (std::int64_t d = 1; d <= dmax; ++d) {
    for (std::int64_t k = 1; k <= d; ++k) {
      const DivisorClass L = DivisorClass::uniform(d, k);
      const AmpleVerdict v = certify_ampleness(L);
      const std::int64_t b0 = intersect(L, K);
      const std::string verdict = v.certified ? "certified" : "not_certified";
      csv_rows.push_back({std::to_string(d), std::to_string(k), verdict, std::to_string(b0), v.reason});
      rows.push_back({{"d", d}, {"k", k}, {"verdict", verdict}, {"b0", b0}, {"reason", v.reason}});
    }
  }
  const auto sig = signature(gram_matrix());
  const bool ok = sig.first == 1 && sig.second == 9 && intersect(K, K) == 0;
  if (g.csv()) {
    emit_csv({"d", "k", "verdict", "b0", "reason"}, csv_rows);
  } else {
    emit({{"dmax", dmax}, {"rows", rows}, {"signature", json::array({sig.first, sig.second})},
          {"anticanonical_square", intersect(K, K)}, {"tolerances", json::object()}, {"verified", ok}});
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_toroidal(const Globals& g, const std::string& tau_text, const std::string& p_text, const std::string& q_text,
                 std::int64_t b0) {
  const cplx tau = parse_complex(tau_text);
  const ToroidalLattice lat(tau, RealNumberRep::parse(p_text), RealNumberRep::parse(q_text));
  const ToroidalVerdict v = is_toroidal(lat);
  const double tol = g.cfg.tol("cocycle");
  const RiemannFormVerdict rf = riemann_form_check(h1_from_intersection(b0, tau), lat, tol);
  json out{{"tau", cjson(tau)}, {"p", p_text}, {"q", q_text}, {"status", to_string(v.status)},
           {"toroidal", v.status == ToroidalVerdict::Status::toroidal}, {"riemann_form_ok", rf.ok},
           {"integrality_defect", rf.integrality_defect}, {"reason", v.reason}};
  if (v.status == ToroidalVerdict::Status::not_toroidal) {
    out["sigma"] = json::array({cjson(v.sigma(0)), cjson(v.sigma(1))});
    out["products"] = json::array({cjson(v.products[0]), cjson(v.products[1]), cjson(v.products[2])});
  }
  if (v.status == ToroidalVerdict::Status::toroidal) {
    const TypeKind tk = type_and_kind(lat);
    out["type"] = tk.type;
    out["kind"] = tk.kind;
    out["stein_summary"] = tk.stein_summary;
  } else {
    out["type"] = nullptr;
    out["kind"] = nullptr;
  }
  out["tolerances"] = tol_subset(g.cfg, {"cocycle"});
  const bool ok = rf.ok && (v.status != ToroidalVerdict::Status::not_toroidal || is_witness(v.sigma, lat));
  out["verified"] = ok;
  emit(out);
  return ok ? kOk : kVerifyFailed;
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
  return std::mt19937_64(seq);
}

int cmd_theta(const Globals& g, const std::string& tau_text, const std::string& p_text, const std::string& q_text,
              std::int64_t b0, int samples) {
  if (samples < 1) throw DomainError("--samples must be positive");
  const cplx tau = parse_complex(tau_text);
  const ToroidalLattice lat(tau, RealNumberRep::parse(p_text), RealNumberRep::parse(q_text));
  const ThetaBundleSpec spec{h1_from_intersection(b0, tau), {cplx(1, 0), cplx(1, 0), cplx(1, 0)}};
  const double tol = g.cfg.tol("cocycle");
  validate(spec, lat, tol);
  auto gen = seeded(g.cfg.seed, 11);
  auto draw_int = [&] { return static_cast<std::int64_t>(gen() % 7) - 3; };
  double worst = 0.0;
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n < samples; ++n) {
    std::array<std::int64_t, 3> l{}, m{};
    for (auto& v : l) v = draw_int();
    for (auto& v : m) v = draw_int();
    Vec2c x;
    x(0) = cplx(2 * uniform01(gen) - 1, 2 * uniform01(gen) - 1);
    x(1) = cplx(2 * uniform01(gen) - 1, 2 * uniform01(gen) - 1);
    const double r = cocycle_residual(spec, lat, l, m, x);
    worst = std::max(worst, r);
    rows.push_back({std::to_string(n), fmt(r)});
  }
  const bool ok = worst <= tol;
  if (g.csv()) {
    emit_csv({"sample", "relative_residual"}, rows);
  } else {
    emit({{"tau", cjson(tau)}, {"b0", b0}, {"samples", samples}, {"seed", g.cfg.seed}, {"max_relative_residual", worst},
          {"tolerances", tol_subset(g.cfg, {"cocycle"})}, {"verified", ok}});
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_glue(const Globals& g, const std::string& tau_text, const std::string& p_text, const std::string& q_text,
             const std::string& s_text, const std::string& xi_text, int samples) {
  if (samples < 1) throw DomainError("--samples must be positive");
  NeckChartSpec plus{parse_complex(tau_text), RealNumberRep::parse(p_text).to_double(),
                     RealNumberRep::parse(q_text).to_double(), 2.0, Side::plus};
  plus.validate();
  const GlueParams glue{parse_complex(s_text), parse_complex(xi_text), 0.25};
  glue.validate();
  const NeckChartSpec minus = plus.opposite();
  const double root = std::sqrt(std::abs(glue.s));
  const double tol = g.cfg.tol("gluing"), ptol = g.cfg.tol("pullback");
  auto gen = seeded(g.cfg.seed, 12);
  double eq = 0.0, rt = 0.0;
  json pulls = json::array();
  std::vector<std::vector<std::string>> rows;
  bool sym_ok = true;
  double pull_dev = 0.0;
  for (int n = 0; n < samples; ++n) {
    const double mod = root * std::exp((1.98 * uniform01(gen) - 0.99) * std::log(plus.r));
    const NeckPoint pt = canonicalize({plus.tau * uniform01(gen) + uniform01(gen), std::polar(mod, 2 * kPi * uniform01(gen))}, plus);
    const std::int64_t m = static_cast<std::int64_t>(gen() % 7) - 3, k = static_cast<std::int64_t>(gen() % 7) - 3;
    const NeckPoint a = transition_fs(canonicalize(deck(pt, plus, m, k), plus), glue, plus);
    const NeckPoint b = deck(transition_fs(pt, glue, plus), minus, m, k);
    const double e = class_distance(a, b, minus);
    const double r = class_distance(transition_fs(transition_fs(pt, glue, plus), glue, minus), pt, plus);
    const PullbackResult pr = two_form_pullback_check(pt, glue, plus);
    eq = std::max(eq, e);
    rt = std::max(rt, r);
    pull_dev = std::max(pull_dev, std::abs(pr.ratio_fd + 1.0));
    sym_ok = sym_ok && pr.ratio_symbolic.coef == -1.0 && pr.ratio_symbolic.s_pow == 0 && pr.ratio_symbolic.w_pow == 0;
    rows.push_back({std::to_string(n), fmt(e), fmt(r), fmt(pr.ratio_fd.real()), fmt(pr.ratio_fd.imag())});
  }
  const bool ok = eq <= tol && rt <= tol && pull_dev <= ptol && sym_ok;
  if (g.csv()) {
    emit_csv({"sample", "equivariance_residual", "round_trip_residual", "pullback_ratio_re", "pullback_ratio_im"}, rows);
  } else {
    emit({{"tau", cjson(plus.tau)}, {"s", cjson(glue.s)}, {"xi", cjson(glue.xi)}, {"samples", samples}, {"seed", g.cfg.seed},
          {"max_equivariance_residual", eq}, {"max_round_trip_residual", rt}, {"max_pullback_ratio_deviation", pull_dev},
          {"symbolic_ratio", {{"coef", -1.0}, {"s_pow", 0}, {"w_pow", 0}, {"exact", sym_ok}}},
          {"tolerances", tol_subset(g.cfg, {"gluing", "pullback"})}, {"verified", ok}});
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_metric(const Globals& g, const std::string& tau_text, std::int64_t b0, double b, double w_abs,
               const std::string& s_text, const std::string& profile) {
  NeckMetricSpec spec;
  spec.tau = parse_complex(tau_text);
  spec.b0 = b0;
  spec.b = b;
  spec.s = parse_complex(s_text);
  spec.validate();
  if (g.csv()) {
    const CutoffSpec cut;
    std::vector<std::vector<std::string>> rows;
    if (profile == "cutoff") {
      for (int k = 0; k <= 400; ++k) {
        const double x = cut.r * 1.25 * k / 400.0;
        rows.push_back({fmt(x), fmt(cutoff_f_tilde(x, cut))});
      }
      emit_csv({"x", "f_tilde"}, rows);
    } else {
      for (int k = 1; k <= 400; ++k) {
        const double t = cut.r * 1.25 * k / 400.0;
        rows.push_back({fmt(t), fmt(psi_s({0.0, t}, cut, spec.s))});
      }
      emit_csv({"abs_w", "psi"}, rows);
    }
    return kOk;
  }
  const NeckPoint pt{0.0, cplx(w_abs, 0.0)};
  const Eigen::Matrix2d m = neck_metric_matrix(pt, spec);
  const double det = m.determinant(), formula = neck_metric_det_formula(w_abs, spec);
  const double dtol = g.cfg.tol("determinant"), rtol = g.cfg.tol("ricci");
  const double ricci = ricci_check(pt, spec);
  json lengths = json::array();
  for (int k = 1; k <= 6; ++k) {
    const double t0 = std::pow(10.0, -k) * w_abs;
    lengths.push_back({{"t0", t0}, {"t1", w_abs}, {"length", radial_length(t0, w_abs, spec)}});
  }
  const bool ok = std::abs(det / formula - 1.0) <= dtol && ricci <= rtol;
  emit({{"tau", cjson(spec.tau)}, {"b0", b0}, {"b", b}, {"w", w_abs},
        {"matrix", json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})})},
        {"det", det}, {"det_formula", formula}, {"ricci_residual", ricci}, {"radial_lengths", lengths},
        {"tolerances", tol_subset(g.cfg, {"determinant", "ricci"})}, {"verified", ok}});
  return ok ? kOk : kVerifyFailed;
}

json fiber_json(const FiberDescriptor& f) {
  json pts = json::array();
  for (const TorusPoint& p : f.points) pts.push_back(cjson(p.z()));
  return {{"tau", cjson(f.tau)}, {"points", pts}, {"ample", f.ample.to_string()}, {"b0", f.b0},
          {"neck", {{"tau", cjson(f.neck.tau)}, {"p", f.neck.p}, {"q", f.neck.q}, {"r", f.neck.r}}},
          {"constraint_residual", f.constraint_residual}};
}

int cmd_family_sample(const Globals& g, int count, double radius, std::int64_t d, std::int64_t k) {
  if (count < 1 || count > 1000000) throw DomainError("--count must be in [1, 1000000]");
  const std::vector<FiberDescriptor> fibers =
      family_sample(FamilyParams::defaults(), DivisorClass::uniform(d, k), static_cast<std::size_t>(count), g.cfg.seed, radius);
  const double tol = g.cfg.tol("ninth");
  bool ok = true;
  json arr = json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < fibers.size(); ++n) {
    ok = ok && fibers[n].constraint_residual <= tol;
    arr.push_back(fiber_json(fibers[n]));
    rows.push_back({std::to_string(n), fmt(fibers[n].tau.real()), fmt(fibers[n].tau.imag()),
                    fmt(fibers[n].points.back().z().real()), fmt(fibers[n].points.back().z().imag()),
                    fmt(fibers[n].constraint_residual)});
  }
  if (g.csv()) {
    emit_csv({"index", "tau_re", "tau_im", "p9_re", "p9_im", "constraint_residual"}, rows);
  } else {
    const TopologyReport t = topology_report(fibers.front());
    emit({{"seed", g.cfg.seed}, {"count", count}, {"radius", radius}, {"fibers", arr},
          {"topology", {{"euler", t.euler}, {"b2", t.b2}, {"signature", t.signature}}},
          {"tolerances", tol_subset(g.cfg, {"ninth"})}, {"verified", ok}});
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_family_distinct(const Globals& g, const std::string& t1, const std::string& t2) {
  FamilyParams a = FamilyParams::defaults(), b = FamilyParams::defaults();
  a.tau = parse_complex(t1);
  b.tau = parse_complex(t2);
  for (std::size_t j = 0; j < 8; ++j) {
    a.p_hat[j] = static_cast<double>(j + 1) / 9.0 * (1.0 + a.tau);
    b.p_hat[j] = static_cast<double>(j + 1) / 9.0 * (1.0 + b.tau);
  }
  const DivisorClass ample = DivisorClass::uniform(7, 2);
  const DistinctnessReport r = fibers_distinct(build_fiber(a, ample), build_fiber(b, ample), g.cfg.tol("j"), lattice_cfg(g.cfg));
  emit({{"tau1", cjson(a.tau)}, {"tau2", cjson(b.tau)}, {"j1", cjson(r.j1)}, {"j2", cjson(r.j2)},
        {"verdict", to_string(r.verdict)}, {"tolerances", tol_subset(g.cfg, {"j"})}, {"verified", true}});
  return kOk;
}

int cmd_verify_all(const Globals& g) {
  std::vector<acceptance::CriterionResult> results;
  const acceptance::CriterionResult e2e = acceptance::end_to_end(g.cfg, &results);
  results.push_back(e2e);
  for (const auto& r : results) std::fprintf(stderr, "%s %s %.2fs\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.seconds);
  json out = acceptance::report_json(results, g.cfg);
  out["verified"] = out["failed"] == 0;
  emit(out);
  return out["failed"] == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3neck: numerical checks for the K3 neck construction"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, std::string("JSON run config (default: $") + kConfigEnvVar + ")");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--format", g.format, "json or csv (default from config)")->check(CLI::IsMember({"json", "csv"}));

  std::string p = "sqrt(2)", q = "sqrt(3)", tau = "i", s = "0.01", xi = "0";
  std::optional<std::int64_t> n_max;
  std::int64_t dmax = 12, b0 = 3, d = 7, k = 2;
  std::vector<std::string> zs;
  int samples = 100, count = 10;
  double b = 0.5, w = 0.1, radius = kDefaultDiscRadius;
  std::string profile = "psi", tau2 = "2i";

  auto* dioph = app.add_subcommand("dioph-check", "Diophantine condition for a pair (p, q)");
  dioph->add_option("--p", p, "a/b, a+b*sqrt(d) or decimal")->required();
  dioph->add_option("--q", q)->required();
  dioph->add_option("--n-max", n_max);

  auto* emb = app.add_subcommand("embed", "Weierstrass embedding of torus points");
  emb->add_option("--tau", tau);
  emb->add_option("--z", zs, "point(s) in C")->required();

  auto* pic = app.add_subcommand("picard-table", "Ampleness verdicts for uniform classes dH - k sum E_i");
  pic->add_option("--dmax", dmax);

  auto* tor = app.add_subcommand("toroidal-classify", "Toroidality, Riemann form, type and kind");
  tor->add_option("--tau", tau);
  tor->add_option("--p", p);
  tor->add_option("--q", q);
  tor->add_option("--b0", b0);

  auto* theta = app.add_subcommand("theta-cocycle", "Cocycle residuals of the theta factor");
  theta->add_option("--tau", tau);
  theta->add_option("--p", p);
  theta->add_option("--q", q);
  theta->add_option("--b0", b0);
  theta->add_option("--samples", samples);

  auto* glue = app.add_subcommand("glue-check", "Transition map equivariance, round trip and 2-form pullback");
  glue->add_option("--tau", tau);
  glue->add_option("--p", p);
  glue->add_option("--q", q);
  glue->add_option("--s", s);
  glue->add_option("--xi", xi);
  glue->add_option("--samples", samples);

  auto* met = app.add_subcommand("metric-report", "Neck model metric at |w|; CSV gives Psi_s or cutoff profiles");
  met->add_option("--tau", tau);
  met->add_option("--b0", b0);
  met->add_option("--b", b);
  met->add_option("--w", w);
  met->add_option("--s", s);
  met->add_option("--profile", profile)->check(CLI::IsMember({"psi", "cutoff"}));

  auto* fs = app.add_subcommand("family-sample", "Sample fibers of the family near the default parameters");
  fs->add_option("--count", count);
  fs->add_option("--radius", radius);
  fs->add_option("--d", d);
  fs->add_option("--k", k);

  auto* fd = app.add_subcommand("family-distinct", "Compare two fibers by j-invariant");
  fd->add_option("--tau1", tau);
  fd->add_option("--tau2", tau2);

  auto* va = app.add_subcommand("verify-all", "Run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    g.resolve();
    if (*dioph) return cmd_dioph(g, p, q, n_max);
    if (*emb) return cmd_embed(g, tau, zs);
    if (*pic) return cmd_picard(g, dmax);
    if (*tor) return cmd_toroidal(g, tau, p, q, b0);
    if (*theta) return cmd_theta(g, tau, p, q, b0, samples);
    if (*glue) return cmd_glue(g, tau, p, q, s, xi, samples);
    if (*met) return cmd_metric(g, tau, b0, b, w, s, profile);
    if (*fs) return cmd_family_sample(g, count, radius, d, k);
    if (*fd) return cmd_family_distinct(g, tau, tau2);
    if (*va) return cmd_verify_all(g);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  std::cerr << app.help();
  return kUsage;
}
