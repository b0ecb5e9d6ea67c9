#include "loxo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loxo/error.hpp"
#include "loxo/frenet.hpp"

namespace loxo {

using nlohmann::json;

namespace {

constexpr double kInvariantTol = 1e-9;
constexpr double kNormalCurvatureTol = 1e-8;
constexpr double kSpecializationTol = 1e-9;
constexpr double kRealizationTol = 1e-9;
constexpr double kCoshTol = 1e-8;
constexpr double kOdeResidualTol = 1e-7;
constexpr double kLambdaMuTol = 1e-6;

struct Collector {
  VerificationReport& report;
  void check(std::string id, double residual, double tol) {
    const bool holds = std::isfinite(residual) && residual <= tol;
    report.checks.push_back({std::move(id), holds, residual, tol});
  }
};

Interval inner(const Interval& r) { return {r.lo + 0.1 * r.length(), r.hi - 0.1 * r.length()}; }

void surface_checks(const ProfileModel& surface, Collector& out) {
  const Interval range = inner(surface.domain());
  const auto ss = sample_ts(range, 101);
  if (auto K0 = surface.constant_curvature()) {
    double worst = 0.0;
    for (double s : ss) worst = std::max(worst, std::abs(surface_curvatures(surface, s).gauss_K - *K0));
    out.check("surface.gauss_curvature", worst, kRealizationTol);
  }
  if (const auto* p = std::get_if<MinimalParams>(&surface.params())) {
    double h = 0.0, cosh_gap = 0.0;
    for (double s : ss) {
      h = std::max(h, std::abs(surface_curvatures(surface, s).mean_H));
      const ProfileJet j = surface.jet(s);
      // With g' < 0 the height runs backwards; cosh is even so only |g - r| matters.
      cosh_gap = std::max(cosh_gap, std::abs(j.f - std::cosh(p->n * (j.g - p->r)) / p->n));
    }
    out.check("surface.mean_curvature", h, kRealizationTol);
    out.check("surface.cosh_relation", cosh_gap, kCoshTol);
  }
  if (const auto* p = std::get_if<CrpcParams>(&surface.params())) {
    double worst = 0.0;
    for (double s : ss) {
      const ProfileJet j = surface.local_jet(s);
      worst = std::max(worst, std::abs(j.f * j.f2 - p->k * (j.f1 * j.f1 - 1.0)));
    }
    out.check("surface.crpc_ode", worst, kOdeResidualTol);
  }
}

bool is_flat_helix_case(const ProfileModel& surface, const LoxodromeSpec& spec) {
  const auto* flat = std::get_if<FlatParams>(&surface.params());
  return flat && std::abs(flat->A) < 1.0 && spec.a() != 0.0 && spec.b() != 0.0;
}

std::optional<bool> asymptotic_expected(const ProfileModel& surface, const LoxodromeSpec& spec) {
  if (surface.kind() == ProfileKind::Minimal && is_quarter_angle(spec.psi)) return true;
  if (const auto* c = std::get_if<CrpcParams>(&surface.params())) {
    const double tan2 = std::pow(std::tan(spec.psi), 2);
    if (std::abs(c->k + tan2) <= 1e-12 * std::max(1.0, tan2)) return true;
  }
  // Round spheres are umbilic: kappa_n = a^2 kappa1 + b^2 kappa2 = kappa2 != 0.
  if (auto kd = surface.crpc_constants(); kd && kd->first == 1.0) return false;
  return std::nullopt;
}

void curve_checks(const SceneCurve& sc, const VerifyOptions& opt, VerificationReport& report) {
  Collector out{report};
  const Loxodrome& lox = sc.curve;
  const ProfileModel& surface = lox.surface();
  const LoxodromeSpec& spec = lox.spec();
  const std::string pre = sc.name + ".";
  const auto ts = sample_ts(inner(sc.t_range), opt.samples);
  const Curve curve = [&](double t) { return loxodrome_point(lox, t); };

  double dk = 0.0, dt = 0.0, speed = 0.0, angle = 0.0, theta_gap = 0.0, kn_gap = 0.0;
  double const_k = 0.0, crpc = 0.0, quarter = 0.0;
  const auto K0 = surface.constant_curvature();
  const auto kd = surface.crpc_constants();
  const bool quarter_angle = is_quarter_angle(spec.psi);
  for (double t : ts) {
    const KappaTau g = kappa_tau_general(lox, t);
    const FrenetApparatus o = frenet_numeric(curve, t);
    dk = std::max(dk, std::abs(g.kappa - o.kappa));
    if (g.tau_defined && o.valid_tau) dt = std::max(dt, std::abs(g.tau - o.tau));

    const Vec3 v = numeric_velocity(curve, t);
    speed = std::max(speed, std::abs(norm(v) - 1.0));
    const ProfileJet j = surface.local_jet(s_of_t(spec, t));
    const double th = theta_of_t(lox, t);
    const Vec3 meridian{j.f1 * std::cos(th), j.f1 * std::sin(th), j.g1};
    angle = std::max(angle, std::abs(dot(v, meridian) - spec.a()));
    if (lox.closed_form() && std::isfinite(sc.t_range.length()) && spec.a() != 0.0) {
      theta_gap = std::max(theta_gap, std::abs(th - theta_numeric(lox, t)));
    }
    kn_gap = std::max(kn_gap, std::abs(normal_curvature(lox, t) - normal_curvature_shape(lox, t)));

    const auto cmp = [&](const KappaTau& q) {
      double d = std::abs(q.kappa - g.kappa);
      if (q.tau_defined && g.tau_defined) d = std::max(d, std::abs(q.tau - g.tau));
      return d;
    };
    if (K0) const_k = std::max(const_k, cmp(kappa_tau_const_k(lox, *K0, t)));
    if (kd) crpc = std::max(crpc, cmp(kappa_tau_crpc(lox, kd->first, kd->second, t)));
    if (quarter_angle) quarter = std::max(quarter, cmp(kappa_tau_quarter(lox, t)));
  }
  out.check(pre + "oracle.kappa", dk, opt.oracle_tol);
  out.check(pre + "oracle.tau", dt, opt.oracle_tol);
  out.check(pre + "unit_speed", speed, kInvariantTol);
  out.check(pre + "meridian_angle", angle, kInvariantTol);
  if (lox.closed_form() && spec.a() != 0.0 && spec.b() != 0.0) {
    out.check(pre + "theta.closed_vs_quadrature", theta_gap, kInvariantTol);
  }
  out.check(pre + "normal_curvature.shape_operator", kn_gap, kNormalCurvatureTol);
  if (K0) out.check(pre + "specialization.constant_k", const_k, kSpecializationTol);
  if (kd) out.check(pre + "specialization.crpc", crpc, kSpecializationTol);
  if (quarter_angle) out.check(pre + "specialization.quarter_angle", quarter, kSpecializationTol);

  // Classifications.
  const auto add = [&](const std::string& id, CharacterizationVerdict v, std::optional<bool> expected) {
    if (expected) out.check(pre + id + ".matches_theory", v.holds == *expected ? 0.0 : 1.0, 0.0);
    report.verdicts.push_back({pre + id, std::move(v), expected});
  };
  if (spec.a() == 0.0 || spec.b() == 0.0) {
    add("special_angle", check_special_angle(lox, ts), true);
    return;
  }
  try {
    auto v = check_general_helix(lox, ts);
    const bool flat_helix = is_flat_helix_case(surface, spec);
    if (flat_helix) {
      const double expected = v.details["ratio_expected"];
      out.check(pre + "general_helix.ratio", std::abs(v.details["ratio"] - expected) / (1.0 + std::abs(expected)),
                kHelixTol);
    }
    add("general_helix", std::move(v), flat_helix ? std::optional<bool>(true) : std::nullopt);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UndefinedTorsion) throw;
  }
  add("asymptotic", check_asymptotic(lox, ts), asymptotic_expected(surface, spec));
  if (surface.kind() == ProfileKind::Minimal && quarter_angle) {
    auto v = check_linear_ratio(lox, ts);
    out.check(pre + "linear_ratio.lambda", std::abs(v.details["lambda"] - v.details["lambda_expected"]), kLambdaMuTol);
    out.check(pre + "linear_ratio.mu", std::abs(v.details["mu"] - v.details["mu_expected"]), kLambdaMuTol);
    add("linear_ratio", std::move(v), true);
  }
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.holds; }));
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

VerificationReport verify_scene(const SceneConfig& scene, const VerifyOptions& options) {
  if (options.samples < 8) throw Error(ErrorCode::InvalidParams, "verification needs at least 8 samples");
  if (!(options.oracle_tol > 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance must be positive");
  VerificationReport report;
  report.suite = scene.name;
  const ProfileModel surface = build_profile(scene.surface.params, scene.surface.build);
  Collector out{report};
  surface_checks(surface, out);
  for (const SceneCurve& sc : build_curves(surface, scene)) curve_checks(sc, options, report);
  return report;
}

json report_to_json(const VerificationReport& report) {
  json doc;
  doc["suite"] = report.suite;
  doc["checks"] = json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"id", c.id}, {"holds", c.holds}, {"residual", number(c.residual)},
                             {"tolerance", c.tolerance}});
  }
  doc["verdicts"] = json::array();
  for (const auto& v : report.verdicts) {
    json details = json::object();
    for (const auto& [k, val] : v.verdict.details) details[k] = number(val);
    json entry = {{"id", v.id},
                  {"claim", std::string(to_string(v.verdict.claim))},
                  {"holds", v.verdict.holds},
                  {"residual", number(v.verdict.residual)},
                  {"tolerance", v.verdict.tolerance},
                  {"details", details}};
    entry["expected"] = v.expected ? json(*v.expected) : json(nullptr);
    doc["verdicts"].push_back(entry);
  }
  doc["summary"] = {{"passed", report.passed()}, {"failed", report.failed()},
                    {"total", static_cast<int>(report.checks.size())}};
  return doc;
}

}  // namespace loxo
