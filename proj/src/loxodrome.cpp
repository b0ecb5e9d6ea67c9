#include "loxo/loxodrome.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "loxo/error.hpp"

namespace loxo {

namespace {

constexpr double kSnap = 1e-15;
constexpr double kCaseTol = 1e-14;
// Below this |a| the closed forms lose digits to cancellation.
constexpr double kMinClosedFormA = 1e-6;
constexpr double kParamMatchTol = 1e-12;

bool nearly_zero(double v, double scale = 1.0) {
  return std::abs(v) <= kCaseTol * std::max(1.0, std::abs(scale));
}

// Real antiderivative of 1/(1 - z^2) valid on both sides of |z| = 1.
double atanh_ext(double z) { return 0.5 * std::log(std::abs((1.0 + z) / (1.0 - z))); }

bool same(double x, double y) {
  return std::abs(x - y) <= kParamMatchTol * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

struct Local {
  double a, b, sigma;
  ProfileJet j;
  double w2;  // 1 - f'^2
};

Local local_at(const Loxodrome& lox, double t) {
  if (!lox.contains(t)) throw Error(ErrorCode::OutOfDomain, "t outside the loxodrome t-domain", t);
  Local l;
  l.a = lox.spec().a();
  l.b = lox.spec().b();
  l.sigma = lox.surface().g_branch();
  l.j = lox.surface().local_jet(s_of_t(lox.spec(), t));
  l.w2 = (1.0 - l.j.f1) * (1.0 + l.j.f1);
  if (l.w2 < kMinSlopeGap) {
    throw Error(ErrorCode::PoleSingularity, "1 - f'^2 below threshold", t);
  }
  return l;
}

KappaTau finish(double kappa_sq, double tau_times_kappa_sq) {
  KappaTau out;
  out.kappa = std::sqrt(std::max(0.0, kappa_sq));
  if (out.kappa < kKappaFloor) {
    out.tau = std::numeric_limits<double>::quiet_NaN();
    out.tau_defined = false;
  } else {
    out.tau = tau_times_kappa_sq / kappa_sq;
  }
  return out;
}

}  // namespace

double LoxodromeSpec::a() const {
  const double v = std::cos(psi);
  return std::abs(v) < kSnap ? 0.0 : v;
}

double LoxodromeSpec::b() const {
  const double v = std::sin(psi);
  return std::abs(v) < kSnap ? 0.0 : epsilon * v;
}

double s_of_t(const LoxodromeSpec& spec, double t) { return spec.a() * t + spec.c; }

std::string_view to_string(ThetaCase c) {
  switch (c) {
    case ThetaCase::Meridian: return "meridian";
    case ThetaCase::Parallel: return "parallel";
    case ThetaCase::FlatLog: return "flat-log";
    case ThetaCase::FlatLinear: return "flat-linear";
    case ThetaCase::SphericalLogTan: return "spherical-logtan";
    case ThetaCase::SphericalArctanh: return "spherical-arctanh";
    case ThetaCase::HyperbolicLogTanh: return "hyperbolic-logtanh";
    case ThetaCase::HyperbolicArctan: return "hyperbolic-arctan";
    case ThetaCase::HyperbolicArctanh: return "hyperbolic-arctanh";
    case ThetaCase::HyperbolicExp: return "hyperbolic-exp";
    case ThetaCase::Minimal: return "minimal";
    case ThetaCase::Numeric: return "numeric";
  }
  return "unknown";
}

bool is_quarter_angle(double psi) { return std::abs(psi - std::numbers::pi / 4) <= 1e-12; }

// ---------------------------------------------------------------------------

namespace {

ThetaCase select_case(const ProfileModel& surface, double a, double b) {
  if (b == 0.0) return ThetaCase::Meridian;
  if (a == 0.0) return ThetaCase::Parallel;
  if (std::abs(a) < kMinClosedFormA) return ThetaCase::Numeric;
  return std::visit(
      [](const auto& p) -> ThetaCase {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FlatParams>) {
          return nearly_zero(p.A) ? ThetaCase::FlatLinear : ThetaCase::FlatLog;
        } else if constexpr (std::is_same_v<P, SphericalKParams>) {
          return nearly_zero(p.A) ? ThetaCase::SphericalLogTan : ThetaCase::SphericalArctanh;
        } else if constexpr (std::is_same_v<P, HyperbolicKParams>) {
          if (!nearly_zero(p.A) && nearly_zero(p.A - p.B, p.A)) return ThetaCase::HyperbolicExp;
          if (nearly_zero(p.A)) return ThetaCase::HyperbolicLogTanh;
          if (p.B * p.B < p.A * p.A) return ThetaCase::HyperbolicArctan;
          if (p.A * p.A < p.B * p.B && !nearly_zero(p.A + p.B, p.A)) return ThetaCase::HyperbolicArctanh;
          return ThetaCase::Numeric;  // A = -B has no listed closed form
        } else if constexpr (std::is_same_v<P, MinimalParams>) {
          return ThetaCase::Minimal;
        } else {
          return ThetaCase::Numeric;
        }
      },
      surface.params());
}

}  // namespace

double Loxodrome::antiderivative(double t) const {
  const double a = spec_.a();
  const double b = spec_.b();
  const double c = spec_.c;
  double value = 0.0;
  switch (case_) {
    case ThetaCase::Meridian: return 0.0;
    case ThetaCase::Parallel: return b * t / parallel_radius_;
    case ThetaCase::FlatLog: {
      // (eps tan psi / A) ln|a A t + B0| with B0 = A c + B, so the argument is f(s(t)).
      const auto& p = std::get<FlatParams>(surface_.params());
      value = b / (a * p.A) * std::log(std::abs(a * p.A * t + (p.A * c + p.B)));
      break;
    }
    case ThetaCase::FlatLinear: {
      const auto& p = std::get<FlatParams>(surface_.params());
      value = b / p.B * t;
      break;
    }
    case ThetaCase::SphericalLogTan: {
      const auto& p = std::get<SphericalKParams>(surface_.params());
      const double w = std::sqrt(p.K0);
      const double x = w * (a * t + c);
      value = b / (a * p.B * w) * std::log(std::abs(std::tan(0.5 * x)));
      break;
    }
    case ThetaCase::SphericalArctanh: {
      const auto& p = std::get<SphericalKParams>(surface_.params());
      const double w = std::sqrt(p.K0);
      const double x = w * (a * t + c);
      const double r = std::hypot(p.A, p.B);
      value = 2.0 * b / (a * w * r) * atanh_ext((p.A * std::tan(0.5 * x) - p.B) / r);
      break;
    }
    case ThetaCase::HyperbolicLogTanh: {
      const auto& p = std::get<HyperbolicKParams>(surface_.params());
      const double w = std::sqrt(-p.K0);
      const double x = w * (a * t + c);
      value = b / (a * p.B * w) * std::log(std::abs(std::tanh(0.5 * x)));
      break;
    }
    case ThetaCase::HyperbolicArctan: {
      const auto& p = std::get<HyperbolicKParams>(surface_.params());
      const double w = std::sqrt(-p.K0);
      const double x = w * (a * t + c);
      const double dd = std::sqrt(p.A * p.A - p.B * p.B);
      value = 2.0 * b / (a * w * dd) * std::atan((p.A * std::tanh(0.5 * x) + p.B) / dd);
      break;
    }
    case ThetaCase::HyperbolicArctanh: {
      const auto& p = std::get<HyperbolicKParams>(surface_.params());
      const double w = std::sqrt(-p.K0);
      const double x = w * (a * t + c);
      const double dd = std::sqrt(p.B * p.B - p.A * p.A);
      // Differentiating shows this branch carries a minus sign.
      value = -2.0 * b / (a * w * dd) * atanh_ext((p.A * std::tanh(0.5 * x) + p.B) / dd);
      break;
    }
    case ThetaCase::HyperbolicExp: {
      const auto& p = std::get<HyperbolicKParams>(surface_.params());
      const double w = std::sqrt(-p.K0);
      const double x = w * (a * t + c);
      value = -b / (a * p.A * w) * std::exp(-x);
      break;
    }
    case ThetaCase::Minimal: {
      const auto& p = std::get<MinimalParams>(surface_.params());
      value = b / a * std::asinh(p.n * (a * t + c + p.m));
      break;
    }
    case ThetaCase::Numeric: return 0.0;
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::LogSingularity, "closed-form theta is singular", t);
  }
  return value;
}

Loxodrome make_loxodrome(const ProfileModel& surface, const LoxodromeSpec& spec,
                         const LoxodromeOptions& options) {
  if (!(spec.psi >= 0.0 && spec.psi <= std::numbers::pi)) {
    throw Error(ErrorCode::InvalidParams, "psi must lie in [0, pi]");
  }
  if (spec.epsilon != 1 && spec.epsilon != -1) {
    throw Error(ErrorCode::InvalidParams, "epsilon must be +1 or -1");
  }
  if (!std::isfinite(spec.c) || !std::isfinite(spec.t0) || !std::isfinite(spec.theta0)) {
    throw Error(ErrorCode::InvalidParams, "loxodrome constants must be finite");
  }
  if (!(options.quad_tol > 0.0)) throw Error(ErrorCode::InvalidParams, "quad_tol must be positive");

  Loxodrome lox;
  lox.surface_ = surface;
  lox.spec_ = spec;
  lox.quad_tol_ = options.quad_tol;

  const double a = spec.a();
  const double b = spec.b();
  const Interval& dom = surface.domain();
  if (a == 0.0) {
    if (!dom.contains(spec.c)) {
      throw Error(ErrorCode::EmptyTDomain, "parallel s = c lies outside the surface domain", spec.c);
    }
    lox.parallel_radius_ = surface.local_jet(spec.c).f;
    const double inf = std::numeric_limits<double>::infinity();
    lox.t_domain_ = {-inf, inf};
  } else {
    const double t1 = (dom.lo - spec.c) / a;
    const double t2 = (dom.hi - spec.c) / a;
    lox.t_domain_ = {std::min(t1, t2), std::max(t1, t2)};
    // Keep the mapped endpoints inside the surface domain after rounding.
    while (!dom.contains(s_of_t(spec, lox.t_domain_.lo))) {
      lox.t_domain_.lo = std::nextafter(lox.t_domain_.lo, lox.t_domain_.hi);
    }
    while (!dom.contains(s_of_t(spec, lox.t_domain_.hi))) {
      lox.t_domain_.hi = std::nextafter(lox.t_domain_.hi, lox.t_domain_.lo);
    }
    if (!(lox.t_domain_.hi > lox.t_domain_.lo)) {
      throw Error(ErrorCode::EmptyTDomain, "t-domain is empty");
    }
  }
  if (!lox.t_domain_.contains(spec.t0)) {
    throw Error(ErrorCode::InvalidParams, "t0 lies outside the t-domain", spec.t0);
  }

  ThetaCase chosen = select_case(surface, a, b);
  if (options.force_numeric && chosen != ThetaCase::Meridian) chosen = ThetaCase::Numeric;
  if (chosen == ThetaCase::Numeric && !options.allow_numeric) {
    throw Error(ErrorCode::ClosedFormCaseGap, "no closed form for these parameters");
  }
  lox.case_ = chosen;
  lox.theta_ref_ = lox.antiderivative(spec.t0);
  return lox;
}

double theta_numeric(const Loxodrome& lox, double t) {
  if (!lox.contains(t)) throw Error(ErrorCode::OutOfDomain, "t outside the loxodrome t-domain", t);
  const LoxodromeSpec& spec = lox.spec();
  const double b = spec.b();
  if (b == 0.0) return spec.theta0;
  const auto integrand = [&](double xi) { return b / lox.surface().local_jet(s_of_t(spec, xi)).f; };
  return spec.theta0 + numerics::integrate_adaptive(integrand, spec.t0, t, lox.quad_tol()).value;
}

double theta_of_t(const Loxodrome& lox, double t) {
  if (!lox.contains(t)) throw Error(ErrorCode::OutOfDomain, "t outside the loxodrome t-domain", t);
  if (lox.case_ == ThetaCase::Numeric) return theta_numeric(lox, t);
  return lox.spec_.theta0 + (lox.antiderivative(t) - lox.theta_ref_);
}

Vec3 loxodrome_point(const Loxodrome& lox, double t) {
  return surface_point(lox.surface(), s_of_t(lox.spec(), t), theta_of_t(lox, t));
}

CurveJet curve_jet(const Loxodrome& lox, double t) {
  const Local l = local_at(lox, t);
  const double a = l.a, b = l.b;
  const double f = l.j.f, f1 = l.j.f1, f2 = l.j.f2, f3 = l.j.f3;
  const double w = std::sqrt(l.w2);
  const double g1 = l.j.g1;
  const double g2 = -l.sigma * f1 * f2 / w;
  const double g3 = -l.sigma * (f2 * f2 + f1 * f3 * l.w2) / (l.w2 * w);
  const double s = s_of_t(lox.spec(), t);
  const double theta = theta_of_t(lox, t);
  const double ct = std::cos(theta), st = std::sin(theta);

  CurveJet jet;
  jet.p0 = {f * ct, f * st, lox.surface().height(s)};
  jet.p1 = {a * f1 * ct - b * st, a * f1 * st + b * ct, a * g1};
  const double radial = a * a * f2 - b * b / f;
  const double swirl = a * b * f1 / f;
  jet.p2 = {radial * ct - swirl * st, radial * st + swirl * ct, a * a * g2};
  // d/dt of p2; the f f'' term carries a^2 (theta' = b/f, s' = a).
  const double m = b / (f * f) * (b * b + a * a * f1 * f1 - 2.0 * a * a * f * f2);
  const double a3 = a * a * a;
  jet.p3 = {a3 * f3 * ct + m * st, a3 * f3 * st - m * ct, a3 * g3};
  return jet;
}

KappaTau kappa_tau_general(const Loxodrome& lox, double t) {
  const Local l = local_at(lox, t);
  const double a = l.a, b = l.b, a2 = a * a, b2 = b * b;
  const double f = l.j.f, f1 = l.j.f1, f2 = l.j.f2, f3 = l.j.f3;
  const double f1s = f1 * f1;
  const double w2 = l.w2;
  const double kappa_sq = a2 * a2 * f2 * f2 / w2 + (b2 * b2 + a2 * b2 * f1s) / (f * f) -
                          2.0 * a2 * b2 * f2 / f;
  const double bracket = -b2 * w2 * w2 * (b2 + a2 * f1s) +
                         a2 * f * f2 * w2 * (3.0 * b2 + (a2 - 2.0 * b2) * f1s) +
                         a2 * f * f * f2 * f2 * (-2.0 * a2 + b2 + 3.0 * a2 * f1s) -
                         a2 * a2 * f * f * f * f2 * f2 * f2 +
                         a2 * f * f * f1 * f3 * w2;
  const double tk2 = -l.sigma * a * b * bracket / (f * f * f * w2 * std::sqrt(w2));
  return finish(kappa_sq, tk2);
}

KappaTau kappa_tau_const_k(const Loxodrome& lox, double K0, double t) {
  const auto realized = lox.surface().constant_curvature();
  if (!realized || !same(*realized, K0)) {
    throw Error(ErrorCode::KindMismatch, "surface does not have the requested constant curvature");
  }
  const Local l = local_at(lox, t);
  const double a = l.a, b = l.b, a2 = a * a, b2 = b * b;
  const double f = l.j.f, f1s = l.j.f1 * l.j.f1, w2 = l.w2;
  const double f2p = f * f, f4 = f2p * f2p, f6 = f4 * f2p;
  const double kappa_sq =
      2.0 * a2 * b2 * K0 + a2 * a2 * K0 * K0 * f2p / w2 + (b2 * b2 + a2 * b2 * f1s) / f2p;
  const double bracket = a2 * a2 * K0 * K0 * K0 * f6 - b2 * w2 * w2 * (b2 + a2 * f1s) +
                         a2 * K0 * K0 * f4 * (-2.0 * a2 + b2 + 3.0 * a2 * f1s) -
                         a2 * K0 * f2p * w2 * (3.0 * b2 + (1.0 + a2 - 2.0 * b2) * f1s);
  const double tk2 = -l.sigma * a * b * bracket / (f * f2p * w2 * std::sqrt(w2));
  return finish(kappa_sq, tk2);
}

KappaTau kappa_tau_crpc(const Loxodrome& lox, double k, double d, double t) {
  const auto realized = lox.surface().crpc_constants();
  if (!realized || !same(realized->first, k) || !same(realized->second, d)) {
    throw Error(ErrorCode::KindMismatch, "surface does not satisfy kappa1 = k kappa2 with this d");
  }
  const Local l = local_at(lox, t);
  const double a = l.a, b = l.b, a2 = a * a, b2 = b * b, a4 = a2 * a2;
  const double f = l.j.f;
  const double fk = std::pow(f, k);
  const double f2k = fk * fk;
  const double kappa_sq = (b2 + d * d * a2 * (a2 * k * k + 2.0 * k * b2 - b2) * f2k) / (f * f);
  const double poly = a2 * b2 + (a4 - 2.0 * a2 * b2 - a2) * k + (2.0 * a2 - 3.0 * a4) * k * k +
                      a4 * k * k * k;
  const double bracket = b2 + a2 * k * k - d * d * poly * f2k;
  // 1 / f^(3-k) = f^k / f^3
  const double tk2 = l.sigma * a * b * d * fk / (f * f * f) * bracket;
  return finish(kappa_sq, tk2);
}

KappaTau kappa_tau_quarter(const Loxodrome& lox, double t) {
  if (!is_quarter_angle(lox.spec().psi)) {
    throw Error(ErrorCode::NotApplicable, "quarter-angle formulas need psi = pi/4");
  }
  const Local l = local_at(lox, t);
  const double f = l.j.f, f1 = l.j.f1, f2 = l.j.f2, f3 = l.j.f3;
  const double f1s = f1 * f1, w2 = l.w2;
  const double inner = f2 * f2 / w2 + (1.0 + f1s) / (f * f) - 2.0 * f2 / f;
  const double kappa_sq = 0.25 * inner;
  const double bracket = w2 * w2 * (1.0 + f1s) - f * f2 * w2 * (3.0 - f1s) +
                         f * f * f2 * f2 * (1.0 - 3.0 * f1s) + f * f * f * f2 * f2 * f2 -
                         2.0 * f * f * f1 * f3 * w2;
  const double tk2 =
      l.sigma * lox.spec().epsilon * bracket / (8.0 * f * f * f * w2 * std::sqrt(w2));
  return finish(kappa_sq, tk2);
}

KappaTau signed_kappa_tau_minimal(const Loxodrome& lox, double t) {
  if (lox.surface().kind() != ProfileKind::Minimal) {
    throw Error(ErrorCode::KindMismatch, "signed minimal forms need a minimal surface");
  }
  if (!is_quarter_angle(lox.spec().psi)) {
    throw Error(ErrorCode::NotApplicable, "signed minimal forms need psi = pi/4");
  }
  const Local l = local_at(lox, t);
  KappaTau out;
  out.kappa = l.j.f1 / (std::numbers::sqrt2 * l.j.f);
  out.tau = lox.spec().epsilon * l.j.g1 / l.j.f;
  return out;
}

double normal_curvature(const Loxodrome& lox, double t) {
  const Local l = local_at(lox, t);
  const double kappa1 = -l.j.f2 / l.j.g1;
  const double kappa2 = l.j.g1 / l.j.f;
  return l.a * l.a * kappa1 + l.b * l.b * kappa2;
}

Vec3 shape_operator_on_tangent(const Loxodrome& lox, double t) {
  const Local l = local_at(lox, t);
  const double theta = theta_of_t(lox, t);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double g2 = -l.sigma * l.j.f1 * l.j.f2 / std::sqrt(l.w2);
  const double turn = l.b * l.j.g1 / l.j.f;
  // N = (-g' cos, -g' sin, f'), differentiated along s' = a, theta' = b/f.
  return {l.a * g2 * ct - turn * st, l.a * g2 * st + turn * ct, -l.a * l.j.f2};
}

double normal_curvature_shape(const Loxodrome& lox, double t) {
  return dot(shape_operator_on_tangent(lox, t), curve_jet(lox, t).p1);
}

Interval sample_range(const Loxodrome& lox) {
  const Interval& d = lox.t_domain();
  if (std::isfinite(d.lo) && std::isfinite(d.hi)) {
    return {d.lo + 0.1 * d.length(), d.hi - 0.1 * d.length()};
  }
  const double b = lox.spec().b();
  const double radius = lox.surface().local_jet(lox.spec().c).f;
  const double half_period = std::numbers::pi * radius / std::abs(b);
  return {lox.spec().t0 - half_period, lox.spec().t0 + half_period};
}

std::vector<double> sample_ts(const Interval& range, int count) {
  if (count < 2) throw Error(ErrorCode::InvalidParams, "need at least two samples");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        (i == count - 1) ? range.hi : range.lo + range.length() * i / (count - 1);
  }
  return out;
}

}  // namespace loxo
