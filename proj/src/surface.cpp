#include "loxo/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/ellint_2.hpp>

#include "loxo/error.hpp"

namespace loxo {

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Flat: return "flat";
    case ProfileKind::SphericalK: return "spherical";
    case ProfileKind::HyperbolicK: return "hyperbolic";
    case ProfileKind::Minimal: return "minimal";
    case ProfileKind::Crpc: return "crpc";
    case ProfileKind::Generic: return "generic";
  }
  return "unknown";
}

namespace {

constexpr double kCaseTol = 1e-14;
constexpr int kDomainGrid = 4001;
constexpr double kCrpcMaxStep = 0.02;
constexpr double kHeightQuadTol = 1e-12;

enum class HeightMode { Flat, Minimal, Elliptic, Exponential, Quadrature };

bool nearly_zero(double v, double scale = 1.0) {
  return std::abs(v) <= kCaseTol * std::max(1.0, std::abs(scale));
}

// 1 - v^2 without cancellation for |v| close to 1.
double one_minus_sq(double v) { return (1.0 - v) * (1.0 + v); }

}  // namespace

struct ProfileModel::Impl {
  ProfileParams params;
  ProfileKind kind = ProfileKind::Flat;
  int g_branch = 1;
  Interval domain;

  // Crpc profile pieces on either side of s0.
  std::optional<numerics::DenseSolution> forward;
  std::optional<numerics::DenseSolution> backward;
  double crpc_s0 = 0.0;

  HeightMode height_mode = HeightMode::Quadrature;
  // Elliptic mode: g = sign * (E(omega s - phase | k) - E(-phase | k)) / omega.
  double omega = 1.0, phase = 0.0, modulus = 0.0, e_ref = 0.0;
  // Exponential mode: A = +-B hyperbolic profiles.
  double exp_sign = 1.0, exp_ref = 0.0;
  // Quadrature mode: g(s) = g_mid + sign * int_{s_mid}^{s} sqrt(1 - f'^2).
  double s_mid = 0.0, g_mid = 0.0;

  // f, f', f'', f''' without domain checks.
  numerics::Jet raw(double s) const;
  // 1 - f'^2 evaluated stably.
  double slope_gap(double s) const;
  double exp_antiderivative(double s) const;
};

numerics::Jet ProfileModel::Impl::raw(double s) const {
  numerics::Jet j;
  switch (kind) {
    case ProfileKind::Flat: {
      const auto& p = std::get<FlatParams>(params);
      j = {p.A * s + p.B, p.A, 0.0, 0.0};
      break;
    }
    case ProfileKind::SphericalK: {
      const auto& p = std::get<SphericalKParams>(params);
      const double w = std::sqrt(p.K0);
      const double c = std::cos(w * s), sn = std::sin(w * s);
      j.value = p.A * c + p.B * sn;
      j.d1 = w * (-p.A * sn + p.B * c);
      j.d2 = -p.K0 * j.value;
      j.d3 = -p.K0 * j.d1;
      break;
    }
    case ProfileKind::HyperbolicK: {
      const auto& p = std::get<HyperbolicKParams>(params);
      const double w = std::sqrt(-p.K0);
      // A cosh x + B sinh x in exponential form avoids cancellation for large |x|.
      const double ep = 0.5 * (p.A + p.B) * std::exp(w * s);
      const double em = 0.5 * (p.A - p.B) * std::exp(-w * s);
      j.value = ep + em;
      j.d1 = w * (ep - em);
      j.d2 = -p.K0 * j.value;
      j.d3 = -p.K0 * j.d1;
      break;
    }
    case ProfileKind::Minimal: {
      const auto& p = std::get<MinimalParams>(params);
      const double u = p.n * (s + p.m);
      const double q = 1.0 + u * u;
      const double rq = std::sqrt(q);
      j.value = rq / p.n;
      j.d1 = u / rq;
      j.d2 = p.n / (q * rq);
      j.d3 = -3.0 * p.n * p.n * u / (q * q * rq);
      break;
    }
    case ProfileKind::Crpc: {
      const auto& p = std::get<CrpcParams>(params);
      const auto& sol = (s >= crpc_s0) ? *forward : *backward;
      j.value = sol.eval(s, 0);
      j.d1 = sol.eval(s, 1);
      // f'' from f f'' = k (f'^2 - 1); differentiating that relation gives
      // f' f'' + f f''' = 2k f' f'', i.e. f''' = (2k - 1) f' f'' / f.
      j.d2 = p.k * (j.d1 * j.d1 - 1.0) / j.value;
      j.d3 = (2.0 * p.k - 1.0) * j.d1 * j.d2 / j.value;
      break;
    }
    case ProfileKind::Generic:
      j = std::get<GenericParams>(params).jet(s);
      break;
  }
  return j;
}

double ProfileModel::Impl::slope_gap(double s) const {
  if (kind == ProfileKind::Minimal) {
    const auto& p = std::get<MinimalParams>(params);
    const double u = p.n * (s + p.m);
    return 1.0 / (1.0 + u * u);
  }
  return one_minus_sq(raw(s).d1);
}

double ProfileModel::Impl::exp_antiderivative(double s) const {
  // For f = A e^{+-omega s}: d/ds (w - atanh w) / omega = w with
  // w = sqrt(1 - omega^2 f^2); atanh w = ln((1 + w) / (omega f)).
  const double f = raw(s).value;
  const double w = std::sqrt(std::max(0.0, slope_gap(s)));
  return exp_sign * (w - std::log((1.0 + w) / (omega * f))) / omega;
}

// ---------------------------------------------------------------------------

ProfileKind ProfileModel::kind() const { return impl_->kind; }
const ProfileParams& ProfileModel::params() const { return impl_->params; }
int ProfileModel::g_branch() const { return impl_->g_branch; }
const Interval& ProfileModel::domain() const { return impl_->domain; }

ProfileJet ProfileModel::local_jet(double s) const {
  if (!contains(s)) throw Error(ErrorCode::OutOfDomain, "s outside the profile domain", s);
  const numerics::Jet r = impl_->raw(s);
  ProfileJet j;
  j.f = r.value;
  j.f1 = r.d1;
  j.f2 = r.d2;
  j.f3 = r.d3;
  j.g = std::numeric_limits<double>::quiet_NaN();
  j.g1 = impl_->g_branch * std::sqrt(std::max(0.0, impl_->slope_gap(s)));
  return j;
}

double ProfileModel::height(double s) const {
  if (!contains(s)) throw Error(ErrorCode::OutOfDomain, "s outside the profile domain", s);
  const Impl& m = *impl_;
  const double sign = m.g_branch;
  switch (m.height_mode) {
    case HeightMode::Flat: {
      const auto& p = std::get<FlatParams>(m.params);
      return sign * std::sqrt(one_minus_sq(p.A)) * s;
    }
    case HeightMode::Minimal: {
      const auto& p = std::get<MinimalParams>(m.params);
      return sign * std::asinh(p.n * (s + p.m)) / p.n + p.r;
    }
    case HeightMode::Elliptic:
      return sign * (boost::math::ellint_2(m.modulus, m.omega * s - m.phase) - m.e_ref) / m.omega;
    case HeightMode::Exponential:
      return sign * (m.exp_antiderivative(s) - m.exp_ref);
    case HeightMode::Quadrature: {
      const auto integrand = [&m](double x) { return std::sqrt(std::max(0.0, m.slope_gap(x))); };
      return m.g_mid + sign * numerics::integrate_fixed(integrand, m.s_mid, s);
    }
  }
  return 0.0;
}

ProfileJet ProfileModel::jet(double s) const {
  ProfileJet j = local_jet(s);
  j.g = height(s);
  return j;
}

std::optional<double> ProfileModel::constant_curvature() const {
  switch (impl_->kind) {
    case ProfileKind::Flat: return 0.0;
    case ProfileKind::SphericalK: return std::get<SphericalKParams>(impl_->params).K0;
    case ProfileKind::HyperbolicK: return std::get<HyperbolicKParams>(impl_->params).K0;
    default: return std::nullopt;
  }
}

std::optional<std::pair<double, double>> ProfileModel::crpc_constants() const {
  switch (impl_->kind) {
    case ProfileKind::Crpc: {
      const auto& p = std::get<CrpcParams>(impl_->params);
      return std::pair{p.k, p.d};
    }
    case ProfileKind::Minimal:
      return std::pair{-1.0, 1.0 / std::get<MinimalParams>(impl_->params).n};
    case ProfileKind::SphericalK: {
      const auto& p = std::get<SphericalKParams>(impl_->params);
      if (std::abs(p.K0 * (p.A * p.A + p.B * p.B) - 1.0) <= 1e-12) {
        return std::pair{1.0, std::sqrt(p.K0)};
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

namespace {

bool admissible(const ProfileModel::Impl& m, double s) {
  const numerics::Jet j = m.raw(s);
  if (!std::isfinite(j.value) || !std::isfinite(j.d1) || !std::isfinite(j.d2) ||
      !std::isfinite(j.d3)) {
    return false;
  }
  return j.value >= kMinRadius && m.slope_gap(s) >= kMinSlopeGap;
}

// Maximal admissible interval inside `window` containing the admissible grid
// point closest to `anchor`; edges refined by bisection.
Interval admissible_interval(const ProfileModel::Impl& m, const Interval& window, double anchor) {
  const double step = window.length() / (kDomainGrid - 1);
  const auto at = [&](int i) { return i == kDomainGrid - 1 ? window.hi : window.lo + i * step; };
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kDomainGrid; ++i) {
    const double d = std::abs(at(i) - anchor);
    if (d < best_dist && admissible(m, at(i))) {
      best = i;
      best_dist = d;
    }
  }
  if (best < 0) throw Error(ErrorCode::EmptyDomain, "no admissible s in the window");

  const auto refine = [&](double good, double bad) {
    for (int it = 0; it < 200 && good != bad; ++it) {
      const double mid = 0.5 * (good + bad);
      if (mid == good || mid == bad) break;
      if (admissible(m, mid)) good = mid; else bad = mid;
    }
    return good;
  };
  int lo = best;
  while (lo > 0 && admissible(m, at(lo - 1))) --lo;
  int hi = best;
  while (hi < kDomainGrid - 1 && admissible(m, at(hi + 1))) ++hi;
  Interval out;
  out.lo = (lo == 0) ? window.lo : refine(at(lo), at(lo - 1));
  out.hi = (hi == kDomainGrid - 1) ? window.hi : refine(at(hi), at(hi + 1));
  if (!(out.hi > out.lo)) throw Error(ErrorCode::EmptyDomain, "admissible set is a single point");
  return out;
}

void validate(const ProfileParams& params) {
  std::visit(
      [](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FlatParams>) {
          if (!std::isfinite(p.A) || !std::isfinite(p.B) || std::abs(p.A) > 1.0) {
            throw Error(ErrorCode::InvalidParams, "flat profile requires |A| <= 1");
          }
        } else if constexpr (std::is_same_v<P, SphericalKParams>) {
          if (!(p.K0 > 0.0) || !std::isfinite(p.K0) || !std::isfinite(p.A) || !std::isfinite(p.B)) {
            throw Error(ErrorCode::InvalidParams, "spherical profile requires K0 > 0");
          }
        } else if constexpr (std::is_same_v<P, HyperbolicKParams>) {
          if (!(p.K0 < 0.0) || !std::isfinite(p.K0) || !std::isfinite(p.A) || !std::isfinite(p.B)) {
            throw Error(ErrorCode::InvalidParams, "hyperbolic profile requires K0 < 0");
          }
        } else if constexpr (std::is_same_v<P, MinimalParams>) {
          if (p.n == 0.0 || !std::isfinite(p.n) || !std::isfinite(p.m) || !std::isfinite(p.r)) {
            throw Error(ErrorCode::InvalidParams, "minimal profile requires n != 0");
          }
        } else if constexpr (std::is_same_v<P, CrpcParams>) {
          if (p.k == 0.0 || !std::isfinite(p.k)) {
            throw Error(ErrorCode::InvalidParams, "CRPC profile requires k != 0");
          }
          if (!(p.d > 0.0) || !std::isfinite(p.d)) {
            throw Error(ErrorCode::InvalidParams, "CRPC profile requires d > 0");
          }
          if (!(p.f0 > 0.0) || !std::isfinite(p.f0) || !std::isfinite(p.s0)) {
            throw Error(ErrorCode::InvalidParams, "CRPC profile requires f(s0) > 0");
          }
          if (p.slope_sign != 1 && p.slope_sign != -1) {
            throw Error(ErrorCode::InvalidParams, "CRPC slope sign must be +1 or -1");
          }
          if (p.d * p.d * std::pow(p.f0, 2.0 * p.k) > 1.0 + 1e-14) {
            throw Error(ErrorCode::InvalidParams, "CRPC requires d^2 f(s0)^(2k) <= 1");
          }
          if (!(p.tol > 0.0)) throw Error(ErrorCode::InvalidParams, "CRPC tolerance must be positive");
        } else {
          if (!p.jet) throw Error(ErrorCode::InvalidParams, "generic profile requires a jet callable");
        }
      },
      params);
}

void build_crpc(ProfileModel::Impl& m, const Interval& window) {
  const auto& p = std::get<CrpcParams>(m.params);
  if (!window.contains(p.s0)) throw Error(ErrorCode::InvalidParams, "CRPC s0 outside the window");
  const double gap0 = std::max(0.0, 1.0 - p.d * p.d * std::pow(p.f0, 2.0 * p.k));
  const numerics::State y0{p.f0, p.slope_sign * std::sqrt(gap0)};
  const double k = p.k;
  // Second-order form f'' = k (f'^2 - 1) / f; its first integral is
  // f'^2 + d^2 f^(2k) = 1, so it stays regular where f' changes sign.
  const numerics::OdeRhs rhs = [k](double, const numerics::State& y) {
    return numerics::State{y[1], k * (y[1] * y[1] - 1.0) / y[0]};
  };
  numerics::IvpOptions opts;
  opts.tol = p.tol;
  opts.max_step = kCrpcMaxStep;
  opts.truncate_on_exit = true;
  opts.guard = [](double, const numerics::State& y) {
    return std::isfinite(y[0]) && std::isfinite(y[1]) && y[0] >= kMinRadius &&
           one_minus_sq(y[1]) >= kMinSlopeGap;
  };
  try {
    m.forward = numerics::solve_ivp(rhs, p.s0, y0, window.hi, opts);
    m.backward = numerics::solve_ivp(rhs, p.s0, y0, window.lo, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainExit) {
      throw Error(ErrorCode::EmptyDomain, "CRPC initial state is not admissible");
    }
    throw;
  }
  m.crpc_s0 = p.s0;
  m.domain = {m.backward->s_min(), m.forward->s_max()};
  if (!(m.domain.hi > m.domain.lo)) throw Error(ErrorCode::EmptyDomain, "CRPC profile has no extent");
}

void setup_height(ProfileModel::Impl& m) {
  const double anchor = std::clamp(0.0, m.domain.lo, m.domain.hi);
  switch (m.kind) {
    case ProfileKind::Flat: m.height_mode = HeightMode::Flat; return;
    case ProfileKind::Minimal: m.height_mode = HeightMode::Minimal; return;
    case ProfileKind::SphericalK: {
      const auto& p = std::get<SphericalKParams>(m.params);
      const double r2 = p.A * p.A + p.B * p.B;
      // f = R cos(omega s - phase): 1 - f'^2 = 1 - K0 R^2 sin^2(omega s - phase),
      // an incomplete elliptic integral of the second kind when K0 R^2 <= 1.
      if (p.K0 * r2 <= 1.0) {
        m.height_mode = HeightMode::Elliptic;
        m.omega = std::sqrt(p.K0);
        m.phase = std::atan2(p.B, p.A);
        m.modulus = std::min(1.0, std::sqrt(p.K0 * r2));
        m.e_ref = boost::math::ellint_2(m.modulus, -m.phase);
        return;
      }
      break;
    }
    case ProfileKind::HyperbolicK: {
      const auto& p = std::get<HyperbolicKParams>(m.params);
      if (!nearly_zero(p.A, 0.0) && (nearly_zero(p.A - p.B, p.A) || nearly_zero(p.A + p.B, p.A))) {
        m.height_mode = HeightMode::Exponential;
        m.omega = std::sqrt(-p.K0);
        m.exp_sign = nearly_zero(p.A - p.B, p.A) ? 1.0 : -1.0;
        m.exp_ref = m.exp_antiderivative(anchor);
        return;
      }
      break;
    }
    default: break;
  }
  m.height_mode = HeightMode::Quadrature;
  m.s_mid = m.domain.mid();
  const auto integrand = [&m](double x) { return std::sqrt(std::max(0.0, m.slope_gap(x))); };
  m.g_mid = m.g_branch * numerics::integrate_adaptive(integrand, anchor, m.s_mid, kHeightQuadTol).value;
}

void probe_generic(const ProfileModel::Impl& m) {
  constexpr int kProbes = 64;
  for (int i = 0; i < kProbes; ++i) {
    const double s = m.domain.lo + (i + 0.5) * m.domain.length() / kProbes;
    const numerics::Jet j = m.raw(s);
    if (!(j.value > 0.0) || !(m.slope_gap(s) >= 0.0)) {
      throw Error(ErrorCode::InvalidParams, "generic profile violates f > 0, |f'| < 1", s);
    }
    // The jet must be a jet: compare f' and f'' with differences of f.
    const numerics::Jet fd = numerics::finite_diff_jet([&m](double x) { return m.raw(x).value; }, s, 1e-5);
    const double scale = 1.0 + std::abs(j.value) + std::abs(j.d2);
    if (std::abs(fd.d1 - j.d1) > 1e-6 * scale || std::abs(fd.d2 - j.d2) > 1e-4 * scale) {
      throw Error(ErrorCode::InvalidParams, "generic jet derivatives are inconsistent with f", s);
    }
  }
}

}  // namespace

ProfileModel build_profile(const ProfileParams& params, const BuildOptions& options) {
  validate(params);
  if (options.g_branch != 1 && options.g_branch != -1) {
    throw Error(ErrorCode::InvalidParams, "g_branch must be +1 or -1");
  }
  const Interval& w = options.window;
  if (!std::isfinite(w.lo) || !std::isfinite(w.hi) || !(w.hi > w.lo)) {
    throw Error(ErrorCode::InvalidParams, "window must be a finite interval with lo < hi");
  }
  auto impl = std::make_shared<ProfileModel::Impl>();
  impl->params = params;
  impl->kind = static_cast<ProfileKind>(params.index());
  impl->g_branch = options.g_branch;

  if (impl->kind == ProfileKind::Crpc) {
    build_crpc(*impl, w);
  } else {
    impl->domain = admissible_interval(*impl, w, std::clamp(0.0, w.lo, w.hi));
    if (impl->kind == ProfileKind::Generic) probe_generic(*impl);
  }
  setup_height(*impl);

  ProfileModel model;
  model.impl_ = std::move(impl);
  return model;
}

Vec3 surface_point(const ProfileModel& model, double s, double theta) {
  const double f = model.local_jet(s).f;
  return {f * std::cos(theta), f * std::sin(theta), model.height(s)};
}

Vec3 unit_normal(const ProfileModel& model, double s, double theta) {
  const ProfileJet j = model.local_jet(s);
  return {-j.g1 * std::cos(theta), -j.g1 * std::sin(theta), j.f1};
}

SurfaceCurvatures surface_curvatures(const ProfileModel& model, double s) {
  const ProfileJet j = model.local_jet(s);
  if (one_minus_sq(j.f1) < kMinSlopeGap) {
    throw Error(ErrorCode::UmbilicPoleSingularity, "1 - f'^2 below threshold", s);
  }
  SurfaceCurvatures c;
  c.kappa1 = -j.f2 / j.g1;
  c.kappa2 = j.g1 / j.f;
  c.gauss_K = -j.f2 / j.f;
  c.mean_H = (1.0 - j.f * j.f2 - j.f1 * j.f1) / (2.0 * j.f * j.g1);
  return c;
}

}  // namespace loxo
