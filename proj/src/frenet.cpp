#include "loxo/frenet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "loxo/error.hpp"

namespace loxo {

namespace {

struct Derivs {
  Vec3 d1, d2, d3;
};

// Same stencils as finite_diff_jet, but d2 and d3 use fixed multiples of h so
// that halving h halves every step and Richardson extrapolation stays exact.
Derivs raw_derivs(const Curve& curve, double t, double h) {
  const auto at = [&](double u) {
    const Vec3 p = curve(u);
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorCode::NonFiniteSample, "curve sample is not finite", u);
    }
    return p;
  };
  const double w = 10.0 * h;
  const double w3 = 40.0 * h;
  const Vec3 p0 = at(t);
  const Vec3 pw1 = at(t + w), mw1 = at(t - w);
  Derivs d;
  d.d1 = (at(t + h) - at(t - h)) * (1.0 / (2.0 * h));
  d.d2 = (pw1 - 2.0 * p0 + mw1) * (1.0 / (w * w));
  d.d3 = (at(t + 2.0 * w3) - 2.0 * at(t + w3) + 2.0 * at(t - w3) - at(t - 2.0 * w3)) *
         (1.0 / (2.0 * w3 * w3 * w3));
  return d;
}

// Each stencil has an error series in h^2, h^4, ...; two Richardson
// passes over h, h/2, h/4 cancel both leading terms.
Vec3 richardson(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 ab = (4.0 * b - a) * (1.0 / 3.0);
  const Vec3 bc = (4.0 * c - b) * (1.0 / 3.0);
  return (16.0 * bc - ab) * (1.0 / 15.0);
}

FrenetApparatus assemble(const Derivs& d, double t) {
  const double speed = norm(d.d1);
  if (!(speed >= kDegenerateSpeed)) {
    throw Error(ErrorCode::DegenerateVelocity, "curve velocity vanishes", t);
  }
  FrenetApparatus out;
  out.T = d.d1 * (1.0 / speed);
  const Vec3 cr = cross(d.d1, d.d2);
  const double crn = norm(cr);
  out.kappa = crn / (speed * speed * speed);
  if (crn < kDegenerateBinormal) {
    out.valid_tau = false;
    out.tau = std::numeric_limits<double>::quiet_NaN();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.N = {nan, nan, nan};
    out.B = {nan, nan, nan};
    return out;
  }
  out.B = cr * (1.0 / crn);
  out.N = cross(out.B, out.T);
  out.tau = det(d.d1, d.d2, d.d3) / (crn * crn);
  return out;
}

}  // namespace

double default_frenet_step(double t) { return 5e-4 * std::max(1.0, std::abs(t)); }

FrenetApparatus frenet_plain(const Curve& curve, double t, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidParams, "h must be positive");
  return assemble(raw_derivs(curve, t, h), t);
}

FrenetApparatus frenet_numeric(const Curve& curve, double t, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidParams, "h must be positive");
  const Derivs a = raw_derivs(curve, t, h);
  const Derivs b = raw_derivs(curve, t, 0.5 * h);
  const Derivs c = raw_derivs(curve, t, 0.25 * h);
  return assemble({richardson(a.d1, b.d1, c.d1), richardson(a.d2, b.d2, c.d2),
                   richardson(a.d3, b.d3, c.d3)},
                  t);
}

FrenetApparatus frenet_numeric(const Curve& curve, double t) {
  // Shrink the step where the frame turns quickly (rate sqrt(kappa^2 + tau^2)
  // from a plain pass); a |t|-scaled step alone loses digits on tight windings.
  const double h0 = default_frenet_step(t);
  const FrenetApparatus rough = frenet_plain(curve, t, h0);
  const double tau = rough.valid_tau ? rough.tau : 0.0;
  const double rate = std::sqrt(rough.kappa * rough.kappa + tau * tau);
  return frenet_numeric(curve, t, h0 / std::max(1.0, std::isfinite(rate) ? rate : 1.0));
}

Vec3 numeric_velocity(const Curve& curve, double t) {
  const double h = 0.25 * default_frenet_step(t);
  const Vec3 coarse = raw_derivs(curve, t, h).d1;
  const Vec3 fine = raw_derivs(curve, t, 0.5 * h).d1;
  return (4.0 * fine - coarse) * (1.0 / 3.0);
}

double unit_speed_residual(const Curve& curve, std::span<const double> ts) {
  double worst = 0.0;
  for (double t : ts) {
    const double speed = norm(numeric_velocity(curve, t));
    if (!(speed >= kDegenerateSpeed)) {
      throw Error(ErrorCode::DegenerateVelocity, "curve velocity vanishes", t);
    }
    worst = std::max(worst, std::abs(speed - 1.0));
  }
  return worst;
}

}  // namespace loxo
