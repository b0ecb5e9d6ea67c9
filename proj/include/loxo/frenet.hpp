#pragma once

// Frenet apparatus of a space curve from finite differences only. Used as the
// independent reference for every closed-form curvature and torsion.

#include <functional>
#include <span>

#include "loxo/vec3.hpp"

namespace loxo {

using Curve = std::function<Vec3(double)>;

struct FrenetApparatus {
  Vec3 T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
  bool valid_tau = true;  // false when |a' x a''| < 1e-10
};

inline constexpr double kDegenerateSpeed = 1e-10;
inline constexpr double kDegenerateBinormal = 1e-10;

/// Default first-derivative step at t.
double default_frenet_step(double t);

/// kappa = |a' x a''| / |a'|^3, tau = det(a', a'', a''') / |a' x a''|^2.
/// Central stencils (h, 10h, 40h for d1, d2, d3) per component,
/// Richardson-extrapolated over h, h/2, h/4. Throws DegenerateVelocity.
FrenetApparatus frenet_numeric(const Curve& curve, double t, double h);
// Default step divided by the local frame rotation rate when that exceeds 1.
FrenetApparatus frenet_numeric(const Curve& curve, double t);

/// Same, single stencil (no extrapolation): the raw second-order estimate.
FrenetApparatus frenet_plain(const Curve& curve, double t, double h);

/// Richardson-extrapolated central difference for a'(t).
Vec3 numeric_velocity(const Curve& curve, double t);

/// max | |a'(t)| - 1 | over the samples.
double unit_speed_residual(const Curve& curve, std::span<const double> ts);

}  // namespace loxo
