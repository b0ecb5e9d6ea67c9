#pragma once

// Rotational surfaces Phi(s, theta) = (f(s) cos theta, f(s) sin theta, g(s))
// described by an arc-length profile (f, g), f'^2 + g'^2 = 1.

#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>

#include "loxo/numerics.hpp"
#include "loxo/vec3.hpp"

namespace loxo {

/// Admissibility thresholds shared by every profile family.
inline constexpr double kMinRadius = 1e-9;
inline constexpr double kMinSlopeGap = 1e-12;  // lower bound on 1 - f'^2

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

enum class ProfileKind { Flat, SphericalK, HyperbolicK, Minimal, Crpc, Generic };

std::string_view to_string(ProfileKind kind);

/// f(s) = A s + B, |A| <= 1.
struct FlatParams {
  double A = 0.0;
  double B = 1.0;
};

/// f(s) = A cos(sqrt(K0) s) + B sin(sqrt(K0) s), K0 > 0.
struct SphericalKParams {
  double K0 = 1.0;
  double A = 1.0;
  double B = 0.0;
};

/// f(s) = A cosh(sqrt(-K0) s) + B sinh(sqrt(-K0) s), K0 < 0.
struct HyperbolicKParams {
  double K0 = -1.0;
  double A = 1.0;
  double B = 1.0;
};

/// Catenoid: f(s) = sqrt(1 + n^2 (s+m)^2) / n, g(s) = asinh(n (s+m)) / n + r.
struct MinimalParams {
  double n = 1.0;
  double m = 0.0;
  double r = 0.0;
};

/// Constant ratio of principal curvatures kappa1 = k kappa2:
/// f f'' = k (f'^2 - 1), started from f(s0) = f0 with
/// f'(s0) = slope_sign * sqrt(1 - d^2 f0^(2k)).
struct CrpcParams {
  double k = 2.0;
  double d = 1.0;
  double f0 = 1.0;
  double s0 = 0.0;
  int slope_sign = 1;
  double tol = 1e-12;
};

/// User-supplied profile: jet(s) returns f and its first three derivatives.
struct GenericParams {
  std::function<numerics::Jet(double)> jet;
};

using ProfileParams = std::variant<FlatParams, SphericalKParams, HyperbolicKParams,
                                   MinimalParams, CrpcParams, GenericParams>;

struct BuildOptions {
  int g_branch = 1;                 // sign in g' = +-sqrt(1 - f'^2)
  Interval window{-10.0, 10.0};     // candidate s-range, clamped to the admissible set
};

struct ProfileJet {
  double f = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
  double g = 0.0, g1 = 0.0;
};

struct SurfaceCurvatures {
  double kappa1 = 0.0;  // meridian direction
  double kappa2 = 0.0;  // parallel direction
  double gauss_K = 0.0;
  double mean_H = 0.0;
};

class ProfileModel {
 public:
  ProfileKind kind() const;
  const ProfileParams& params() const;
  int g_branch() const;
  const Interval& domain() const;
  bool contains(double s) const { return domain().contains(s); }

  /// f, f', f'', f''', g' at s; g is left NaN (it needs an integral for
  /// most families). Throws OutOfDomain.
  ProfileJet local_jet(double s) const;
  /// local_jet plus the height g(s).
  ProfileJet jet(double s) const;
  double height(double s) const;

  /// K0 for the constant-curvature families (Flat reports 0).
  std::optional<double> constant_curvature() const;
  /// (k, d) when kappa1 = k kappa2 holds with f'^2 = 1 - d^2 f^(2k):
  /// Crpc, Minimal (k = -1, d = 1/n), and round spheres (k = 1).
  std::optional<std::pair<double, double>> crpc_constants() const;

  struct Impl;

 private:
  friend ProfileModel build_profile(const ProfileParams&, const BuildOptions&);
  std::shared_ptr<const Impl> impl_;
};

/// Validates parameters, computes the admissible domain inside the window
/// (f >= kMinRadius and 1 - f'^2 >= kMinSlopeGap) and, for Crpc, integrates
/// the profile ODE. Throws InvalidParams or EmptyDomain.
ProfileModel build_profile(const ProfileParams& params, const BuildOptions& options = {});

inline ProfileJet profile_jet(const ProfileModel& model, double s) { return model.jet(s); }

Vec3 surface_point(const ProfileModel& model, double s, double theta);

/// (-g' cos theta, -g' sin theta, f').
Vec3 unit_normal(const ProfileModel& model, double s, double theta);

/// Principal, Gaussian and mean curvature with respect to unit_normal.
/// kappa1 = -f''/g', kappa2 = g'/f; for the default branch g' = +sqrt(1-f'^2)
/// these are -f''/sqrt(1-f'^2) and sqrt(1-f'^2)/f.
SurfaceCurvatures surface_curvatures(const ProfileModel& model, double s);

}  // namespace loxo
