#pragma once

// Arc-length loxodromes alpha(t) = Phi(s(t), theta(t)) with
// s(t) = a t + c and theta' = b / f(s(t)), a = cos psi, b = eps sin psi.

#include <string_view>
#include <vector>

#include "loxo/surface.hpp"
#include "loxo/vec3.hpp"

namespace loxo {

struct LoxodromeSpec {
  double psi = 0.0;      // angle with the meridians, [0, pi]
  int epsilon = 1;       // +-1
  double c = 0.0;        // s(t) = a t + c
  double t0 = 0.0;       // theta(t0) = theta0
  double theta0 = 0.0;

  /// cos(psi), snapped to exactly 0 at psi = pi/2.
  double a() const;
  /// epsilon sin(psi), snapped to exactly 0 at psi = 0 and pi.
  double b() const;
};

double s_of_t(const LoxodromeSpec& spec, double t);

/// Which antiderivative of b / f(s(t)) is in use.
enum class ThetaCase {
  Meridian,            // b = 0
  Parallel,            // a = 0
  FlatLog,             // K = 0, A != 0
  FlatLinear,          // K = 0, A = 0 (cylinder)
  SphericalLogTan,     // K > 0, A = 0
  SphericalArctanh,    // K > 0, A != 0
  HyperbolicLogTanh,   // K < 0, A = 0
  HyperbolicArctan,    // K < 0, B^2 < A^2
  HyperbolicArctanh,   // K < 0, A^2 < B^2, A != 0
  HyperbolicExp,       // K < 0, A = B (Beltrami)
  Minimal,             // catenoid
  Numeric,             // quadrature of b / f
};

std::string_view to_string(ThetaCase c);

struct LoxodromeOptions {
  bool allow_numeric = true;   // false: ClosedFormCaseGap instead of falling back
  bool force_numeric = false;  // use quadrature even when a closed form exists
  double quad_tol = 1e-12;
};

class Loxodrome {
 public:
  const ProfileModel& surface() const { return surface_; }
  const LoxodromeSpec& spec() const { return spec_; }
  ThetaCase theta_case() const { return case_; }
  bool closed_form() const { return case_ != ThetaCase::Numeric; }
  /// Parameter interval mapped into the surface domain; unbounded when a = 0.
  const Interval& t_domain() const { return t_domain_; }
  bool contains(double t) const { return t_domain_.contains(t); }
  double quad_tol() const { return quad_tol_; }

 private:
  friend Loxodrome make_loxodrome(const ProfileModel&, const LoxodromeSpec&, const LoxodromeOptions&);
  friend double theta_of_t(const Loxodrome&, double);

  double antiderivative(double t) const;

  ProfileModel surface_;
  LoxodromeSpec spec_;
  ThetaCase case_ = ThetaCase::Numeric;
  Interval t_domain_;
  double quad_tol_ = 1e-12;
  double theta_ref_ = 0.0;  // antiderivative at t0
  double parallel_radius_ = 0.0;
};

/// Throws InvalidParams (psi, epsilon or t0 out of range), EmptyTDomain,
/// ClosedFormCaseGap.
Loxodrome make_loxodrome(const ProfileModel& surface, const LoxodromeSpec& spec,
                         const LoxodromeOptions& options = {});

/// theta(t) = theta0 + eps sin(psi) * integral_{t0}^{t} dxi / f(s(xi)).
double theta_of_t(const Loxodrome& lox, double t);
/// Same integral by adaptive quadrature regardless of the closed form.
double theta_numeric(const Loxodrome& lox, double t);

Vec3 loxodrome_point(const Loxodrome& lox, double t);

struct CurveJet {
  Vec3 p0, p1, p2, p3;  // alpha and its first three t-derivatives
};

CurveJet curve_jet(const Loxodrome& lox, double t);

struct KappaTau {
  double kappa = 0.0;
  double tau = 0.0;
  bool tau_defined = true;  // false when kappa < kKappaFloor
};

inline constexpr double kKappaFloor = 1e-12;

/// Curvature and torsion for an arbitrary profile in terms of f, f', f'', f'''.
KappaTau kappa_tau_general(const Loxodrome& lox, double t);
/// Specialization to f'' = -K0 f. KindMismatch unless the surface has constant K0.
KappaTau kappa_tau_const_k(const Loxodrome& lox, double K0, double t);
/// Specialization to kappa1 = k kappa2, f'^2 = 1 - d^2 f^(2k); uses f only.
KappaTau kappa_tau_crpc(const Loxodrome& lox, double k, double d, double t);
/// The psi = pi/4 reduction (a^2 = b^2 = 1/2). NotApplicable otherwise.
KappaTau kappa_tau_quarter(const Loxodrome& lox, double t);
/// Catenoid with psi = pi/4: kappa = f'/(sqrt2 f) carrying the sign of f'
/// (frame continued through the inflection at the neck), tau = eps g'/f.
KappaTau signed_kappa_tau_minimal(const Loxodrome& lox, double t);

/// Euler's formula a^2 kappa1 + b^2 kappa2.
double normal_curvature(const Loxodrome& lox, double t);
/// S(T) = -dN(alpha(t))/dt for the unit normal of the surface.
Vec3 shape_operator_on_tangent(const Loxodrome& lox, double t);
/// <S(T), T>, the second fundamental form on the tangent.
double normal_curvature_shape(const Loxodrome& lox, double t);

/// Middle 80% of t_domain; one revolution centred on t0 for parallels.
Interval sample_range(const Loxodrome& lox);
std::vector<double> sample_ts(const Interval& range, int count);

bool is_quarter_angle(double psi);

}  // namespace loxo
