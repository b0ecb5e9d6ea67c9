#pragma once

// Numerical kernels shared by the surface, loxodrome and oracle modules:
// adaptive quadrature, a fixed composite rule that is smooth in its
// endpoints, an embedded Runge-Kutta integrator with dense output, and
// central finite differences.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace loxo::numerics {

using ScalarFn = std::function<double(double)>;

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr double kDefaultOdeTol = 1e-10;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  int evaluations = 0;
  bool converged = true;  // false: subdivision limit hit (ToleranceNotMet)
};

/// Adaptive 15/7-point Gauss-Kronrod quadrature of `integrand` over [a, b].
/// a > b is allowed and flips the sign. Throws NonFiniteIntegrand if the
/// integrand returns NaN/inf. When the subdivision limit is reached the best
/// estimate is returned with `converged == false`.
QuadratureResult integrate_adaptive(const ScalarFn& integrand, double a, double b,
                                    double tol = kDefaultQuadTol);

/// Composite 20-point Gauss-Legendre rule on `panels` equal panels of [a, b].
/// The node layout scales with the interval, so the result is a smooth
/// function of the endpoints; use it where the integral is later
/// differentiated numerically.
double integrate_fixed(const ScalarFn& integrand, double a, double b, int panels = 24);

// ---------------------------------------------------------------------------
// Initial value problems

using State = std::vector<double>;
using OdeRhs = std::function<State(double, const State&)>;
/// Admissibility test on (s, state); returning false ends the integration.
using StateGuard = std::function<bool(double, const State&)>;

struct IvpOptions {
  double tol = kDefaultOdeTol;
  double max_step = 0.0;  // 0: |s_end - s0| / 64
  int max_steps = 200000;
  StateGuard guard;
  /// When the guard trips: true truncates the solution at the last admissible
  /// point; false throws DomainExit carrying that point.
  bool truncate_on_exit = false;
};

/// Piecewise quintic Hermite interpolant through the accepted Runge-Kutta
/// steps (value, first and second derivative matched at every knot).
class DenseSolution {
 public:
  DenseSolution() = default;

  double s_min() const;
  double s_max() const;
  double tolerance() const { return tol_; }
  std::size_t dimension() const { return dim_; }
  std::size_t knot_count() const { return knots_.size(); }
  bool truncated() const { return truncated_; }

  /// State at s; throws OutOfDomain outside [s_min, s_max].
  State eval(double s) const;
  double eval(double s, std::size_t component) const;

 private:
  friend DenseSolution solve_ivp(const OdeRhs&, double, const State&, double, const IvpOptions&);

  struct Knot {
    double s;
    State y, dy, ddy;
  };
  std::size_t locate(double s) const;

  std::vector<Knot> knots_;  // sorted by increasing s
  std::size_t dim_ = 0;
  double tol_ = 0.0;
  bool truncated_ = false;
};

/// Dormand-Prince 5(4) integration of y' = rhs(s, y) from s0 to s_end (either
/// direction). Throws StiffOrSingular on step-size underflow or non-finite
/// rhs, DomainExit when the guard trips and truncation is off.
DenseSolution solve_ivp(const OdeRhs& rhs, double s0, const State& state0, double s_end,
                        const IvpOptions& options = {});

// ---------------------------------------------------------------------------
// Finite differences

struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

/// Step actually used for the k-th derivative (k = 1..3) given the
/// first-derivative step h: d2 and d3 use stencils widened to
/// max(10 h, eps^(1/(k+2)) * scale) to keep cancellation below truncation.
double widened_step(int order, double h, double scale);

/// Second-order central differences: d1 and d2 on 3-point stencils, d3 on
/// the 4-point stencil {-2,-1,+1,+2}. `h` is the first-derivative step.
Jet finite_diff_jet(const ScalarFn& func, double t, double h);

/// Same with h = eps^(1/3) * max(1, |t|).
Jet finite_diff_jet(const ScalarFn& func, double t);

}  // namespace loxo::numerics
