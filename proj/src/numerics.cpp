#include "loxo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "loxo/error.hpp"

namespace loxo::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr unsigned kMaxQuadDepth = 18;

bool all_finite(const State& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

QuadratureResult integrate_adaptive(const ScalarFn& integrand, double a, double b, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParams, "quadrature tolerance must be positive");
  QuadratureResult result;
  if (a == b) {
    result.evaluations = 1;
    return result;
  }
  const auto counted = [&](double x) {
    ++result.evaluations;
    const double v = integrand(x);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteIntegrand, "integrand is not finite", x);
    }
    return v;
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  double error = 0.0;
  double l1 = 0.0;
  // Boost terminates on error <= tol * L1; rerun with a rescaled tolerance so
  // the absolute target holds when |integrand| is large.
  result.value = GK::integrate(counted, a, b, kMaxQuadDepth, tol, &error, &l1);
  if (error > tol && l1 > 1.0) {
    result.value = GK::integrate(counted, a, b, kMaxQuadDepth, tol / l1, &error, &l1);
  }
  result.error_estimate = std::abs(error);
  result.converged = result.error_estimate <= std::max(tol, 16 * kEps * l1);
  return result;
}

double integrate_fixed(const ScalarFn& integrand, double a, double b, int panels) {
  if (panels < 1) throw Error(ErrorCode::InvalidParams, "panel count must be >= 1");
  using GL = boost::math::quadrature::gauss<double, 20>;
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == panels) ? b : lo + width;
    sum += GL::integrate(integrand, lo, hi);
  }
  if (!std::isfinite(sum)) throw Error(ErrorCode::NonFiniteIntegrand, "fixed-rule integral is not finite");
  return sum;
}

// ---------------------------------------------------------------------------
// Dense output

double DenseSolution::s_min() const { return knots_.front().s; }
double DenseSolution::s_max() const { return knots_.back().s; }

std::size_t DenseSolution::locate(double s) const {
  if (knots_.empty() || s < s_min() || s > s_max() || std::isnan(s)) {
    throw Error(ErrorCode::OutOfDomain, "dense solution queried outside its span", s);
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), s,
                                   [](double v, const Knot& k) { return v < k.s; });
  const auto idx = static_cast<std::size_t>(std::distance(knots_.begin(), it));
  return std::min(std::max<std::size_t>(idx, 1), knots_.size() - 1) - 1;
}

double DenseSolution::eval(double s, std::size_t component) const {
  if (knots_.size() == 1) {
    if (s != knots_.front().s) throw Error(ErrorCode::OutOfDomain, "dense solution has a single point", s);
    return knots_.front().y[component];
  }
  const std::size_t i = locate(s);
  const Knot& k0 = knots_[i];
  const Knot& k1 = knots_[i + 1];
  const double h = k1.s - k0.s;
  const double u = (s - k0.s) / h;
  const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
  // Quintic Hermite basis on [0, 1].
  const double h00 = 1 - 10 * u3 + 15 * u4 - 6 * u5;
  const double h01 = u - 6 * u3 + 8 * u4 - 3 * u5;
  const double h02 = 0.5 * (u2 - 3 * u3 + 3 * u4 - u5);
  const double h10 = 10 * u3 - 15 * u4 + 6 * u5;
  const double h11 = -4 * u3 + 7 * u4 - 3 * u5;
  const double h12 = 0.5 * (u3 - 2 * u4 + u5);
  const std::size_t c = component;
  return k0.y[c] * h00 + h * k0.dy[c] * h01 + h * h * k0.ddy[c] * h02 + k1.y[c] * h10 +
         h * k1.dy[c] * h11 + h * h * k1.ddy[c] * h12;
}

State DenseSolution::eval(double s) const {
  State out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) out[c] = eval(s, c);
  return out;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4)

namespace {

struct StepResult {
  State y;
  State k_last;  // rhs at the new point (FSAL)
  double err = 0.0;
  bool finite = true;
};

StepResult dopri_step(const OdeRhs& rhs, double s, const State& y, const State& k1, double h,
                      double tol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const std::size_t n = y.size();
  StepResult out;
  State tmp(n);
  auto stage = [&](double cs, auto&& combine) -> State {
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * combine(i);
    State k = rhs(s + cs * h, tmp);
    if (!all_finite(k)) out.finite = false;
    return k;
  };
  const State k2 = stage(c2, [&](std::size_t i) { return a21 * k1[i]; });
  if (!out.finite) return out;
  const State k3 = stage(c3, [&](std::size_t i) { return a31 * k1[i] + a32 * k2[i]; });
  if (!out.finite) return out;
  const State k4 =
      stage(c4, [&](std::size_t i) { return a41 * k1[i] + a42 * k2[i] + a43 * k3[i]; });
  if (!out.finite) return out;
  const State k5 = stage(c5, [&](std::size_t i) {
    return a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i];
  });
  if (!out.finite) return out;
  const State k6 = stage(1.0, [&](std::size_t i) {
    return a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i];
  });
  if (!out.finite) return out;
  out.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.y[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  }
  if (!all_finite(out.y)) {
    out.finite = false;
    return out;
  }
  out.k_last = rhs(s + h, out.y);
  if (!all_finite(out.k_last)) {
    out.finite = false;
    return out;
  }
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * out.k_last[i]);
    const double scale = tol * (1.0 + std::max(std::abs(y[i]), std::abs(out.y[i])));
    err = std::max(err, std::abs(e) / scale);
  }
  out.err = err;
  return out;
}

// y'' along the trajectory from a symmetric directional difference of the
// rhs; the O(delta^2) state offsets cancel in the difference.
State second_derivative(const OdeRhs& rhs, double s, const State& y, const State& dy) {
  const std::size_t n = y.size();
  const double delta = std::cbrt(kEps) * std::max(1.0, std::abs(s));
  State yp(n), ym(n);
  for (std::size_t i = 0; i < n; ++i) {
    yp[i] = y[i] + delta * dy[i];
    ym[i] = y[i] - delta * dy[i];
  }
  const State fp = rhs(s + delta, yp);
  const State fm = rhs(s - delta, ym);
  State out(n);
  if (all_finite(fp) && all_finite(fm)) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (fp[i] - fm[i]) / (2 * delta);
    return out;
  }
  // One-sided fallback next to a singular boundary.
  const bool forward = all_finite(fp);
  const State& f1 = forward ? fp : fm;
  const double sign = forward ? 1.0 : -1.0;
  for (std::size_t i = 0; i < n; ++i) out[i] = sign * (f1[i] - dy[i]) / delta;
  return out;
}

}  // namespace

DenseSolution solve_ivp(const OdeRhs& rhs, double s0, const State& state0, double s_end,
                        const IvpOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidParams, "ODE tolerance must be positive");
  if (state0.empty()) throw Error(ErrorCode::InvalidParams, "empty initial state");
  if (options.guard && !options.guard(s0, state0)) {
    throw Error(ErrorCode::DomainExit, "initial state is not admissible", s0);
  }
  const State k0 = rhs(s0, state0);
  if (!all_finite(k0) || !all_finite(state0)) {
    throw Error(ErrorCode::StiffOrSingular, "rhs is not finite at the initial state", s0);
  }

  DenseSolution sol;
  sol.dim_ = state0.size();
  sol.tol_ = options.tol;
  std::vector<DenseSolution::Knot> knots;
  knots.push_back({s0, state0, k0, second_derivative(rhs, s0, state0, k0)});

  const double span = s_end - s0;
  if (span == 0.0) {
    sol.knots_ = std::move(knots);
    return sol;
  }
  const double dir = span > 0 ? 1.0 : -1.0;
  const double max_step = options.max_step > 0 ? options.max_step : std::abs(span) / 64;
  double h = dir * std::min(max_step, std::max(1e-4, 1e-3 * std::abs(span)));
  double s = s0;
  State y = state0;
  State k = k0;

  const auto finish_at_exit = [&](double s_exit) -> DenseSolution {
    if (!options.truncate_on_exit) {
      throw Error(ErrorCode::DomainExit, "state left the admissible region", s_exit);
    }
    sol.truncated_ = true;
    if (dir < 0) std::reverse(knots.begin(), knots.end());
    sol.knots_ = std::move(knots);
    return sol;
  };

  for (int step = 0; step < options.max_steps; ++step) {
    if (dir * (s - s_end) >= 0) break;
    if (dir * (s + h - s_end) > 0) h = s_end - s;
    const double h_floor = 64 * kEps * std::max(1.0, std::abs(s));
    if (std::abs(h) < h_floor) {
      if (options.guard) return finish_at_exit(s);
      throw Error(ErrorCode::StiffOrSingular, "step size underflow", s);
    }

    StepResult trial = dopri_step(rhs, s, y, k, h, options.tol);
    if (!trial.finite) {
      h *= 0.25;
      continue;
    }
    if (trial.err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(trial.err, -0.2));
      continue;
    }

    const double s_new = (dir * (s + h - s_end) >= 0) ? s_end : s + h;
    DenseSolution::Knot knot{s_new, trial.y, trial.k_last,
                             second_derivative(rhs, s_new, trial.y, trial.k_last)};

    if (options.guard && !options.guard(s_new, trial.y)) {
      // Bisect on the step interpolant for the last admissible point.
      DenseSolution piece;
      piece.dim_ = sol.dim_;
      piece.knots_ = dir > 0 ? std::vector<DenseSolution::Knot>{knots.back(), knot}
                             : std::vector<DenseSolution::Knot>{knot, knots.back()};
      double good = s, bad = s_new;
      for (int it = 0; it < 80 && std::abs(bad - good) > 4 * kEps * std::max(1.0, std::abs(s)); ++it) {
        const double mid = 0.5 * (good + bad);
        if (options.guard(mid, piece.eval(mid))) good = mid; else bad = mid;
      }
      if (good != s) {
        State yg = piece.eval(good);
        State kg = rhs(good, yg);
        if (all_finite(kg)) {
          knots.push_back({good, yg, kg, second_derivative(rhs, good, yg, kg)});
          s = good;
        }
      }
      return finish_at_exit(s);
    }

    knots.push_back(std::move(knot));
    s = s_new;
    y = trial.y;
    k = trial.k_last;
    const double grow = trial.err > 0 ? 0.9 * std::pow(trial.err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, grow));
    if (std::abs(h) > max_step) h = dir * max_step;
  }
  if (dir * (s - s_end) < 0) {
    throw Error(ErrorCode::StiffOrSingular, "maximum number of steps exceeded", s);
  }
  if (dir < 0) std::reverse(knots.begin(), knots.end());
  sol.knots_ = std::move(knots);
  return sol;
}

// ---------------------------------------------------------------------------
// Finite differences

double widened_step(int order, double h, double scale) {
  switch (order) {
    case 1: return h;
    case 2: return std::max(10 * h, std::pow(kEps, 0.25) * scale);
    case 3: return std::max(10 * h, std::pow(kEps, 0.2) * scale);
    default: throw Error(ErrorCode::InvalidParams, "derivative order must be 1..3");
  }
}

Jet finite_diff_jet(const ScalarFn& func, double t, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidParams, "finite-difference step must be positive");
  const double scale = std::max(1.0, std::abs(t));
  const auto sample = [&](double x) {
    const double v = func(x);
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteSample, "function sample is not finite", x);
    return v;
  };
  const double h2 = widened_step(2, h, scale);
  const double h3 = widened_step(3, h, scale);
  Jet jet;
  jet.value = sample(t);
  jet.d1 = (sample(t + h) - sample(t - h)) / (2 * h);
  jet.d2 = (sample(t + h2) - 2 * jet.value + sample(t - h2)) / (h2 * h2);
  jet.d3 = (sample(t + 2 * h3) - 2 * sample(t + h3) + 2 * sample(t - h3) - sample(t - 2 * h3)) /
           (2 * h3 * h3 * h3);
  return jet;
}

Jet finite_diff_jet(const ScalarFn& func, double t) {
  return finite_diff_jet(func, t, std::cbrt(kEps) * std::max(1.0, std::abs(t)));
}

}  // namespace loxo::numerics
