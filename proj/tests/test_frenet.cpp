#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loxo/error.hpp"
#include "loxo/frenet.hpp"
#include "loxo/loxodrome.hpp"

using namespace loxo;

namespace {

constexpr double kPi = std::numbers::pi;

void check_frame(const FrenetApparatus& f) {
  CHECK(std::abs(norm(f.T) - 1.0) <= 1e-8);
  CHECK(std::abs(norm(f.N) - 1.0) <= 1e-8);
  CHECK(std::abs(norm(f.B) - 1.0) <= 1e-8);
  CHECK(std::abs(dot(f.T, f.N)) <= 1e-8);
  CHECK(std::abs(dot(f.T, f.B)) <= 1e-8);
  CHECK(std::abs(dot(f.N, f.B)) <= 1e-8);
  CHECK(max_abs_diff(f.B, cross(f.T, f.N)) <= 1e-8);
  CHECK(f.kappa >= 0.0);
}

}  // namespace

TEST_CASE("circle and helix") {
  const Curve circle = [](double t) { return Vec3{std::cos(t), std::sin(t), 0.0}; };
  for (double t : {0.0, 1.0, 4.0}) {
    const auto f = frenet_numeric(circle, t);
    check_frame(f);
    CHECK(std::abs(f.kappa - 1.0) <= 1e-9);
    CHECK(std::abs(f.tau) <= 1e-9);
  }
  // r = 1, pitch 1: kappa = tau = 1/2.
  const Curve helix = [](double t) { return Vec3{std::cos(t), std::sin(t), t}; };
  for (double t : {-2.0, 0.5, 3.0}) {
    const auto f = frenet_numeric(helix, t);
    check_frame(f);
    CHECK(std::abs(f.kappa - 0.5) <= 1e-9);
    CHECK(std::abs(f.tau - 0.5) <= 1e-9);
    // B = (a' x a'') / |a' x a''| from the exact derivatives.
    const Vec3 d1{-std::sin(t), std::cos(t), 1.0}, d2{-std::cos(t), -std::sin(t), 0.0};
    CHECK(max_abs_diff(f.B, normalized(cross(d1, d2))) <= 1e-8);
  }
  // Left-handed helix has negative torsion.
  const Curve left = [](double t) { return Vec3{std::cos(t), -std::sin(t), t}; };
  CHECK(frenet_numeric(left, 0.3).tau == doctest::Approx(-0.5).epsilon(1e-8));
}

TEST_CASE("second-order convergence of the plain stencil") {
  // Non-unit-speed curve with known kappa and tau: helix (2 cos t, 2 sin t, 3t)
  // gives kappa = 2/13, tau = 3/13.
  const Curve helix = [](double t) { return Vec3{2 * std::cos(t), 2 * std::sin(t), 3 * t}; };
  const double h1 = 4e-3, h2 = 1e-3;
  const auto a = frenet_plain(helix, 0.7, h1);
  const auto b = frenet_plain(helix, 0.7, h2);
  const double ek1 = std::abs(a.kappa - 2.0 / 13), ek2 = std::abs(b.kappa - 2.0 / 13);
  const double et1 = std::abs(a.tau - 3.0 / 13), et2 = std::abs(b.tau - 3.0 / 13);
  CHECK(std::log(ek1 / ek2) / std::log(h1 / h2) >= 1.8);
  CHECK(std::log(et1 / et2) / std::log(h1 / h2) >= 1.8);
  // Extrapolation improves on both.
  const auto r = frenet_numeric(helix, 0.7, h1);
  CHECK(std::abs(r.kappa - 2.0 / 13) < ek2);
  CHECK(std::abs(r.tau - 3.0 / 13) < et2);
}

TEST_CASE("cone loxodrome at t = 4") {
  const auto cone = build_profile(FlatParams{0.5, 0.0});
  const auto lox = make_loxodrome(cone, {kPi / 3, 1, 0.0, 4.0, 0.0});
  const Curve c = [&](double t) { return loxodrome_point(lox, t); };
  const auto f = frenet_numeric(c, 4.0);
  check_frame(f);
  const auto g = kappa_tau_general(lox, 4.0);
  CHECK(std::abs(f.kappa - g.kappa) <= 1e-6);
  CHECK(std::abs(f.tau - g.tau) <= 1e-6);
}

TEST_CASE("unit speed residual") {
  const auto sph = build_profile(SphericalKParams{1.0, 0.7, 0.0});
  const auto mer = make_loxodrome(sph, {0.0, 1, 0.0, 0.0, 0.4});
  const Curve cm = [&](double t) { return loxodrome_point(mer, t); };
  const auto ts = sample_ts(sample_range(mer), 50);
  CHECK(unit_speed_residual(cm, ts) <= 1e-9);

  const auto bel = build_profile(HyperbolicKParams{-1.0, 1.0, 1.0}, {1, {-3.0, 0.0}});
  const auto lox = make_loxodrome(bel, {kPi / 6, 1, 0.0, -1.0, 0.0});
  const Curve cb = [&](double t) { return loxodrome_point(lox, t); };
  const auto tb = sample_ts({-2.0 / std::cos(kPi / 6), -0.02 / std::cos(kPi / 6)}, 200);
  CHECK(unit_speed_residual(cb, tb) <= 1e-7);

  // Doubling f^2 theta'^2 means theta runs sqrt2 times too fast.
  const Curve broken = [&](double t) {
    const double s = s_of_t(lox.spec(), t);
    const double th = std::numbers::sqrt2 * theta_of_t(lox, t);
    return surface_point(bel, s, th);
  };
  const double r = unit_speed_residual(broken, tb);
  CHECK(r > 1e-2);
  CHECK(r < 0.5);
}

TEST_CASE("degenerate curves") {
  const Curve point = [](double) { return Vec3{1.0, 2.0, 3.0}; };
  try {
    frenet_numeric(point, 0.0);
    FAIL("expected DegenerateVelocity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateVelocity);
  }
  const Curve line = [](double t) { return Vec3{t, 2 * t, -t}; };
  const auto f = frenet_numeric(line, 1.0);
  CHECK_FALSE(f.valid_tau);
  CHECK(f.kappa <= 1e-10);
  CHECK(std::abs(norm(f.T) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(frenet_numeric(line, 1.0, 0.0), Error);
}
