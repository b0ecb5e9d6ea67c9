#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "loxo/error.hpp"
#include "loxo/frenet.hpp"
#include "loxo/loxodrome.hpp"

using namespace loxo;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::IoError;
}

std::vector<double> random_ts(const Loxodrome& lox, int n, unsigned seed) {
  const Interval r = sample_range(lox);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(r.lo, r.hi);
  std::vector<double> out(n);
  for (double& t : out) t = u(rng);
  return out;
}

Curve as_curve(const Loxodrome& lox) {
  return [&lox](double t) { return loxodrome_point(lox, t); };
}

struct Scene {
  const char* name;
  ProfileParams params;
  LoxodromeSpec spec;
  BuildOptions build{};
};

std::vector<Scene> closed_form_scenes() {
  return {
      {"flat-log", FlatParams{0.5, 0.0}, {kPi / 3, 1, 0.0, 4.0, 0.0}},
      {"flat-log-shifted", FlatParams{-0.4, 3.0}, {kPi / 5, -1, 0.7, 1.0, 0.3}},
      {"flat-linear", FlatParams{0.0, 1.0}, {kPi / 4, 1, 0.0, 0.0, 0.0}},
      {"spherical-logtan", SphericalKParams{1.0, 0.0, 1.0}, {kPi / 5, 1, 1.0, 0.0, 0.0}},
      {"spherical-arctanh", SphericalKParams{1.0, 0.6, 0.8}, {kPi / 5, 1, 0.3, 0.0, 0.0}},
      {"spherical-sphere", SphericalKParams{1.0, 1.0, 0.0}, {kPi / 4, 1, 0.0, 0.0, 0.0}},
      {"hyperbolic-logtanh", HyperbolicKParams{-1.0, 0.0, 0.5}, {kPi / 5, 1, 1.0, 0.0, 0.0}},
      {"hyperbolic-arctan", HyperbolicKParams{-1.0, 2.0, 1.0}, {kPi / 5, 1, -1.0, 0.0, 0.0}},
      {"hyperbolic-arctanh", HyperbolicKParams{-1.0, 1.0, 1.3}, {kPi / 5, 1, -0.9, 0.3, 0.0}},
      {"hyperbolic-exp", HyperbolicKParams{-1.0, 1.0, 1.0}, {kPi / 6, 1, 0.0, -1.0, 0.0}, {1, {-3.0, 0.0}}},
      {"minimal", MinimalParams{1.5, 0.3, 0.0}, {kPi / 3, -1, 0.2, 0.5, 1.0}},
  };
}

}  // namespace

TEST_CASE("s(t)") {
  CHECK(s_of_t({0.0, 1, 0.0}, 5.0) == 5.0);
  CHECK(s_of_t({kPi / 2, 1, 2.0}, 17.0) == 2.0);
  CHECK(s_of_t({kPi / 3, 1, 0.0}, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  const LoxodromeSpec sp{kPi / 2, -1};
  CHECK(sp.a() == 0.0);
  CHECK(sp.b() == -1.0);
  CHECK(LoxodromeSpec{kPi, 1}.b() == 0.0);
}

TEST_CASE("cone loxodrome of the first example") {
  const auto cone = build_profile(FlatParams{0.5, 0.0});
  const auto lox = make_loxodrome(cone, {kPi / 3, 1, 0.0, 4.0, 0.0});
  CHECK(lox.theta_case() == ThetaCase::FlatLog);
  CHECK(lox.t_domain().lo >= 0.0);
  CHECK(lox.t_domain().lo < 1e-6);
  CHECK(theta_of_t(lox, 4.0) == 0.0);
  for (double t : {0.5, 1.0, 3.0, 7.5, 12.0}) {
    const double theta = 2.0 * std::sqrt(3.0) * std::log(t / 4.0);
    CHECK(std::abs(theta_of_t(lox, t) - theta) <= 1e-12);
    const Vec3 expected{t / 4 * std::cos(theta), t / 4 * std::sin(theta), std::sqrt(3.0) / 4 * t};
    CHECK(max_abs_diff(loxodrome_point(lox, t), expected) <= 1e-12);
  }
}

TEST_CASE("cylinder theta is linear") {
  const auto cyl = build_profile(FlatParams{0.0, 1.0});
  const auto lox = make_loxodrome(cyl, {kPi / 4, 1, 0.0, 0.0, 0.25});
  CHECK(lox.theta_case() == ThetaCase::FlatLinear);
  for (double t : {-3.0, 0.0, 2.0}) CHECK(std::abs(theta_of_t(lox, t) - (t / kSqrt2 + 0.25)) <= 1e-14);
}

TEST_CASE("elongated sphere theta") {
  // theta = tan psi / (A sqrt K0) ln|sec x + tan x|, x = a sqrt(K0) t.
  const double A = kSqrt2 / 2;
  const auto m = build_profile(SphericalKParams{1.0, A, 0.0});
  const auto lox = make_loxodrome(m, {kPi / 4, 1, 0.0, 0.0, 0.0});
  for (double t : {-1.5, -0.4, 0.9, 2.0}) {
    const double x = t / kSqrt2;
    const double expected = 1.0 / A * std::log(std::abs(1.0 / std::cos(x) + std::tan(x)));
    CHECK(std::abs(theta_of_t(lox, t) - expected) <= 1e-12);
  }
}

TEST_CASE("catenoid loxodrome of the fourth example") {
  const auto cat = build_profile(MinimalParams{1.0, 0.0, 0.0});
  const auto lox = make_loxodrome(cat, {kPi / 4, 1, 0.0, 0.0, 0.0});
  CHECK(lox.theta_case() == ThetaCase::Minimal);
  for (double t : {-6.0, -1.0, 0.0, 2.5, 6.0}) {
    const double th = std::asinh(t / kSqrt2);
    const double r = std::sqrt(t * t / 2 + 1);
    CHECK(max_abs_diff(loxodrome_point(lox, t), {r * std::cos(th), r * std::sin(th), th}) <= 1e-12);
  }
}

TEST_CASE("closed forms satisfy theta' = b / f and match quadrature") {
  for (const auto& sc : closed_form_scenes()) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto m = build_profile(sc.params, sc.build);
    const auto lox = make_loxodrome(m, sc.spec);
    CHECK(lox.closed_form());
    const auto ts = random_ts(lox, 50, 17);
    for (double t : ts) {
      const auto jet = numerics::finite_diff_jet([&](double u) { return theta_of_t(lox, u); }, t);
      const double expected = sc.spec.b() / m.local_jet(s_of_t(sc.spec, t)).f;
      CHECK(std::abs(jet.d1 - expected) <= 1e-7 * std::max(1.0, std::abs(expected)));
      CHECK(std::abs(theta_of_t(lox, t) - theta_numeric(lox, t)) <= 1e-8);
    }
    CHECK(std::abs(theta_of_t(lox, sc.spec.t0) - sc.spec.theta0) <= 1e-15);
  }
}

TEST_CASE("case dispatch") {
  const auto hyp = build_profile(HyperbolicKParams{-1.0, 0.5, -0.5});
  const auto lox = make_loxodrome(hyp, {kPi / 5, 1, 0.0, 0.0});
  CHECK(lox.theta_case() == ThetaCase::Numeric);  // A = -B has no listed form

  const auto crpc = build_profile(CrpcParams{2.0, 1.0, 1.0, 0.0, 1});
  CHECK(make_loxodrome(crpc, {kPi / 5, 1, 0.3, 0.0}).theta_case() == ThetaCase::Numeric);
  LoxodromeOptions strict;
  strict.allow_numeric = false;
  CHECK(code_of([&] { make_loxodrome(crpc, {kPi / 5, 1, 0.3, 0.0}, strict); }) == ErrorCode::ClosedFormCaseGap);

  const auto sph = build_profile(SphericalKParams{1.0, 1.0, 0.0});
  LoxodromeOptions forced;
  forced.force_numeric = true;
  const auto a = make_loxodrome(sph, {kPi / 4, 1, 0.0, 0.0});
  const auto b = make_loxodrome(sph, {kPi / 4, 1, 0.0, 0.0}, forced);
  CHECK(b.theta_case() == ThetaCase::Numeric);
  for (double t : {-1.5, 0.2, 1.9}) CHECK(std::abs(theta_of_t(a, t) - theta_of_t(b, t)) <= 1e-10);
}

TEST_CASE("meridians and parallels") {
  const auto sph = build_profile(SphericalKParams{1.0, 1.0, 0.0});
  const auto mer = make_loxodrome(sph, {0.0, 1, 0.0, 0.0, 1.2});
  CHECK(mer.theta_case() == ThetaCase::Meridian);
  for (double t : {-1.0, 0.5}) {
    CHECK(theta_of_t(mer, t) == 1.2);
    const auto j = curve_jet(mer, t);
    const auto pj = sph.local_jet(t);
    CHECK(max_abs_diff(j.p1, {pj.f1 * std::cos(1.2), pj.f1 * std::sin(1.2), pj.g1}) <= 1e-15);
  }

  const auto cyl = build_profile(FlatParams{0.0, 1.0});
  for (int eps : {1, -1}) {
    const auto par = make_loxodrome(cyl, {kPi / 2, eps, 0.5, 0.0, 0.0});
    CHECK(par.theta_case() == ThetaCase::Parallel);
    CHECK(std::isinf(par.t_domain().hi));
    for (double t : {-2.0, 0.3, 5.0}) {
      const double th = theta_of_t(par, t);
      CHECK(std::abs(th - eps * t) <= 1e-14);
      const auto j = curve_jet(par, t);
      CHECK(max_abs_diff(j.p1, {-eps * std::sin(th), eps * std::cos(th), 0.0}) <= 1e-15);
      CHECK(std::abs(norm(j.p1) - 1.0) <= 1e-15);
    }
  }
  CHECK(code_of([&] { make_loxodrome(build_profile(FlatParams{0.5, 0.0}), {kPi / 2, 1, -1.0, 0.0}); }) ==
        ErrorCode::EmptyTDomain);
}

TEST_CASE("unit speed and constant angle") {
  for (const auto& sc : closed_form_scenes()) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto m = build_profile(sc.params, sc.build);
    const auto lox = make_loxodrome(m, sc.spec);
    for (double t : random_ts(lox, 100, 23)) {
      const auto j = curve_jet(lox, t);
      CHECK(std::abs(norm(j.p1) - 1.0) <= 1e-9);
      const auto pj = m.local_jet(s_of_t(sc.spec, t));
      const double th = theta_of_t(lox, t);
      CHECK(std::abs(dot(j.p1, {pj.f1 * std::cos(th), pj.f1 * std::sin(th), pj.g1}) - sc.spec.a()) <= 1e-9);
    }
  }
}

TEST_CASE("curve jet against finite differences of the curve") {
  const auto cat = build_profile(MinimalParams{1.0, 0.0, 0.0});
  const auto lox = make_loxodrome(cat, {kPi / 4, 1, 0.0, 0.0, 0.0});
  for (double t : {0.0, 1.3, -2.2}) {
    const auto j = curve_jet(lox, t);
    const Curve c = as_curve(lox);
    const auto comp = [&](int k) {
      return numerics::finite_diff_jet([&](double u) { const Vec3 p = c(u); return k == 0 ? p.x : k == 1 ? p.y : p.z; }, t, 1e-3);
    };
    const auto x = comp(0), y = comp(1), z = comp(2);
    CHECK(max_abs_diff(j.p0, {x.value, y.value, z.value}) <= 1e-14);
    CHECK(max_abs_diff(j.p1, {x.d1, y.d1, z.d1}) <= 1e-6);
    CHECK(max_abs_diff(j.p2, {x.d2, y.d2, z.d2}) <= 1e-4);
    CHECK(max_abs_diff(j.p3, {x.d3, y.d3, z.d3}) <= 1e-3);
  }
}

TEST_CASE("general formulas against the Frenet oracle") {
  auto scenes = closed_form_scenes();
  scenes.push_back({"crpc-mylar", CrpcParams{2.0, 1.0, 1.0, 0.0, 1}, {kPi / 5, 1, 0.3, 0.0}});
  scenes.push_back({"lower-branch", SphericalKParams{1.0, std::sqrt(0.5), 0.0}, {kPi / 4, 1, 0.0, 0.0}, {-1, {-10, 10}}});
  for (const auto& sc : scenes) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto m = build_profile(sc.params, sc.build);
    const auto lox = make_loxodrome(m, sc.spec);
    const Curve c = as_curve(lox);
    const Interval r = sample_range(lox);
    // Stay a little further from the domain ends where derivatives grow fast.
    for (double t : sample_ts({r.lo + 0.1 * r.length(), r.hi - 0.1 * r.length()}, 16)) {
      const auto g = kappa_tau_general(lox, t);
      // Some of these t-domains are short; keep the stencil small against them.
      const auto o = frenet_numeric(c, t, std::min(default_frenet_step(t), 5e-4 * r.length()));
      CHECK(std::abs(g.kappa - o.kappa) <= 1e-6);
      CHECK(std::abs(g.tau - o.tau) <= 1e-6 * std::max(1.0, std::abs(o.tau)));
    }
  }
}

TEST_CASE("Beltrami example curvature and torsion") {
  // kappa = sqrt(b^4 - b^2 f^2 + a^2 f^4) / (f sqrt(1 - f^2)),
  // tau = a b^3 (b^2 - 2 f^2 + f^4) / (f sqrt(1 - f^2) (b^4 - b^2 f^2 + a^2 f^4)).
  const auto m = build_profile(HyperbolicKParams{-1.0, 1.0, 1.0});
  const LoxodromeSpec spec{kPi / 6, 1, 0.0, -1.0, 0.0};
  const auto lox = make_loxodrome(m, spec);
  const double a = spec.a(), b = spec.b();
  for (double t : sample_ts({-2.3, -0.05}, 20)) {
    const double f = m.local_jet(s_of_t(spec, t)).f;
    const double q = b * b * b * b - b * b * f * f + a * a * f * f * f * f;
    const double kappa = std::sqrt(q) / (f * std::sqrt(1 - f * f));
    const double tau = a * b * b * b * (b * b - 2 * f * f + f * f * f * f) / (f * std::sqrt(1 - f * f) * q);
    const auto g = kappa_tau_general(lox, t);
    CHECK(std::abs(g.kappa - kappa) <= 1e-12 * std::max(1.0, kappa));
    CHECK(std::abs(g.tau - tau) <= 1e-12 * std::max(1.0, std::abs(tau)));
  }
  // As printed, with a^4 f^4 in the torsion denominator, the formula disagrees.
  const double f = m.local_jet(s_of_t(spec, -1.0)).f;
  const double printed = a * b * b * b * (b * b - 2 * f * f + f * f * f * f) /
                         (f * std::sqrt(1 - f * f) * (b * b * b * b - b * b * f * f + a * a * a * a * f * f * f * f));
  CHECK(std::abs(printed - kappa_tau_general(lox, -1.0).tau) > 1e-3);
}

TEST_CASE("constant-curvature specialization") {
  const std::vector<Scene> scenes = {
      {"cone", FlatParams{0.5, 0.0}, {kPi / 3, 1, 0.0, 4.0}},
      {"sphere", SphericalKParams{1.0, 1.0, 0.0}, {kPi / 4, 1, 0.0, 0.0}},
      {"oblate", SphericalKParams{2.0, 1.0, 0.3}, {kPi / 7, -1, 0.1, 0.0}},
      {"beltrami", HyperbolicKParams{-1.0, 1.0, 1.0}, {kPi / 6, 1, 0.0, -1.0}},
      {"hyperboloid", HyperbolicKParams{-0.5, 3.0, 1.0}, {2.0, 1, 0.0, 0.0}},
      {"lower", SphericalKParams{1.0, 0.6, 0.0}, {kPi / 3, 1, 0.0, 0.0}, {-1, {-10, 10}}},
  };
  for (const auto& sc : scenes) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto m = build_profile(sc.params, sc.build);
    const auto lox = make_loxodrome(m, sc.spec);
    const double K0 = *m.constant_curvature();
    for (double t : sample_ts(sample_range(lox), 32)) {
      const auto g = kappa_tau_general(lox, t);
      const auto c = kappa_tau_const_k(lox, K0, t);
      CHECK(std::abs(g.kappa - c.kappa) <= 1e-9);
      CHECK(std::abs(g.tau - c.tau) <= 1e-9);
    }
  }
  // Flat forms: kappa = |b/f| sqrt(b^2 + a^2 f'^2), tau = (a b / f) sqrt(1 - f'^2).
  const auto cone = build_profile(FlatParams{0.5, 0.0});
  const auto lox = make_loxodrome(cone, {kPi / 3, 1, 0.0, 4.0});
  const double a = 0.5, b = std::sqrt(3.0) / 2;
  for (double t : {1.0, 4.0, 9.0}) {
    const double f = t / 4;
    const auto c = kappa_tau_const_k(lox, 0.0, t);
    CHECK(std::abs(c.kappa - b / f * std::sqrt(b * b + a * a * 0.25)) <= 1e-12);
    CHECK(std::abs(c.tau - a * b / f * std::sqrt(0.75)) <= 1e-12);
  }
  // psi = 0 kills the torsion.
  const auto sph = build_profile(SphericalKParams{1.0, 1.0, 0.0});
  CHECK(kappa_tau_const_k(make_loxodrome(sph, {0.0, 1, 0.0, 0.0}), 1.0, 0.4).tau == 0.0);
  CHECK(code_of([&] { kappa_tau_const_k(lox, 1.0, 2.0); }) == ErrorCode::KindMismatch);
  const auto crpc = build_profile(CrpcParams{2.0, 1.0, 1.0, 0.0, 1});
  CHECK(code_of([&] { kappa_tau_const_k(make_loxodrome(crpc, {kPi / 5, 1, 0.3, 0.0}), 1.0, 0.0); }) ==
        ErrorCode::KindMismatch);
}

TEST_CASE("CRPC specialization") {
  const std::vector<Scene> scenes = {
      {"mylar", CrpcParams{2.0, 1.0, 1.0, 0.0, 1}, {kPi / 5, 1, 0.3, 0.0}},
      {"k=-3", CrpcParams{-3.0, 1.0, 1.5, 0.0, 1}, {kPi / 3, 1, 0.0, 0.0}},
      {"k=1/2", CrpcParams{0.5, 0.8, 1.0, 0.3, -1}, {1.1, -1, 0.2, 0.0}},
      {"catenoid", MinimalParams{2.0, 0.5, 0.0}, {kPi / 4, 1, 0.0, 0.0}},
      {"sphere", SphericalKParams{4.0, 0.5, 0.0}, {kPi / 3, 1, 0.0, 0.0}},
  };
  for (const auto& sc : scenes) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto m = build_profile(sc.params, sc.build);
    const auto lox = make_loxodrome(m, sc.spec);
    const auto [k, d] = *m.crpc_constants();
    for (double t : sample_ts(sample_range(lox), 20)) {
      const auto g = kappa_tau_general(lox, t);
      const auto c = kappa_tau_crpc(lox, k, d, t);
      CHECK(std::abs(g.kappa - c.kappa) <= 1e-9);
      CHECK(std::abs(g.tau - c.tau) <= 1e-9);
    }
  }
  // Meridian: kappa = d |k| f^(k-1), tau = 0.
  const auto mylar = build_profile(CrpcParams{2.0, 1.0, 1.0, 0.0, 1});
  const auto mer = make_loxodrome(mylar, {0.0, 1, 0.0, 0.0});
  for (double t : {-0.5, 0.0, 0.4}) {
    const double f = mylar.local_jet(t).f;
    const auto c = kappa_tau_crpc(mer, 2.0, 1.0, t);
    CHECK(std::abs(c.kappa - 2.0 * f) <= 1e-12);
    CHECK(c.tau == 0.0);
  }
  // Catenoid, psi = pi/4: kappa = |f'| / (sqrt2 f).
  const auto cat = build_profile(MinimalParams{1.0, 0.0, 0.0});
  const auto lox = make_loxodrome(cat, {kPi / 4, 1, 0.0, 0.0});
  for (double t : {-3.0, 1.0, 4.0}) {
    const auto j = cat.local_jet(t / kSqrt2);
    CHECK(std::abs(kappa_tau_crpc(lox, -1.0, 1.0, t).kappa - std::abs(j.f1) / (kSqrt2 * j.f)) <= 1e-12);
    const auto sgn = signed_kappa_tau_minimal(lox, t);
    CHECK(std::abs(sgn.kappa - j.f1 / (kSqrt2 * j.f)) <= 1e-15);
    CHECK(std::abs(sgn.tau - std::sqrt(1 - j.f1 * j.f1) / j.f) <= 1e-15);
  }
  CHECK(code_of([&] { kappa_tau_crpc(lox, 2.0, 1.0, 0.0); }) == ErrorCode::KindMismatch);
}

TEST_CASE("quarter-angle forms") {
  const std::vector<Scene> scenes = {
      {"sphere", SphericalKParams{1.0, 1.0, 0.0}, {kPi / 4, 1, 0.0, 0.0}},
      {"mylar", CrpcParams{2.0, 1.0, 1.0, 0.0, 1}, {kPi / 4, -1, 0.3, 0.0}},
      {"beltrami", HyperbolicKParams{-1.0, 1.0, 1.0}, {kPi / 4, 1, 0.0, -1.0}},
      {"catenoid", MinimalParams{1.0, 0.0, 0.0}, {kPi / 4, 1, 0.0, 0.0}},
  };
  for (const auto& sc : scenes) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto m = build_profile(sc.params);
    const auto lox = make_loxodrome(m, sc.spec);
    for (double t : sample_ts(sample_range(lox), 20)) {
      const auto g = kappa_tau_general(lox, t);
      const auto q = kappa_tau_quarter(lox, t);
      CHECK(std::abs(g.kappa - q.kappa) <= 1e-9);
      CHECK(std::abs(g.tau - q.tau) <= 1e-9);
    }
  }
  const auto cone = build_profile(FlatParams{0.5, 0.0});
  CHECK(code_of([&] { kappa_tau_quarter(make_loxodrome(cone, {kPi / 3, 1, 0.0, 4.0}), 4.0); }) ==
        ErrorCode::NotApplicable);
}

TEST_CASE("normal curvature") {
  const auto sph = build_profile(SphericalKParams{1.0, 1.0, 0.0});
  for (double psi : {0.0, 0.3, kPi / 4, 1.2, kPi / 2}) {
    const auto lox = make_loxodrome(sph, {psi, 1, 0.1, 0.0});
    for (double t : {-0.5, 0.0, 0.5}) CHECK(std::abs(normal_curvature(lox, t) - 1.0) <= 1e-12);
  }
  const auto cat = build_profile(MinimalParams{1.0, 0.0, 0.0});
  const auto mer = make_loxodrome(cat, {0.0, 1, 0.0, 0.0});
  const auto par = make_loxodrome(cat, {kPi / 2, 1, 0.8, 0.0});
  CHECK(normal_curvature(mer, 0.7) == doctest::Approx(surface_curvatures(cat, 0.7).kappa1));
  CHECK(normal_curvature(par, 3.0) == doctest::Approx(surface_curvatures(cat, 0.8).kappa2));
  const auto asym = make_loxodrome(cat, {kPi / 4, 1, 0.0, 0.0});
  for (double t : sample_ts({-6, 6}, 25)) {
    CHECK(std::abs(normal_curvature(asym, t)) <= 1e-12);
    CHECK(std::abs(normal_curvature_shape(asym, t)) <= 1e-12);
  }
  for (const auto& sc : closed_form_scenes()) {
    const std::string scene_name = sc.name;
    CAPTURE(scene_name);
    const auto lox = make_loxodrome(build_profile(sc.params, sc.build), sc.spec);
    for (double t : sample_ts(sample_range(lox), 20)) {
      CHECK(std::abs(normal_curvature(lox, t) - normal_curvature_shape(lox, t)) <= 1e-8);
    }
  }
}

TEST_CASE("input validation") {
  const auto sph = build_profile(SphericalKParams{1.0, 1.0, 0.0});
  CHECK(code_of([&] { make_loxodrome(sph, {-0.1, 1}); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { make_loxodrome(sph, {0.3, 0}); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { make_loxodrome(sph, {0.3, 1, 0.0, 100.0}); }) == ErrorCode::InvalidParams);
  const auto lox = make_loxodrome(sph, {0.3, 1, 0.0, 0.0});
  CHECK(code_of([&] { theta_of_t(lox, 10.0); }) == ErrorCode::OutOfDomain);
  CHECK(code_of([&] { curve_jet(lox, -10.0); }) == ErrorCode::OutOfDomain);
  CHECK(code_of([&] { kappa_tau_general(lox, 1.01 * lox.t_domain().hi); }) == ErrorCode::OutOfDomain);
}
