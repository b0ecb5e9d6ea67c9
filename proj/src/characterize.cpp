#include "loxo/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loxo/error.hpp"

namespace loxo {

namespace {

constexpr int kMinSamples = 8;
// Euler's formula and <S(T),T> are both exact expressions; they differ by rounding only.
constexpr double kShapeAgreementTol = 1e-8;

void require_samples(std::span<const double> ts) {
  if (static_cast<int>(ts.size()) < kMinSamples) {
    throw Error(ErrorCode::InvalidParams, "need at least 8 samples");
  }
}

CharacterizationVerdict verdict(Claim claim, double residual, double tol) {
  CharacterizationVerdict v;
  v.claim = claim;
  v.residual = residual;
  v.tolerance = tol;
  v.holds = residual <= tol;
  return v;
}

}  // namespace

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::Geodesic: return "Geodesic";
    case Claim::Circle: return "Circle";
    case Claim::GeneralHelix: return "GeneralHelix";
    case Claim::LinearKappaTauRatio: return "LinearKappaTauRatio";
    case Claim::AsymptoticCurve: return "AsymptoticCurve";
  }
  return "Unknown";
}

std::vector<double> default_samples(const Loxodrome& lox, int count) {
  return sample_ts(sample_range(lox), count);
}

CharacterizationVerdict check_special_angle(const Loxodrome& lox) {
  const auto ts = default_samples(lox);
  return check_special_angle(lox, ts);
}

CharacterizationVerdict check_special_angle(const Loxodrome& lox, std::span<const double> ts) {
  const double a = lox.spec().a();
  const double b = lox.spec().b();
  if (b == 0.0) {
    // Meridian: a geodesic iff its acceleration is normal to the surface.
    double worst = 0.0;
    for (double t : ts) {
      const CurveJet j = curve_jet(lox, t);
      const double s = s_of_t(lox.spec(), t);
      const Vec3 n = unit_normal(lox.surface(), s, theta_of_t(lox, t));
      const double geodesic = dot(j.p2, cross(n, j.p1));
      const double kappa = norm(cross(j.p1, j.p2));
      const double kappa1 = surface_curvatures(lox.surface(), s).kappa1;
      const double tau_curve = kappa > kKappaFloor ? det(j.p1, j.p2, j.p3) / (kappa * kappa) : 0.0;
      worst = std::max({worst, std::abs(geodesic), std::abs(tau_curve),
                        std::abs(kappa - std::abs(kappa1))});
    }
    return verdict(Claim::Geodesic, worst, kSpecialAngleTol);
  }
  if (a == 0.0) {
    const double radius = lox.surface().local_jet(lox.spec().c).f;
    double worst = 0.0;
    for (double t : ts) {
      const CurveJet j = curve_jet(lox, t);
      const Vec3 cr = cross(j.p1, j.p2);
      const double kappa = norm(cr);
      const double tau = det(j.p1, j.p2, j.p3) / (kappa * kappa);
      worst = std::max({worst, std::abs(kappa - 1.0 / radius), std::abs(tau)});
    }
    auto v = verdict(Claim::Circle, worst, kSpecialAngleTol);
    v.details["radius"] = radius;
    v.details["kappa_expected"] = 1.0 / radius;
    return v;
  }
  throw Error(ErrorCode::NotApplicable, "special-angle check needs psi = 0 or pi/2");
}

CharacterizationVerdict check_general_helix(const Loxodrome& lox, std::span<const double> ts) {
  require_samples(ts);
  std::vector<double> ratios;
  ratios.reserve(ts.size());
  for (double t : ts) {
    const KappaTau kt = kappa_tau_general(lox, t);
    if (!kt.tau_defined || kt.tau == 0.0) {
      throw Error(ErrorCode::UndefinedTorsion, "kappa/tau undefined at a sample", t);
    }
    ratios.push_back(kt.kappa / kt.tau);
  }
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r - mean));
  auto v = verdict(Claim::GeneralHelix, worst / (1.0 + std::abs(mean)), kHelixTol);
  v.details["ratio"] = mean;
  if (const auto* flat = std::get_if<FlatParams>(&lox.surface().params())) {
    const double a = lox.spec().a();
    const double b = lox.spec().b();
    const double A = flat->A;
    const double sign = (b > 0 ? 1.0 : -1.0) * lox.surface().g_branch();
    v.details["ratio_expected"] =
        sign * std::sqrt(b * b + a * a * A * A) / (a * std::sqrt(1.0 - A * A));
  }
  return v;
}

CharacterizationVerdict check_linear_ratio(const Loxodrome& lox, std::span<const double> ts) {
  const auto* minimal = std::get_if<MinimalParams>(&lox.surface().params());
  if (minimal == nullptr || !is_quarter_angle(lox.spec().psi)) {
    throw Error(ErrorCode::NotApplicable, "linear kappa/tau law needs a catenoid and psi = pi/4");
  }
  require_samples(ts);
  const std::size_t n = ts.size();
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const KappaTau kt = signed_kappa_tau_minimal(lox, ts[i]);
    if (kt.tau == 0.0) throw Error(ErrorCode::UndefinedTorsion, "tau vanishes", ts[i]);
    ys[i] = kt.kappa / kt.tau;
  }
  double tm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tm += ts[i];
    ym += ys[i];
  }
  tm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    stt += (ts[i] - tm) * (ts[i] - tm);
    sty += (ts[i] - tm) * (ys[i] - ym);
  }
  const double lambda = sty / stt;
  const double mu = ym - lambda * tm;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(ys[i] - (lambda * ts[i] + mu)));
  auto v = verdict(Claim::LinearKappaTauRatio, worst, kLinearRatioTol);
  // With the sign conventions of signed_kappa_tau_minimal the line is
  // eps * sigma * (n/2 t + (m + c) n / sqrt2).
  const double orient = lox.spec().epsilon * lox.surface().g_branch();
  v.details["lambda"] = lambda;
  v.details["mu"] = mu;
  v.details["lambda_expected"] = orient * minimal->n / 2.0;
  v.details["mu_expected"] = orient * (minimal->m + lox.spec().c) * minimal->n / std::numbers::sqrt2;
  return v;
}

CharacterizationVerdict check_asymptotic(const Loxodrome& lox, std::span<const double> ts) {
  require_samples(ts);
  double worst = 0.0;
  double disagreement = 0.0;
  for (double t : ts) {
    const double kn = normal_curvature(lox, t);
    worst = std::max(worst, std::abs(kn));
    disagreement = std::max(disagreement, std::abs(kn - normal_curvature_shape(lox, t)));
  }
  auto v = verdict(Claim::AsymptoticCurve, worst, kAsymptoticTol);
  v.details["shape_operator_disagreement"] = disagreement;
  if (disagreement > kShapeAgreementTol) v.holds = false;
  return v;
}

}  // namespace loxo
