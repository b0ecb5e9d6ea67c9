#pragma once

// Quantitative verdicts for the geometric classifications of loxodromes:
// geodesic and circle cases, general helices, the linear kappa/tau law on
// catenoids, and asymptotic curves.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loxo/loxodrome.hpp"

namespace loxo {

enum class Claim { Geodesic, Circle, GeneralHelix, LinearKappaTauRatio, AsymptoticCurve };

std::string_view to_string(Claim claim);

struct CharacterizationVerdict {
  Claim claim = Claim::Geodesic;
  bool holds = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::map<std::string, double> details;  // fitted constants, expected values
};

inline constexpr double kSpecialAngleTol = 1e-8;
inline constexpr double kHelixTol = 1e-6;
inline constexpr double kLinearRatioTol = 1e-6;
inline constexpr double kAsymptoticTol = 1e-8;
inline constexpr int kDefaultSamples = 32;

/// 32 equispaced samples over sample_range(lox).
std::vector<double> default_samples(const Loxodrome& lox, int count = kDefaultSamples);

/// psi = 0: Geodesic (tau = 0, geodesic curvature 0, kappa = |kappa1|).
/// psi = pi/2: Circle (kappa = 1/f(c), tau = 0). NotApplicable otherwise.
CharacterizationVerdict check_special_angle(const Loxodrome& lox);
CharacterizationVerdict check_special_angle(const Loxodrome& lox, std::span<const double> ts);

/// kappa/tau constant: residual max|r - mean| / (1 + |mean|). UndefinedTorsion.
CharacterizationVerdict check_general_helix(const Loxodrome& lox, std::span<const double> ts);

/// Catenoid, psi = pi/4: least-squares line through the signed kappa/tau.
CharacterizationVerdict check_linear_ratio(const Loxodrome& lox, std::span<const double> ts);

/// max |kappa_n| over the samples, cross-checked against <S(T), T>.
CharacterizationVerdict check_asymptotic(const Loxodrome& lox, std::span<const double> ts);

}  // namespace loxo
