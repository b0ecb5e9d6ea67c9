#pragma once

// Verification suite behind `verify` and the figure bundles. Checks are
// invariants the library must satisfy; verdicts are the geometric
// classifications, compared to the theoretical expectation where one exists.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loxo/characterize.hpp"
#include "loxo/scene.hpp"

namespace loxo {

struct VerifyOptions {
  int samples = kDefaultSamples;
  double oracle_tol = 1e-6;  // closed form vs finite-difference Frenet
};

struct CheckEntry {
  std::string id;
  bool holds = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct VerdictEntry {
  std::string id;
  CharacterizationVerdict verdict;
  std::optional<bool> expected;  // empty when the theory makes no prediction
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckEntry> checks;
  std::vector<VerdictEntry> verdicts;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

VerificationReport verify_scene(const SceneConfig& scene, const VerifyOptions& options = {});
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace loxo
