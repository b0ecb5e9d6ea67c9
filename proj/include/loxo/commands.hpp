#pragma once

// The four front-end commands as library calls, so tests can drive them
// without a subprocess.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loxo/scene.hpp"
#include "loxo/verify.hpp"

namespace loxo {

enum class Format { Csv, Obj, Json };

struct CommandOptions {
  std::optional<std::string> out_dir;  // overrides the scene's output directory
  std::optional<int> samples;          // polyline/grid density, or check count for verify
  std::optional<double> tol;           // oracle tolerance for verify
  std::set<Format> formats{Format::Csv, Format::Obj, Format::Json};
};

/// Parses "csv", "obj" or "json"; InvalidParams otherwise.
Format parse_format(const std::string& name);

struct CommandResult {
  std::vector<std::string> files;  // written, in order
  std::optional<VerificationReport> report;
};

CommandResult cmd_surface(const SceneConfig& scene, const CommandOptions& options);
CommandResult cmd_loxodrome(const SceneConfig& scene, const CommandOptions& options);
CommandResult cmd_verify(const SceneConfig& scene, const CommandOptions& options);
/// Writes mesh, curves, scene, report and manifest under <out>/<name>.
CommandResult cmd_figure(const std::string& name, const CommandOptions& options);

}  // namespace loxo
