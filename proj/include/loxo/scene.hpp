#pragma once

// Scene description consumed by the command-line front end: one surface,
// the curves drawn on it and what to write where.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loxo/loxodrome.hpp"
#include "loxo/surface.hpp"

namespace loxo {

struct SurfaceConfig {
  ProfileParams params = FlatParams{};
  BuildOptions build;
};

struct LoxodromeConfig {
  std::string name;
  LoxodromeSpec spec;
  std::optional<Interval> t_range;  // default: sample_range of the curve
  int samples = 400;
  bool numeric = false;  // force quadrature for theta
};

struct MeridianConfig {
  double theta = 0.0;
  std::optional<Interval> s_range;  // default: middle 96% of the domain
  int samples = 400;
};

struct ParallelConfig {
  double s = 0.0;
  int samples = 400;
};

struct MeshConfig {
  std::optional<Interval> s_range;
  int s_samples = 64;
  int theta_samples = 96;
};

struct SceneConfig {
  std::string name = "scene";
  SurfaceConfig surface;
  std::vector<LoxodromeConfig> loxodromes;
  std::vector<MeridianConfig> meridians;
  std::vector<ParallelConfig> parallels;
  MeshConfig mesh;
  std::string output_dir = "out";
};

/// Throws InvalidParams on schema violations.
SceneConfig parse_scene(const nlohmann::json& doc);
/// Reads and parses a JSON file; IoError if unreadable.
SceneConfig load_scene(const std::string& path);
nlohmann::json scene_to_json(const SceneConfig& scene);

/// The parameter sets behind the four worked examples. UnknownFigure.
SceneConfig figure_scene(const std::string& name);
std::vector<std::string> figure_names();

/// Curves of a scene, all as loxodromes: meridians are psi = 0, parallels psi = pi/2.
struct SceneCurve {
  std::string name;
  std::string role;  // "loxodrome", "meridian" or "parallel"
  Loxodrome curve;
  Interval t_range;
  int samples = 0;
};

std::vector<SceneCurve> build_curves(const ProfileModel& surface, const SceneConfig& scene);
Interval mesh_s_range(const ProfileModel& surface, const MeshConfig& mesh);

}  // namespace loxo
