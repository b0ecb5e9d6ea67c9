#pragma once

// Diff-stable writers: CSV with a header row and %.17g numbers, OBJ with
// v/f records only, JSON with sorted keys.

#include <string>
#include <vector>

#include <json.hpp>

#include "loxo/scene.hpp"

namespace loxo {

/// %.17g, with "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& table);

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based
};

/// (s, theta) grid, theta wrapping around without a duplicated seam.
Mesh surface_mesh(const ProfileModel& surface, const Interval& s_range, int s_samples, int theta_samples);
std::string to_obj(const Mesh& mesh);
/// i, j, s, theta, x, y, z for every grid vertex.
Table surface_grid_table(const ProfileModel& surface, const Interval& s_range, int s_samples,
                         int theta_samples);

/// t, x, y, z, s, theta, kappa, tau, kappa_n.
Table curve_table(const SceneCurve& curve);

std::string dump_json(const nlohmann::json& doc);

/// Creates parent directories; IoError on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace loxo
