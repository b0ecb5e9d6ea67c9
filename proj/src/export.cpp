#include "loxo/export.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "loxo/error.hpp"

namespace loxo {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

double grid_s(const Interval& r, int i, int n) { return i == n - 1 ? r.hi : r.lo + r.length() * i / (n - 1); }
double grid_theta(int j, int n) { return 2.0 * std::numbers::pi * j / n; }

}  // namespace

Mesh surface_mesh(const ProfileModel& surface, const Interval& s_range, int s_samples, int theta_samples) {
  if (s_samples < 2 || theta_samples < 3) throw Error(ErrorCode::InvalidParams, "mesh too coarse");
  Mesh mesh;
  for (int i = 0; i < s_samples; ++i) {
    const double s = grid_s(s_range, i, s_samples);
    for (int j = 0; j < theta_samples; ++j) mesh.vertices.push_back(surface_point(surface, s, grid_theta(j, theta_samples)));
  }
  for (int i = 0; i + 1 < s_samples; ++i) {
    for (int j = 0; j < theta_samples; ++j) {
      const int jn = (j + 1) % theta_samples;
      const int v00 = i * theta_samples + j, v01 = i * theta_samples + jn;
      const int v10 = (i + 1) * theta_samples + j, v11 = (i + 1) * theta_samples + jn;
      mesh.faces.push_back({v00, v01, v11});
      mesh.faces.push_back({v00, v11, v10});
    }
  }
  return mesh;
}

std::string to_obj(const Mesh& mesh) {
  std::string out;
  for (const Vec3& v : mesh.vertices) {
    out += "v " + format_double(v.x) + ' ' + format_double(v.y) + ' ' + format_double(v.z) + '\n';
  }
  for (const auto& f : mesh.faces) {
    out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + '\n';
  }
  return out;
}

Table surface_grid_table(const ProfileModel& surface, const Interval& s_range, int s_samples,
                         int theta_samples) {
  Table table{{"i", "j", "s", "theta", "x", "y", "z"}, {}};
  for (int i = 0; i < s_samples; ++i) {
    const double s = grid_s(s_range, i, s_samples);
    for (int j = 0; j < theta_samples; ++j) {
      const double th = grid_theta(j, theta_samples);
      const Vec3 p = surface_point(surface, s, th);
      table.rows.push_back({double(i), double(j), s, th, p.x, p.y, p.z});
    }
  }
  return table;
}

Table curve_table(const SceneCurve& curve) {
  Table table{{"t", "x", "y", "z", "s", "theta", "kappa", "tau", "kappa_n"}, {}};
  const Loxodrome& lox = curve.curve;
  for (double t : sample_ts(curve.t_range, curve.samples)) {
    const Vec3 p = loxodrome_point(lox, t);
    const KappaTau kt = kappa_tau_general(lox, t);
    table.rows.push_back({t, p.x, p.y, p.z, s_of_t(lox.spec(), t), theta_of_t(lox, t), kt.kappa,
                          kt.tau, normal_curvature(lox, t)});
  }
  return table;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + '\n'; }

void write_text(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create directory for " + path);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace loxo
