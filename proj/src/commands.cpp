#include "loxo/commands.hpp"

#include <filesystem>

#include "loxo/error.hpp"
#include "loxo/export.hpp"

namespace loxo {

using nlohmann::json;

namespace {

std::string out_dir(const SceneConfig& scene, const CommandOptions& o) {
  return o.out_dir ? *o.out_dir : scene.output_dir;
}

std::string join(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).generic_string();
}

bool wants(const CommandOptions& o, Format f) { return o.formats.count(f) != 0; }

void emit(CommandResult& r, const std::string& path, const std::string& text) {
  write_text(path, text);
  r.files.push_back(path);
}

json columns_json(const Table& table) {
  json doc = json::object();
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    json col = json::array();
    for (const auto& row : table.rows) col.push_back(std::isfinite(row[c]) ? json(row[c]) : json(nullptr));
    doc[table.header[c]] = col;
  }
  return doc;
}

VerifyOptions verify_options(const CommandOptions& o) {
  VerifyOptions v;
  if (o.samples) v.samples = *o.samples;
  if (o.tol) v.oracle_tol = *o.tol;
  return v;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "obj") return Format::Obj;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::InvalidParams, "unknown format '" + name + "'");
}

CommandResult cmd_surface(const SceneConfig& scene, const CommandOptions& options) {
  const ProfileModel surface = build_profile(scene.surface.params, scene.surface.build);
  const Interval range = mesh_s_range(surface, scene.mesh);
  int ns = scene.mesh.s_samples;
  if (options.samples) ns = *options.samples;
  if (ns < 2) throw Error(ErrorCode::InvalidParams, "need at least two s samples");
  const int nt = scene.mesh.theta_samples;
  const std::string dir = out_dir(scene, options);
  CommandResult r;
  if (wants(options, Format::Obj)) emit(r, join(dir, "surface.obj"), to_obj(surface_mesh(surface, range, ns, nt)));
  if (wants(options, Format::Csv)) emit(r, join(dir, "surface.csv"), to_csv(surface_grid_table(surface, range, ns, nt)));
  return r;
}

CommandResult cmd_loxodrome(const SceneConfig& scene, const CommandOptions& options) {
  const ProfileModel surface = build_profile(scene.surface.params, scene.surface.build);
  const std::string dir = out_dir(scene, options);
  CommandResult r;
  for (SceneCurve& c : build_curves(surface, scene)) {
    if (options.samples) {
      if (*options.samples < 2) throw Error(ErrorCode::InvalidParams, "need at least two samples");
      c.samples = *options.samples;
    }
    const Table table = curve_table(c);
    if (wants(options, Format::Csv)) emit(r, join(dir, c.name + ".csv"), to_csv(table));
    if (wants(options, Format::Json)) emit(r, join(dir, c.name + ".json"), dump_json(columns_json(table)));
  }
  return r;
}

CommandResult cmd_verify(const SceneConfig& scene, const CommandOptions& options) {
  CommandResult r;
  r.report = verify_scene(scene, verify_options(options));
  if (options.out_dir || wants(options, Format::Json)) {
    emit(r, join(out_dir(scene, options), "report.json"), dump_json(report_to_json(*r.report)));
  }
  return r;
}

CommandResult cmd_figure(const std::string& name, const CommandOptions& options) {
  SceneConfig scene = figure_scene(name);
  const std::string base = options.out_dir ? *options.out_dir : std::string(".");
  scene.output_dir = join(base, name);

  CommandOptions inner = options;
  inner.out_dir = scene.output_dir;
  inner.formats = {Format::Csv, Format::Obj};
  inner.samples.reset();
  CommandResult r = cmd_surface(scene, inner);
  if (options.samples) inner.samples = options.samples;
  const CommandResult curves = cmd_loxodrome(scene, inner);
  r.files.insert(r.files.end(), curves.files.begin(), curves.files.end());

  VerifyOptions vopt;
  if (options.tol) vopt.oracle_tol = *options.tol;
  r.report = verify_scene(scene, vopt);
  emit(r, join(scene.output_dir, "report.json"), dump_json(report_to_json(*r.report)));
  SceneConfig portable = scene;
  portable.output_dir = name;  // keep the bundle independent of where it was written
  emit(r, join(scene.output_dir, "scene.json"), dump_json(scene_to_json(portable)));

  const ProfileModel surface = build_profile(scene.surface.params, scene.surface.build);
  json manifest;
  manifest["figure"] = name;
  manifest["mesh_s_range"] = json::array({mesh_s_range(surface, scene.mesh).lo, mesh_s_range(surface, scene.mesh).hi});
  manifest["curves"] = json::array();
  for (const SceneCurve& c : build_curves(surface, scene)) {
    manifest["curves"].push_back({{"name", c.name},
                                  {"role", c.role},
                                  {"t_range", json::array({c.t_range.lo, c.t_range.hi})},
                                  {"theta_case", std::string(to_string(c.curve.theta_case()))}});
  }
  manifest["ranges_note"] = "plotted ranges are implementation choices";
  manifest["verification_passed"] = r.report->ok();
  json files = json::array();
  for (const auto& f : r.files) files.push_back(std::filesystem::path(f).filename().generic_string());
  files.push_back("manifest.json");
  manifest["files"] = files;
  emit(r, join(scene.output_dir, "manifest.json"), dump_json(manifest));
  return r;
}

}  // namespace loxo
