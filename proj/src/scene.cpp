#include "loxo/scene.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "loxo/error.hpp"

namespace loxo {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidParams, what); }

double num(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) bad(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

int integer(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::optional<Interval> interval(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    bad(std::string("'") + key + "' must be [lo, hi]");
  }
  Interval r{v[0].get<double>(), v[1].get<double>()};
  if (!(r.hi > r.lo)) bad(std::string("'") + key + "' must have lo < hi");
  return r;
}

int sample_count(const json& obj, int fallback) {
  const int n = integer(obj, "samples", fallback);
  if (n < 2) bad("sample counts must be at least 2");
  return n;
}

const json& object_at(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_object()) bad(std::string("missing object '") + key + "'");
  return doc.at(key);
}

ProfileParams parse_params(const std::string& kind, const json& p) {
  if (kind == "flat") return FlatParams{num(p, "A", 0.0), num(p, "B", 1.0)};
  if (kind == "spherical") return SphericalKParams{num(p, "K0", 1.0), num(p, "A", 1.0), num(p, "B", 0.0)};
  if (kind == "hyperbolic") return HyperbolicKParams{num(p, "K0", -1.0), num(p, "A", 1.0), num(p, "B", 1.0)};
  if (kind == "minimal") return MinimalParams{num(p, "n", 1.0), num(p, "m", 0.0), num(p, "r", 0.0)};
  if (kind == "crpc") {
    CrpcParams c;
    c.k = num(p, "k", c.k);
    c.d = num(p, "d", c.d);
    c.f0 = num(p, "f0", c.f0);
    c.s0 = num(p, "s0", c.s0);
    c.slope_sign = integer(p, "slope_sign", c.slope_sign);
    c.tol = num(p, "tol", c.tol);
    return c;
  }
  bad("unknown surface kind '" + kind + "'");
}

std::string kind_name(const ProfileParams& params) {
  switch (params.index()) {
    case 0: return "flat";
    case 1: return "spherical";
    case 2: return "hyperbolic";
    case 3: return "minimal";
    case 4: return "crpc";
    default: bad("generic profiles cannot be serialized");
  }
}

json params_json(const ProfileParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FlatParams>) return {{"A", p.A}, {"B", p.B}};
        else if constexpr (std::is_same_v<P, SphericalKParams>) return {{"K0", p.K0}, {"A", p.A}, {"B", p.B}};
        else if constexpr (std::is_same_v<P, HyperbolicKParams>) return {{"K0", p.K0}, {"A", p.A}, {"B", p.B}};
        else if constexpr (std::is_same_v<P, MinimalParams>) return {{"n", p.n}, {"m", p.m}, {"r", p.r}};
        else if constexpr (std::is_same_v<P, CrpcParams>) {
          return {{"k", p.k}, {"d", p.d}, {"f0", p.f0}, {"s0", p.s0}, {"slope_sign", p.slope_sign}, {"tol", p.tol}};
        } else {
          bad("generic profiles cannot be serialized");
        }
      },
      params);
}

json interval_json(const Interval& r) { return json::array({r.lo, r.hi}); }

}  // namespace

SceneConfig parse_scene(const json& doc) {
  if (!doc.is_object()) bad("scene must be a JSON object");
  SceneConfig scene;
  if (doc.contains("name")) scene.name = doc.at("name").get<std::string>();

  const json& surf = object_at(doc, "surface");
  if (!surf.contains("kind") || !surf.at("kind").is_string()) bad("surface.kind must be a string");
  const json params = surf.contains("params") ? surf.at("params") : json::object();
  if (!params.is_object()) bad("surface.params must be an object");
  scene.surface.params = parse_params(surf.at("kind").get<std::string>(), params);
  scene.surface.build.g_branch = integer(surf, "g_branch", 1);
  if (auto w = interval(surf, "window")) scene.surface.build.window = *w;

  if (doc.contains("loxodromes")) {
    for (const json& l : doc.at("loxodromes")) {
      LoxodromeConfig lc;
      lc.name = l.value("name", "loxodrome_" + std::to_string(scene.loxodromes.size()));
      if (!l.contains("psi")) bad("loxodrome needs 'psi'");
      lc.spec.psi = num(l, "psi", 0.0);
      lc.spec.epsilon = integer(l, "epsilon", 1);
      lc.spec.c = num(l, "c", 0.0);
      lc.spec.t0 = num(l, "t0", 0.0);
      lc.spec.theta0 = num(l, "theta0", 0.0);
      lc.t_range = interval(l, "t_range");
      lc.samples = sample_count(l, lc.samples);
      lc.numeric = l.value("numeric", false);
      scene.loxodromes.push_back(std::move(lc));
    }
  }
  if (doc.contains("meridians")) {
    for (const json& m : doc.at("meridians")) {
      MeridianConfig mc;
      mc.theta = num(m, "theta", 0.0);
      mc.s_range = interval(m, "s_range");
      mc.samples = sample_count(m, mc.samples);
      scene.meridians.push_back(mc);
    }
  }
  if (doc.contains("parallels")) {
    for (const json& p : doc.at("parallels")) {
      ParallelConfig pc;
      if (!p.contains("s")) bad("parallel needs 's'");
      pc.s = num(p, "s", 0.0);
      pc.samples = sample_count(p, pc.samples);
      scene.parallels.push_back(pc);
    }
  }
  if (doc.contains("mesh")) {
    const json& m = doc.at("mesh");
    scene.mesh.s_range = interval(m, "s_range");
    scene.mesh.s_samples = integer(m, "s_samples", scene.mesh.s_samples);
    scene.mesh.theta_samples = integer(m, "theta_samples", scene.mesh.theta_samples);
    if (scene.mesh.s_samples < 2 || scene.mesh.theta_samples < 3) bad("mesh needs s_samples >= 2, theta_samples >= 3");
  }
  if (doc.contains("output")) scene.output_dir = doc.at("output").value("directory", scene.output_dir);
  return scene;
}

SceneConfig load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_scene(doc);
  } catch (const json::exception& e) {
    bad(std::string("bad scene: ") + e.what());
  }
}

json scene_to_json(const SceneConfig& scene) {
  json doc;
  doc["name"] = scene.name;
  doc["surface"] = {{"kind", kind_name(scene.surface.params)},
                    {"params", params_json(scene.surface.params)},
                    {"g_branch", scene.surface.build.g_branch},
                    {"window", interval_json(scene.surface.build.window)}};
  doc["loxodromes"] = json::array();
  for (const auto& l : scene.loxodromes) {
    json j = {{"name", l.name},       {"psi", l.spec.psi}, {"epsilon", l.spec.epsilon},
              {"c", l.spec.c},        {"t0", l.spec.t0},   {"theta0", l.spec.theta0},
              {"samples", l.samples}, {"numeric", l.numeric}};
    if (l.t_range) j["t_range"] = interval_json(*l.t_range);
    doc["loxodromes"].push_back(j);
  }
  doc["meridians"] = json::array();
  for (const auto& m : scene.meridians) {
    json j = {{"theta", m.theta}, {"samples", m.samples}};
    if (m.s_range) j["s_range"] = interval_json(*m.s_range);
    doc["meridians"].push_back(j);
  }
  doc["parallels"] = json::array();
  for (const auto& p : scene.parallels) doc["parallels"].push_back({{"s", p.s}, {"samples", p.samples}});
  doc["mesh"] = {{"s_samples", scene.mesh.s_samples}, {"theta_samples", scene.mesh.theta_samples}};
  if (scene.mesh.s_range) doc["mesh"]["s_range"] = interval_json(*scene.mesh.s_range);
  doc["output"] = {{"directory", scene.output_dir}};
  return doc;
}

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig3", "fig4"}; }

// The worked examples fix the surfaces and angles but not the plotted
// ranges; the ranges below are our choice.
SceneConfig figure_scene(const std::string& name) {
  SceneConfig scene;
  scene.name = name;
  LoxodromeConfig lox;
  lox.name = "loxodrome";
  lox.samples = 600;
  MeridianConfig meridian;
  if (name == "fig1") {
    // Cone f = s/2; t0 = 4 puts alpha(t) = (t/4)(cos 2sqrt3 ln(t/4), ...).
    scene.surface.params = FlatParams{0.5, 0.0};
    lox.spec = {kPi / 3, 1, 0.0, 4.0, 0.0};
    lox.t_range = Interval{0.5, 12.0};
    meridian.theta = 0.0;
    meridian.s_range = Interval{0.25, 6.0};
    scene.mesh.s_range = Interval{0.25, 6.0};
  } else if (name == "fig2") {
    // Elongated sphere, one pole-to-pole arc less a 0.05 margin in s.
    scene.surface.params = SphericalKParams{1.0, std::numbers::sqrt2 / 2, 0.0};
    const double s_max = kPi / 2 - 0.05;
    lox.spec = {kPi / 4, 1, 0.0, 0.0, 0.0};
    lox.t_range = Interval{-s_max * std::numbers::sqrt2, s_max * std::numbers::sqrt2};
    meridian.theta = 2 * kPi;
    meridian.s_range = Interval{-s_max, s_max};
    scene.mesh.s_range = Interval{-s_max, s_max};
  } else if (name == "fig3") {
    // Beltrami f = e^s, rim at s = 0.
    scene.surface.params = HyperbolicKParams{-1.0, 1.0, 1.0};
    const double a = std::cos(kPi / 6);
    lox.spec = {kPi / 6, 1, 0.0, -1.0, 0.0};
    lox.t_range = Interval{-2.0 / a, -0.02 / a};
    meridian.theta = 3 * kPi / 2;
    meridian.s_range = Interval{-2.0, -0.02};
    scene.mesh.s_range = Interval{-2.0, -0.02};
  } else if (name == "fig4") {
    scene.surface.params = MinimalParams{1.0, 0.0, 0.0};
    lox.spec = {kPi / 4, 1, 0.0, 0.0, 0.0};
    lox.t_range = Interval{-6.0, 6.0};
    meridian.theta = kPi / 4;
    meridian.s_range = Interval{-5.0, 5.0};
    scene.mesh.s_range = Interval{-5.0, 5.0};
  } else {
    throw Error(ErrorCode::UnknownFigure, "unknown figure '" + name + "'");
  }
  scene.loxodromes.push_back(lox);
  scene.meridians.push_back(meridian);
  scene.output_dir = name;
  return scene;
}

Interval mesh_s_range(const ProfileModel& surface, const MeshConfig& mesh) {
  const Interval& d = surface.domain();
  if (mesh.s_range) {
    if (!d.contains(mesh.s_range->lo) || !d.contains(mesh.s_range->hi)) {
      bad("mesh s_range leaves the surface domain");
    }
    return *mesh.s_range;
  }
  return {d.lo + 0.02 * d.length(), d.hi - 0.02 * d.length()};
}

std::vector<SceneCurve> build_curves(const ProfileModel& surface, const SceneConfig& scene) {
  std::vector<SceneCurve> out;
  for (const auto& l : scene.loxodromes) {
    LoxodromeOptions opts;
    opts.force_numeric = l.numeric;
    Loxodrome lox = make_loxodrome(surface, l.spec, opts);
    Interval range = l.t_range ? *l.t_range : sample_range(lox);
    if (!lox.contains(range.lo) || !lox.contains(range.hi)) bad("t_range of '" + l.name + "' leaves the t-domain");
    out.push_back({l.name, "loxodrome", std::move(lox), range, l.samples});
  }
  for (std::size_t i = 0; i < scene.meridians.size(); ++i) {
    const auto& m = scene.meridians[i];
    const Interval range = m.s_range ? *m.s_range : mesh_s_range(surface, {});
    // psi = 0 gives s = t, theta = theta0.
    Loxodrome lox = make_loxodrome(surface, {0.0, 1, 0.0, range.mid(), m.theta});
    if (!lox.contains(range.lo) || !lox.contains(range.hi)) bad("meridian s_range leaves the surface domain");
    out.push_back({"meridian_" + std::to_string(i), "meridian", std::move(lox), range, m.samples});
  }
  for (std::size_t i = 0; i < scene.parallels.size(); ++i) {
    const auto& p = scene.parallels[i];
    Loxodrome lox = make_loxodrome(surface, {kPi / 2, 1, p.s, 0.0, 0.0});
    out.push_back({"parallel_" + std::to_string(i), "parallel", lox, sample_range(lox), p.samples});
  }
  return out;
}

}  // namespace loxo
