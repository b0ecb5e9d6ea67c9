// Command-line front end: surface | loxodrome | verify | figure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loxo/commands.hpp"
#include "loxo/error.hpp"
#include "loxo/export.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kIo = 3 };

void print_report(const loxo::VerificationReport& report) {
  for (const auto& c : report.checks) {
    std::printf("%-4s %-50s residual=%s tol=%s\n", c.holds ? "ok" : "FAIL", c.id.c_str(),
                loxo::format_double(c.residual).c_str(), loxo::format_double(c.tolerance).c_str());
  }
  for (const auto& v : report.verdicts) {
    std::printf("     %-50s %s %s residual=%s\n", v.id.c_str(), std::string(loxo::to_string(v.verdict.claim)).c_str(),
                v.verdict.holds ? "holds" : "does-not-hold", loxo::format_double(v.verdict.residual).c_str());
  }
  std::printf("%s: %d passed, %d failed\n", report.suite.c_str(), report.passed(), report.failed());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loxodromes on rotational surfaces: meshes, polylines and verification"};
  app.require_subcommand(1);

  std::string config, out, fig_name;
  std::vector<std::string> formats;
  double tol = 0.0;
  int samples = 0;

  const auto common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) sub->add_option("--config", config, "scene JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory");
    sub->add_option("--tol", tol, "oracle tolerance for verification")->check(CLI::PositiveNumber);
    sub->add_option("--samples", samples, "sample count")->check(CLI::Range(2, 1000000));
    sub->add_option("--format", formats, "csv|obj|json (repeatable)")->check(CLI::IsMember({"csv", "obj", "json"}));
  };
  CLI::App* surface = app.add_subcommand("surface", "write the surface mesh");
  CLI::App* loxodrome = app.add_subcommand("loxodrome", "write curve polylines with kappa, tau, kappa_n");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  CLI::App* figure = app.add_subcommand("figure", "write a figure bundle");
  common(surface, true);
  common(loxodrome, true);
  common(verify, true);
  common(figure, false);
  figure->add_option("name", fig_name, "fig1..fig4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    loxo::CommandOptions opts;
    if (!out.empty()) opts.out_dir = out;
    if (samples > 0) opts.samples = samples;
    if (tol > 0.0) opts.tol = tol;
    if (!formats.empty()) {
      opts.formats.clear();
      for (const auto& f : formats) opts.formats.insert(loxo::parse_format(f));
    }

    loxo::CommandResult result;
    if (*figure) {
      result = loxo::cmd_figure(fig_name, opts);
    } else {
      const loxo::SceneConfig scene = loxo::load_scene(config);
      if (*surface) result = loxo::cmd_surface(scene, opts);
      if (*loxodrome) result = loxo::cmd_loxodrome(scene, opts);
      if (*verify) result = loxo::cmd_verify(scene, opts);
    }
    for (const auto& f : result.files) std::printf("wrote %s\n", f.c_str());
    if (result.report) {
      print_report(*result.report);
      if (!result.report->ok()) return kVerifyFailed;
    }
    return kOk;
  } catch (const loxo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == loxo::ErrorCode::IoError ? kIo : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
