// verma-critical: build an affine Lie (super)algebra from the catalog,
// materialize Verma modules at the critical level inside a truncation
// window, and run the structure-theorem verification suites.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage/config error.

#include "vermacrit/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace vermacrit;

namespace {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw CLI::ValidationError("not a rational: " + s);
  r.canonicalize();
  return r;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("cannot open config file: " + path);
  json j = json::parse(f);
  if (j.contains("algebra")) cfg.algebra = j["algebra"].get<std::string>();
  if (j.contains("smax")) cfg.smax = j["smax"].get<int>();
  if (j.contains("height_max")) cfg.height_max = j["height_max"].get<int>();
  if (j.contains("nu_max_delta")) cfg.nu_max_delta = j["nu_max_delta"].get<int>();
  if (j.contains("nu_max_height")) cfg.nu_max_height = j["nu_max_height"].get<int>();
  if (j.contains("level")) {
    if (j["level"].is_string() && j["level"] == "critical")
      cfg.level.reset();
    else
      cfg.level = rat_from_json(j["level"]);
  }
  if (j.contains("lambda")) {
    cfg.lambda_finite.clear();
    for (const auto& e : j["lambda"]) cfg.lambda_finite.push_back(rat_from_json(e));
  }
  if (j.contains("xi")) {
    cfg.xi.clear();
    for (const auto& e : j["xi"]) cfg.xi.push_back(rat_from_json(e));
  }
  if (j.contains("suites")) {
    cfg.suites.clear();
    for (const auto& e : j["suites"]) cfg.suites.push_back(e.get<std::string>());
  }
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
}

int cmd_run(const RunConfig& cfg, const std::string& out_json, const std::string& out_text) {
  std::vector<SuiteResult> results;
  json report = run_all(cfg, &results);

  std::ostringstream text;
  for (const auto& r : results) {
    text << "[" << (r.pass ? "PASS" : "FAIL") << "] suite " << r.suite << "\n";
    for (const auto& c : r.checks)
      text << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
  }
  bool pass = report["pass"].get<bool>();
  text << (pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  std::cout << text.str();

  if (!out_json.empty()) {
    std::ofstream f(out_json);
    f << report.dump(2) << "\n";
  }
  if (!out_text.empty()) {
    std::ofstream f(out_text);
    f << text.str();
  }
  return pass ? 0 : 1;
}

int cmd_catalog(const std::string& name) {
  json out = json::array();
  for (const auto& nm : catalog_names()) {
    if (!name.empty() && nm != name) continue;
    FiniteSuperAlgebra g = build_from_catalog(nm);
    json structure = json::array();
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        if (g.bracket(i, j).is_zero()) continue;
        json terms = json::array();
        for (const auto& [k, c] : g.bracket(i, j).terms)
          terms.push_back({k, c.get_num().get_str(), c.get_den().get_str()});
        structure.push_back({i, j, terms});
      }
    json form = json::array();
    for (int i = 0; i < g.dim; ++i) {
      json row = json::array();
      for (int j = 0; j < g.dim; ++j) row.push_back(rat_json(g.form[i][j]));
      form.push_back(row);
    }
    out.push_back({{"name", g.name},
                   {"dim", g.dim},
                   {"parities", g.parity},
                   {"labels", g.labels},
                   {"structure", structure},
                   {"form", form}});
  }
  if (!name.empty() && out.empty()) {
    std::cerr << "unknown algebra: " << name << "\n";
    return 2;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Verma modules at the critical level"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, level_str = "critical", out_json, out_text;
  std::vector<std::string> lambda_strs, xi_strs;

  CLI::App* run = app.add_subcommand("run", "run verification suites");
  run->add_option("--config", config_path, "JSON config file (flags win)");
  run->add_option("--algebra", cfg.algebra, "catalog algebra: sl2, sl3, sl(2|1)");
  run->add_option("--level", level_str, "'critical' or a rational");
  run->add_option("--lambda", lambda_strs, "finite Cartan coordinates of lambda");
  run->add_option("--xi", xi_strs, "deformation direction (hdim coordinates)");
  run->add_option("--smax", cfg.smax, "max delta degree of the window");
  run->add_option("--height-max", cfg.height_max, "max height of the window (0 = auto)");
  run->add_option("--nu-max-delta", cfg.nu_max_delta, "determinant suite: delta-degree cap");
  run->add_option("--nu-max-height", cfg.nu_max_height, "determinant suite: height cap");
  run->add_option("--suite", cfg.suites, "suites to run (or 'all')");
  run->add_option("--threads", cfg.threads, "worker pool size");
  run->add_option("--out", out_json, "write the JSON report here");
  run->add_option("--text", out_text, "write the text summary here");

  std::string report_path, golden_path;
  bool regen = false;
  CLI::App* golden = app.add_subcommand("golden", "compare a report against a golden file");
  golden->add_option("--report", report_path, "report JSON")->required();
  golden->add_option("--golden", golden_path, "golden JSON")->required();
  golden->add_flag("--regen", regen, "write the report as the new golden file");

  std::string catalog_name;
  CLI::App* catalog = app.add_subcommand("catalog", "print catalog algebras as JSON");
  catalog->add_option("--algebra", catalog_name, "restrict to one algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      if (!config_path.empty()) apply_config_file(cfg, config_path);
      // Flags win over the config file.
      if (run->count("--level")) level_str = level_str;  // already bound
      if (level_str == "critical")
        cfg.level.reset();
      else
        cfg.level = parse_rat(level_str);
      if (!lambda_strs.empty()) {
        cfg.lambda_finite.clear();
        for (const auto& s : lambda_strs) cfg.lambda_finite.push_back(parse_rat(s));
      }
      if (!xi_strs.empty()) {
        cfg.xi.clear();
        for (const auto& s : xi_strs) cfg.xi.push_back(parse_rat(s));
      }
      if (const char* env = std::getenv("VERMA_CRITICAL_THREADS"))
        cfg.threads = std::max(1, std::atoi(env));
      for (const auto& s : cfg.suites) {
        if (s == "all") continue;
        auto known = known_suites();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
          std::cerr << "unknown suite: " << s << "\n";
          return 2;
        }
      }
      return cmd_run(cfg, out_json, out_text);
    }
    if (golden->parsed()) {
      GoldenResult res = golden_compare(report_path, golden_path, regen);
      if (res.match) {
        std::cout << (regen ? "golden regenerated\n" : "golden match\n");
        return 0;
      }
      std::cout << "golden mismatch at " << res.pointer << "\n";
      return 1;
    }
    if (catalog->parsed()) return cmd_catalog(catalog_name);
  } catch (const UnknownAlgebra& e) {
    std::cerr << "UnknownAlgebra: " << e.what() << "\n";
    return 2;
  } catch (const MissingGolden& e) {
    std::cerr << "MissingGolden: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
