#include "vermacrit/report.hpp"

#include "vermacrit/errors.hpp"

#include <fstream>

namespace vermacrit {

json rat_json(const Rat& a) {
  return json{{"n", a.get_num().get_str()}, {"d", a.get_den().get_str()}};
}

Rat rat_from_json(const json& j) {
  return Rat(mpz_class(j.at("n").get<std::string>()), mpz_class(j.at("d").get<std::string>()));
}

json nu_json(const NuVec& nu) {
  json out = json::array();
  for (int c : nu.c) out.push_back(c);
  return out;
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (const auto& v : w.v) out.push_back(rat_json(v));
  return out;
}

namespace {

bool is_timing_key(const std::string& k) {
  return k == "timing" || k == "elapsed_ms" || k == "timestamp";
}

std::optional<std::string> diff_rec(const json& a, const json& b, const std::string& path) {
  if (a.is_object() && b.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (is_timing_key(it.key())) continue;
      if (!b.contains(it.key())) return path + "/" + it.key();
      auto sub = diff_rec(it.value(), b.at(it.key()), path + "/" + it.key());
      if (sub) return sub;
    }
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (is_timing_key(it.key())) continue;
      if (!a.contains(it.key())) return path + "/" + it.key();
    }
    return std::nullopt;
  }
  if (a.is_array() && b.is_array()) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto sub = diff_rec(a[i], b[i], path + "/" + std::to_string(i));
      if (sub) return sub;
    }
    if (a.size() != b.size()) return path + "/" + std::to_string(n);
    return std::nullopt;
  }
  if (a != b) return path.empty() ? "/" : path;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> json_diff(const json& a, const json& b) { return diff_rec(a, b, ""); }

GoldenResult golden_compare(const std::string& report_path, const std::string& golden_path,
                            bool regenerate) {
  std::ifstream rf(report_path);
  if (!rf) throw std::runtime_error("cannot open report: " + report_path);
  json report = json::parse(rf);

  if (regenerate) {
    std::ofstream gf(golden_path);
    gf << report.dump(2) << "\n";
    return {true, ""};
  }

  std::ifstream gf(golden_path);
  if (!gf) throw MissingGolden("missing golden file: " + golden_path);
  json golden = json::parse(gf);
  auto diff = json_diff(report, golden);
  if (diff) return {false, *diff};
  return {true, ""};
}

}  // namespace vermacrit
