#pragma once

#include "vermacrit/rational.hpp"
#include "vermacrit/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vermacrit {

struct RunConfig {
  std::string algebra = "sl2";
  std::vector<Rat> lambda_finite;  // empty: 1/7, 1/11, ... per Cartan coordinate
  std::optional<Rat> level;        // unset: the critical level
  Rat d_value{0};
  std::vector<Rat> xi;  // empty: the K-dual direction Lambda_0
  int smax = 3;
  int height_max = 0;     // 0: smax * height(delta)
  int nu_max_delta = 2;   // determinant-suite window
  int nu_max_height = 8;  // determinant-suite window
  std::vector<std::string> suites{"all"};
  int threads = 1;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::vector<CheckLine> checks;
  json data = json::object();

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({name, ok, detail});
    pass = pass && ok;
  }
};

}  // namespace vermacrit
