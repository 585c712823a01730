#pragma once

#include "vermacrit/affine.hpp"
#include "vermacrit/lattice.hpp"
#include "vermacrit/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace vermacrit {

using json = nlohmann::ordered_json;

// Rationals serialize as integer-string pairs to survive bignums.
json rat_json(const Rat& a);
Rat rat_from_json(const json& j);

json nu_json(const NuVec& nu);
json weight_json(const Weight& w);

// Structural diff that ignores timing fields. Returns the JSON pointer of
// the first divergence, or nullopt when equal.
std::optional<std::string> json_diff(const json& a, const json& b);

// Exit-code semantics: 0 match, 1 mismatch; throws MissingGolden.
struct GoldenResult {
  bool match = false;
  std::string pointer;
};
GoldenResult golden_compare(const std::string& report_path, const std::string& golden_path,
                            bool regenerate);

}  // namespace vermacrit
