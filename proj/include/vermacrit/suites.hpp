#pragma once

#include "vermacrit/characters.hpp"
#include "vermacrit/construct.hpp"
#include "vermacrit/heisenberg.hpp"
#include "vermacrit/jantzen.hpp"
#include "vermacrit/report.hpp"
#include "vermacrit/shapovalov.hpp"
#include "vermacrit/suite_types.hpp"

namespace vermacrit {

std::vector<std::string> known_suites();

// Runs one named verification suite; throws UnknownAlgebra / config errors.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

// Runs the configured suites (possibly across a worker pool) and assembles
// the full report.
json run_all(const RunConfig& cfg, std::vector<SuiteResult>* results = nullptr);

// Weight construction shared with tests: level defaults to critical, finite
// coordinates default to 1/7, 1/11, ... unless overridden.
Weight make_lambda(const AffineAlgebra& alg, const RunConfig& cfg);
Weight make_xi(const AffineAlgebra& alg, const RunConfig& cfg);
TruncationWindow make_window(const AffineAlgebra& alg, const RunConfig& cfg);

}  // namespace vermacrit
