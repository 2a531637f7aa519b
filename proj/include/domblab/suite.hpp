#pragma once

#include "domblab/analytic.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace domblab {

struct RunConfig {
    long n_max = 500;
    long trunc_exact = 50;
    long trunc_analytic = 400;
    unsigned precision_bits = 256;
    unsigned tol_digits = 25;
    bool run_exact = true;
    bool run_analytic = true;
};

struct SuiteReport {
    RunConfig config;
    std::vector<CheckResult> checks;
    long passed = 0;
    long failed = 0;
    long failed_exact = 0;
};

// Runs the full battery of identity checks under the config. Throws only on
// internal logic errors; individual check failures (including analytic
// evaluations that cannot meet their tail bound) land in the report.
SuiteReport run_suite(const RunConfig& config);

// Deterministic JSON serialization; numbers appear as decimal strings.
std::string report_json(const SuiteReport& report);
void write_report(std::ostream& os, const SuiteReport& report,
                  const std::string& format);

} // namespace domblab
