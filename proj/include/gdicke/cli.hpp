// cli.hpp — command execution and plot-ready CSV/JSON emission for the
// gdicke tool. Parsing lives in tools/gdicke.cpp; everything here is
// driveable from tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gdicke/phase_scan.hpp"

namespace gdicke {

enum class Command {
    omega_curve,
    classify,
    phase_scan,
    maximizer_sweep,
    locate_transition,
    hysteresis,
    validate
};

enum class OutputFormat { csv, json };

/// Uniformly spaced axis samples, lo..hi inclusive.
struct AxisRange {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    std::vector<double> values() const;
    AxisSpec to_axis() const { return {name, values()}; }
};

struct RunConfig {
    Command command = Command::classify;
    ModelParams params;
    QuadratureSpec quad;
    SearchSpec search;

    // omega-curve: sample grid for x. x_hi <= x_lo means automatic
    // (0 .. lambda + 1).
    double x_lo = 0.0;
    double x_hi = 0.0;
    int x_samples = 401;

    // phase-scan / maximizer-sweep (maximizer-sweep pins J x epsilon axes)
    AxisRange axis1{"J", 0.1, 0.6, 6};
    AxisRange axis2{"epsilon", 0.2, 2.0, 46};

    // locate-transition / hysteresis
    SweepSpec sweep{"epsilon", 0.2, 2.0};

    int threads = 0;                  ///< phase-scan worker cap; 0 = hardware
    OutputFormat format = OutputFormat::csv;
    std::string output_path = "-";    ///< "-" writes to stdout, no sidecar

    void validate() const;
};

/// Exit codes: 0 success, 1 invalid configuration, 2 numerical failure,
/// 3 validation-suite failure. Diagnostics go to `diag`. Data output is a
/// deterministic function of the config (12-significant-digit CSV floats,
/// fixed row order); run metadata goes to "<output>.meta.json".
int run(const RunConfig& config, std::ostream& diag);
int run(const RunConfig& config);

/// One row of the `validate` command's oracle suite: pass iff
/// |computed - expected| < tolerance.
struct ValidationCheck {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

std::vector<ValidationCheck> run_validation_suite(const QuadratureSpec& quad);

}  // namespace gdicke
