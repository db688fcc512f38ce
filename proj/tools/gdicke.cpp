// gdicke — command-line front end: omega curves, landscape classification,
// phase-diagram grids, transition location, hysteresis traces and the
// self-validation suite, emitted as CSV or JSON.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gdicke/cli.hpp"

namespace {

bool parse_axis(const std::string& text, gdicke::AxisRange& out) {
    std::istringstream in(text);
    std::string name, lo, hi, count;
    if (!std::getline(in, name, ':') || !std::getline(in, lo, ':') ||
        !std::getline(in, hi, ':') || !std::getline(in, count))
        return false;
    try {
        out = {name, std::stod(lo), std::stod(hi), std::stoi(count)};
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    gdicke::RunConfig cfg;
    std::string axis1_text = "J:0.1:0.6:6";
    std::string axis2_text = "epsilon:0.2:2.0:46";
    std::string format_text = "csv";

    CLI::App app{"Free-energy landscape scanner for a cavity-coupled qubit chain "
                 "(Omega(x) = -beta x^2 + I(x), cavity frequency = 1)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file mirroring the long options; "
                                   "command-line flags win");

    app.add_option("--lambda", cfg.params.lambda, "spin-boson coupling")->capture_default_str();
    app.add_option("--epsilon", cfg.params.epsilon, "qubit level splitting")->capture_default_str();
    app.add_option("--J", cfg.params.j_coupling, "nearest-neighbour YY coupling")
        ->capture_default_str();
    app.add_option("--beta", cfg.params.beta, "inverse temperature")->capture_default_str();

    app.add_option("--panels", cfg.quad.panels, "starting quadrature panels on [0, pi]")
        ->capture_default_str();
    app.add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute tolerance")
        ->capture_default_str();
    app.add_option("--max-panels", cfg.quad.max_panels, "quadrature refinement cap")
        ->capture_default_str();
    app.add_option("--scan-points", cfg.search.grid_points,
                   "stationary-point scan grid on [0, x_max]")
        ->capture_default_str();

    app.add_option("--x-min", cfg.x_lo, "omega-curve: first x sample")->capture_default_str();
    app.add_option("--x-max", cfg.x_hi,
                   "omega-curve: last x sample (<= x-min selects 0..lambda+1)")
        ->capture_default_str();
    app.add_option("--x-samples", cfg.x_samples, "omega-curve: sample count")
        ->capture_default_str();

    app.add_option("--axis1", axis1_text, "grid axis 1 as name:lo:hi:count")
        ->capture_default_str();
    app.add_option("--axis2", axis2_text, "grid axis 2 as name:lo:hi:count")
        ->capture_default_str();

    app.add_option("--sweep", cfg.sweep.parameter, "swept parameter (lambda, epsilon, J, beta)")
        ->capture_default_str();
    app.add_option("--lo", cfg.sweep.lo, "sweep bracket low end")->capture_default_str();
    app.add_option("--hi", cfg.sweep.hi, "sweep bracket high end")->capture_default_str();

    app.add_option("--threads", cfg.threads, "phase-scan worker threads (0 = hardware)")
        ->envname("GDICKE_THREADS")
        ->capture_default_str();
    app.add_option("--format", format_text, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output_path, "output file path ('-' = stdout)")
        ->capture_default_str();

    const auto add_command = [&](const char* name, const char* desc, gdicke::Command command) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        sub->callback([&cfg, command] { cfg.command = command; });
        return sub;
    };
    add_command("omega-curve", "sample Omega(x) on an x grid", gdicke::Command::omega_curve);
    add_command("classify", "count the local maxima and find the global maximizer",
                gdicke::Command::classify);
    add_command("phase-scan", "classify every cell of a 2-D parameter grid",
                gdicke::Command::phase_scan);
    add_command("maximizer-sweep", "phase-scan with axes pinned to J x epsilon",
                gdicke::Command::maximizer_sweep);
    add_command("locate-transition", "bisect the superradiant boundary along one parameter",
                gdicke::Command::locate_transition);
    add_command("hysteresis", "trace forward/backward maximizer branches across a sweep",
                gdicke::Command::hysteresis);
    add_command("validate", "run the oracle suite and report pass/fail rows",
                gdicke::Command::validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (!parse_axis(axis1_text, cfg.axis1) || !parse_axis(axis2_text, cfg.axis2)) {
        std::cerr << "invalid configuration: axis spec must be name:lo:hi:count\n";
        return 1;
    }
    cfg.format = format_text == "json" ? gdicke::OutputFormat::json : gdicke::OutputFormat::csv;

    return gdicke::run(cfg);
}
