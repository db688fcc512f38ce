#include "gdicke/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gdicke {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::omega_curve: return "omega-curve";
        case Command::classify: return "classify";
        case Command::phase_scan: return "phase-scan";
        case Command::maximizer_sweep: return "maximizer-sweep";
        case Command::locate_transition: return "locate-transition";
        case Command::hysteresis: return "hysteresis";
        case Command::validate: return "validate";
    }
    return "?";
}

ordered_json params_json(const ModelParams& p) {
    return {{"lambda", p.lambda}, {"epsilon", p.epsilon}, {"J", p.j_coupling}, {"beta", p.beta}};
}

const char* kind_name(StationaryKind k) {
    switch (k) {
        case StationaryKind::maximum: return "maximum";
        case StationaryKind::minimum: return "minimum";
        case StationaryKind::degenerate: return "degenerate";
    }
    return "?";
}

struct Document {
    std::string csv;
    ordered_json json;
};

Document render_omega_curve(const RunConfig& cfg) {
    double lo = cfg.x_lo, hi = cfg.x_hi;
    if (!(hi > lo)) {
        lo = 0.0;
        hi = cfg.params.lambda + 1.0;
    }
    Document doc;
    doc.json = {{"command", command_name(cfg.command)}, {"params", params_json(cfg.params)}};
    auto& samples = doc.json["samples"] = ordered_json::array();
    std::ostringstream csv;
    csv << "x,omega\n";
    for (int i = 0; i < cfg.x_samples; ++i) {
        const double x =
            cfg.x_samples == 1 ? lo : lo + (hi - lo) * (static_cast<double>(i) / (cfg.x_samples - 1));
        const double w = omega(cfg.params, x, cfg.quad);
        csv << fmt(x) << ',' << fmt(w) << '\n';
        samples.push_back({{"x", x}, {"omega", w}});
    }
    doc.csv = csv.str();
    return doc;
}

ordered_json profile_json(const LandscapeProfile& profile) {
    ordered_json j;
    j["params"] = params_json(profile.params);
    j["maxima_count"] = profile.maxima_count;
    j["x_star"] = profile.global_maximizer;
    j["omega_star"] = profile.omega_star;
    j["superradiant"] = profile.superradiant;
    auto& pts = j["stationary_points"] = ordered_json::array();
    for (const StationaryPoint& p : profile.stationary_points)
        pts.push_back({{"x", p.x},
                       {"omega", p.omega_value},
                       {"kind", kind_name(p.kind)},
                       {"curvature", p.curvature}});
    return j;
}

Document render_classify(const RunConfig& cfg) {
    const LandscapeProfile profile = classify_landscape(cfg.params, cfg.quad, cfg.search);
    Document doc;
    std::ostringstream csv;
    csv << "lambda,epsilon,J,beta,maxima_count,x_star,omega_star,superradiant\n";
    csv << fmt(profile.params.lambda) << ',' << fmt(profile.params.epsilon) << ','
        << fmt(profile.params.j_coupling) << ',' << fmt(profile.params.beta) << ','
        << profile.maxima_count << ',' << fmt(profile.global_maximizer) << ','
        << fmt(profile.omega_star) << ',' << (profile.superradiant ? 1 : 0) << '\n';
    doc.csv = csv.str();
    doc.json = {{"command", command_name(cfg.command)}};
    doc.json.update(profile_json(profile));
    return doc;
}

Document render_grid(const RunConfig& cfg, const AxisSpec& a1, const AxisSpec& a2) {
    const PhaseGrid grid = scan_grid(a1, a2, cfg.params, cfg.quad, cfg.search, cfg.threads);
    Document doc;
    std::ostringstream csv;
    csv << "axis1,axis2,maxima_count,x_star,omega_star,superradiant\n";
    for (std::size_t i1 = 0; i1 < a1.values.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < a2.values.size(); ++i2) {
            const GridCell& cell = grid.cell(i1, i2);
            csv << fmt(a1.values[i1]) << ',' << fmt(a2.values[i2]) << ','
                << cell.maxima_count << ',' << fmt(cell.x_star) << ',' << fmt(cell.omega_star)
                << ',' << (cell.superradiant ? 1 : 0) << '\n';
        }
    }
    doc.csv = csv.str();
    doc.json = {{"command", command_name(cfg.command)},
                {"axis1", {{"name", a1.name}, {"values", a1.values}}},
                {"axis2", {{"name", a2.name}, {"values", a2.values}}},
                {"fixed", params_json(cfg.params)}};
    auto& cells = doc.json["cells"] = ordered_json::array();
    for (const GridCell& cell : grid.cells) {
        ordered_json c = {{"maxima_count", cell.maxima_count},
                          {"x_star", cell.x_star},
                          {"omega_star", cell.omega_star},
                          {"superradiant", cell.superradiant}};
        if (!cell.ok) c["error"] = cell.error;
        cells.push_back(std::move(c));
    }
    int failures = 0;
    for (const GridCell& cell : grid.cells)
        if (!cell.ok) ++failures;
    doc.json["failed_cells"] = failures;
    return doc;
}

Document render_transition(const RunConfig& cfg) {
    const TransitionPoint t = locate_transition(cfg.sweep, cfg.params, cfg.quad, cfg.search);
    Document doc;
    std::ostringstream csv;
    csv << "parameter,value,order,jump\n";
    csv << t.swept_parameter << ',' << fmt(t.value) << ','
        << (t.order == TransitionOrder::first ? "first" : "second") << ',' << fmt(t.jump) << '\n';
    doc.csv = csv.str();
    doc.json = {{"command", command_name(cfg.command)},
                {"parameter", t.swept_parameter},
                {"value", t.value},
                {"order", t.order == TransitionOrder::first ? "first" : "second"},
                {"jump", t.jump},
                {"branch_omegas", t.branch_omegas}};
    return doc;
}

ordered_json branch_json(const HysteresisBranch& b) {
    ordered_json j;
    j["direction"] = b.direction == SweepDirection::forward ? "forward" : "backward";
    j["terminus"] = b.terminus;
    auto& samples = j["samples"] = ordered_json::array();
    for (const BranchSample& s : b.samples)
        samples.push_back({{"parameter", s.parameter},
                           {"x", s.x},
                           {"omega", s.omega_value},
                           {"curvature", s.curvature}});
    return j;
}

Document render_hysteresis(const RunConfig& cfg) {
    const auto [forward, backward] = trace_hysteresis(cfg.sweep, cfg.params, cfg.quad, cfg.search);
    Document doc;
    std::ostringstream csv;
    csv << "direction,parameter,x_branch,omega_branch\n";
    for (const HysteresisBranch* b : {&forward, &backward}) {
        const char* dir = b->direction == SweepDirection::forward ? "forward" : "backward";
        for (const BranchSample& s : b->samples)
            csv << dir << ',' << fmt(s.parameter) << ',' << fmt(s.x) << ',' << fmt(s.omega_value)
                << '\n';
    }
    doc.csv = csv.str();
    doc.json = {{"command", command_name(cfg.command)},
                {"parameter", cfg.sweep.parameter},
                {"forward", branch_json(forward)},
                {"backward", branch_json(backward)}};
    return doc;
}

Document render_validate(const RunConfig& cfg, bool& all_pass) {
    const std::vector<ValidationCheck> checks = run_validation_suite(cfg.quad);
    Document doc;
    std::ostringstream csv;
    csv << "check,computed,expected,tolerance,status\n";
    all_pass = true;
    doc.json = {{"command", command_name(cfg.command)}};
    auto& arr = doc.json["checks"] = ordered_json::array();
    for (const ValidationCheck& c : checks) {
        all_pass = all_pass && c.pass;
        csv << c.name << ',' << fmt(c.computed) << ',' << fmt(c.expected) << ','
            << fmt(c.tolerance) << ',' << (c.pass ? "pass" : "fail") << '\n';
        arr.push_back({{"name", c.name},
                       {"computed", c.computed},
                       {"expected", c.expected},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    doc.csv = csv.str();
    return doc;
}

void write_output(const RunConfig& cfg, const Document& doc) {
    const std::string payload =
        cfg.format == OutputFormat::csv ? doc.csv : doc.json.dump(2) + "\n";
    if (cfg.output_path == "-") {
        std::cout << payload;
        return;
    }
    {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output path: " + cfg.output_path);
        out << payload;
    }
    // Run metadata (including the timestamp) stays out of the data file so
    // identical configs produce identical bytes.
    ordered_json meta;
    meta["command"] = command_name(cfg.command);
    meta["params"] = params_json(cfg.params);
    meta["quad"] = {{"panels", cfg.quad.panels},
                    {"abs_tol", cfg.quad.abs_tol},
                    {"max_panels", cfg.quad.max_panels}};
    meta["threads"] = cfg.threads;
    meta["format"] = cfg.format == OutputFormat::csv ? "csv" : "json";
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%FT%TZ", std::gmtime(&now));
    meta["generated_at"] = stamp;
    std::ofstream side(cfg.output_path + ".meta.json", std::ios::binary);
    if (side) side << meta.dump(2) << "\n";
}

}  // namespace

std::vector<double> AxisRange::values() const {
    if (count < 1) throw std::invalid_argument("AxisRange: count must be >= 1");
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = count == 1 ? lo : lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
    return v;
}

void RunConfig::validate() const {
    params.validate();
    quad.validate();
    search.validate();
    if (threads < 0) throw std::invalid_argument("RunConfig: threads must be >= 0");
    switch (command) {
        case Command::omega_curve:
            if (x_samples < 1) throw std::invalid_argument("RunConfig: x_samples must be >= 1");
            break;
        case Command::phase_scan:
        case Command::maximizer_sweep:
            axis1.to_axis().validate();
            axis2.to_axis().validate();
            if (axis1.name == axis2.name)
                throw std::invalid_argument("RunConfig: axes must differ");
            break;
        case Command::locate_transition:
        case Command::hysteresis:
            sweep.validate();
            break;
        default:
            break;
    }
}

int run(const RunConfig& config, std::ostream& diag) {
    try {
        config.validate();
    } catch (const std::exception& e) {
        diag << "invalid configuration: " << e.what() << "\n";
        return 1;
    }
    try {
        Document doc;
        bool all_pass = true;
        int grid_failures = 0;
        switch (config.command) {
            case Command::omega_curve: doc = render_omega_curve(config); break;
            case Command::classify: doc = render_classify(config); break;
            case Command::phase_scan: doc = render_grid(config, config.axis1.to_axis(),
                                                        config.axis2.to_axis()); break;
            case Command::maximizer_sweep: {
                AxisRange a1 = config.axis1;
                AxisRange a2 = config.axis2;
                a1.name = "J";
                a2.name = "epsilon";
                doc = render_grid(config, a1.to_axis(), a2.to_axis());
                break;
            }
            case Command::locate_transition: doc = render_transition(config); break;
            case Command::hysteresis: doc = render_hysteresis(config); break;
            case Command::validate: doc = render_validate(config, all_pass); break;
        }
        if (doc.json.contains("failed_cells")) {
            grid_failures = doc.json["failed_cells"].get<int>();
            if (grid_failures > 0) {
                const auto& cells = doc.json["cells"];
                for (std::size_t i = 0; i < cells.size(); ++i)
                    if (cells[i].contains("error"))
                        diag << "cell " << i << " failed: " << cells[i]["error"].get<std::string>()
                             << "\n";
            }
        }
        write_output(config, doc);
        if (!all_pass) return 3;
        if (grid_failures > 0) return 2;
        return 0;
    } catch (const std::invalid_argument& e) {
        diag << "invalid configuration: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        diag << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

int run(const RunConfig& config) { return run(config, std::cerr); }

}  // namespace gdicke
