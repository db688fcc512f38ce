#include "gdicke/phase_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace gdicke {

namespace {

constexpr double kParamResolution = 1e-6;
constexpr double kJumpTol = 1e-3;
constexpr double kMinStep = 1e-7;

bool known_param(const std::string& name) {
    return name == "lambda" || name == "epsilon" || name == "J" || name == "beta";
}

GridCell classify_cell(const ModelParams& params, const QuadratureSpec& quad,
                       const SearchSpec& search) {
    GridCell cell;
    try {
        const LandscapeProfile profile = classify_landscape(params, quad, search);
        cell.maxima_count = profile.maxima_count;
        cell.x_star = profile.global_maximizer;
        cell.omega_star = profile.omega_star;
        cell.superradiant = profile.superradiant;
    } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
        cell.x_star = cell.omega_star = std::nan("");
        cell.maxima_count = -1;
    }
    return cell;
}

// Sorted list of the profile's maxima (degenerate origin included).
struct Maximum {
    double x;
    double omega_value;
    double curvature;
};

std::vector<Maximum> maxima_of(const LandscapeProfile& profile) {
    std::vector<Maximum> out;
    for (const StationaryPoint& p : profile.stationary_points) {
        const bool max_like = p.kind == StationaryKind::maximum ||
                              (p.kind == StationaryKind::degenerate && p.x == 0.0);
        if (max_like) out.push_back({p.x, p.omega_value, p.curvature});
    }
    return out;
}

}  // namespace

void AxisSpec::validate() const {
    if (!known_param(name))
        throw std::invalid_argument("AxisSpec: unknown parameter '" + name +
                                    "' (expected lambda, epsilon, J or beta)");
    if (values.empty()) throw std::invalid_argument("AxisSpec: no sample values");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("AxisSpec: non-finite sample value");
    if (!std::is_sorted(values.begin(), values.end()))
        throw std::invalid_argument("AxisSpec: values must be sorted ascending");
}

void SweepSpec::validate() const {
    if (!known_param(parameter))
        throw std::invalid_argument("SweepSpec: unknown parameter '" + parameter + "'");
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("SweepSpec: need finite lo < hi");
}

ModelParams with_param(ModelParams params, const std::string& name, double value) {
    if (name == "lambda") params.lambda = value;
    else if (name == "epsilon") params.epsilon = value;
    else if (name == "J") params.j_coupling = value;
    else if (name == "beta") params.beta = value;
    else throw std::invalid_argument("with_param: unknown parameter '" + name + "'");
    return params;
}

double get_param(const ModelParams& params, const std::string& name) {
    if (name == "lambda") return params.lambda;
    if (name == "epsilon") return params.epsilon;
    if (name == "J") return params.j_coupling;
    if (name == "beta") return params.beta;
    throw std::invalid_argument("get_param: unknown parameter '" + name + "'");
}

PhaseGrid scan_grid(const AxisSpec& axis1, const AxisSpec& axis2, const ModelParams& fixed,
                    const QuadratureSpec& quad, const SearchSpec& search, int threads) {
    axis1.validate();
    axis2.validate();
    if (axis1.name == axis2.name)
        throw std::invalid_argument("scan_grid: axes must name distinct parameters");
    fixed.validate();

    PhaseGrid grid;
    grid.axis1 = axis1;
    grid.axis2 = axis2;
    grid.fixed = fixed;
    const std::size_t n1 = axis1.values.size();
    const std::size_t n2 = axis2.values.size();
    grid.cells.resize(n1 * n2);

    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(n1 * n2)));

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t idx = next.fetch_add(1); idx < grid.cells.size();
             idx = next.fetch_add(1)) {
            const std::size_t i1 = idx / n2;
            const std::size_t i2 = idx % n2;
            ModelParams p = with_param(fixed, axis1.name, axis1.values[i1]);
            p = with_param(p, axis2.name, axis2.values[i2]);
            grid.cells[idx] = classify_cell(p, quad, search);
        }
    };

    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return grid;
}

TransitionPoint locate_transition(const SweepSpec& sweep, const ModelParams& fixed,
                                  const QuadratureSpec& quad, const SearchSpec& search) {
    sweep.validate();
    fixed.validate();

    const auto profile_at = [&](double p) {
        return classify_landscape(with_param(fixed, sweep.parameter, p), quad, search);
    };
    const auto flag_at = [&](double p) { return profile_at(p).superradiant; };
    const auto x_star_at = [&](double p) { return profile_at(p).global_maximizer; };

    double lo = sweep.lo, hi = sweep.hi;
    const bool flag_lo = flag_at(lo);
    if (flag_lo == flag_at(hi))
        throw BracketError("locate_transition: superradiant flag agrees at both bracket ends");

    // Bisect a little past the nominal resolution; the jump extrapolation
    // below is only as good as the located point.
    while (hi - lo > 0.25 * kParamResolution) {
        const double mid = 0.5 * (lo + hi);
        if (flag_at(mid) == flag_lo) lo = mid;
        else hi = mid;
    }
    double value = 0.5 * (lo + hi);

    // x*^2 is linear in the parameter for square-root growth, so a two-point
    // linear extrapolation to `value` vanishes for a continuous transition
    // and recovers the branch offset for a discontinuous one.
    const auto extrapolated_sq = [&](double sign) {
        const double q1 = std::pow(x_star_at(value + sign * 10.0 * kParamResolution), 2);
        const double q2 = std::pow(x_star_at(value + sign * 20.0 * kParamResolution), 2);
        return std::max(0.0, 2.0 * q1 - q2);
    };
    const double above = std::sqrt(extrapolated_sq(+1.0));
    const double below = std::sqrt(extrapolated_sq(-1.0));

    TransitionPoint result;
    result.swept_parameter = sweep.parameter;
    result.jump = std::abs(above - below);
    result.order = result.jump > kJumpTol ? TransitionOrder::first : TransitionOrder::second;

    if (result.order == TransitionOrder::first) {
        // Refine to the Omega crossing of the two competing maxima, which is
        // better conditioned than the argmax flip.
        const auto omega_gap = [&](double p) -> double {
            const std::vector<Maximum> maxima = maxima_of(profile_at(p));
            if (maxima.size() < 2) return std::nan("");
            return maxima.back().omega_value - maxima.front().omega_value;
        };
        double glo = value - 20.0 * kParamResolution;
        double ghi = value + 20.0 * kParamResolution;
        double f_lo = omega_gap(glo), f_hi = omega_gap(ghi);
        if (std::isfinite(f_lo) && std::isfinite(f_hi) && (f_lo < 0.0) != (f_hi < 0.0)) {
            while (ghi - glo > 0.25 * kParamResolution) {
                const double mid = 0.5 * (glo + ghi);
                const double f_mid = omega_gap(mid);
                if (!std::isfinite(f_mid)) break;
                if ((f_mid < 0.0) == (f_lo < 0.0)) {
                    glo = mid;
                    f_lo = f_mid;
                } else {
                    ghi = mid;
                }
            }
            value = 0.5 * (glo + ghi);
        }
    }

    result.value = value;
    for (const Maximum& m : maxima_of(profile_at(value)))
        result.branch_omegas.push_back(m.omega_value);
    return result;
}

namespace {

// Advance one branch from `from` to `to` (either direction), recording a
// sample at every grid point. Returns false once the followed maximum
// disappears; `state` then holds the last good position.
struct BranchState {
    double parameter;
    double x;
};

bool continue_to(const ModelParams& fixed, const SweepSpec& sweep, const QuadratureSpec& quad,
                 const SearchSpec& search, BranchState& state, double target,
                 BranchSample* sample_out) {
    double step = target - state.parameter;
    while (state.parameter != target) {
        const double p_try = (std::abs(step) >= std::abs(target - state.parameter))
                                 ? target
                                 : state.parameter + step;
        const LandscapeProfile profile =
            classify_landscape(with_param(fixed, sweep.parameter, p_try), quad, search);
        const std::vector<Maximum> maxima = maxima_of(profile);

        const Maximum* nearest = nullptr;
        for (const Maximum& m : maxima)
            if (nearest == nullptr || std::abs(m.x - state.x) < std::abs(nearest->x - state.x))
                nearest = &m;

        const double window = 0.04 + 0.25 * state.x;
        if (nearest != nullptr && std::abs(nearest->x - state.x) <= window) {
            state.parameter = p_try;
            state.x = nearest->x;
            if (p_try == target && sample_out != nullptr) {
                sample_out->parameter = p_try;
                sample_out->x = nearest->x;
                sample_out->omega_value = nearest->omega_value;
                sample_out->curvature = nearest->curvature;
            }
        } else {
            step *= 0.5;
            if (std::abs(step) < kMinStep) return false;
        }
    }
    return true;
}

HysteresisBranch trace_branch(const SweepSpec& sweep, const ModelParams& fixed,
                              const QuadratureSpec& quad, const SearchSpec& search,
                              SweepDirection direction) {
    constexpr int kGridIntervals = 200;
    HysteresisBranch branch;
    branch.swept_parameter = sweep.parameter;
    branch.direction = direction;

    // Shared forward/backward grid so the two branches sample identical
    // parameter values.
    std::vector<double> grid(kGridIntervals + 1);
    for (int i = 0; i <= kGridIntervals; ++i)
        grid[i] = sweep.lo + (sweep.hi - sweep.lo) * (static_cast<double>(i) / kGridIntervals);
    if (direction == SweepDirection::backward) std::reverse(grid.begin(), grid.end());

    const LandscapeProfile start =
        classify_landscape(with_param(fixed, sweep.parameter, grid.front()), quad, search);
    const std::vector<Maximum> start_maxima = maxima_of(start);
    const Maximum* global = nullptr;
    for (const Maximum& m : start_maxima)
        if (global == nullptr || m.omega_value > global->omega_value) global = &m;
    if (global == nullptr)
        throw ContinuationError("trace_hysteresis: no maximum at the sweep start");

    branch.samples.push_back({grid.front(), global->x, global->omega_value, global->curvature});
    BranchState state{grid.front(), global->x};

    for (std::size_t i = 1; i < grid.size(); ++i) {
        BranchSample sample;
        if (!continue_to(fixed, sweep, quad, search, state, grid[i], &sample)) {
            branch.terminus = state.parameter;
            return branch;
        }
        branch.samples.push_back(sample);
    }
    branch.terminus = grid.back();
    return branch;
}

}  // namespace

std::pair<HysteresisBranch, HysteresisBranch> trace_hysteresis(const SweepSpec& sweep,
                                                               const ModelParams& fixed,
                                                               const QuadratureSpec& quad,
                                                               const SearchSpec& search) {
    sweep.validate();
    fixed.validate();
    HysteresisBranch forward = trace_branch(sweep, fixed, quad, search, SweepDirection::forward);
    HysteresisBranch backward = trace_branch(sweep, fixed, quad, search, SweepDirection::backward);
    return {std::move(forward), std::move(backward)};
}

}  // namespace gdicke
