#include "gdicke/landscape.hpp"

#include <algorithm>
#include <cmath>

namespace gdicke {

namespace {

// Curvature classification threshold, scale-aware in beta.
double degeneracy_tol(const ModelParams& p) { return 1e-8 * p.beta; }

StationaryKind kind_from_curvature(double curvature, double tol) {
    if (std::abs(curvature) < tol) return StationaryKind::degenerate;
    return curvature < 0.0 ? StationaryKind::maximum : StationaryKind::minimum;
}

// Second derivative at an interior root, by central difference of Omega'.
double curvature_at(const ModelParams& params, const QuadratureSpec& quad, double x) {
    const double h = 1e-5;
    const double lo = std::max(x - h, 0.5 * x);  // stay on the half-line
    const double hi = x + (2.0 * h - (x - lo));
    return (omega_prime(params, hi, quad) - omega_prime(params, lo, quad)) / (hi - lo);
}

double refine_root(const ModelParams& params, const QuadratureSpec& quad,
                   const SearchSpec& search, double lo, double hi, double f_lo) {
    for (int iter = 0; iter < 200 && hi - lo > search.root_xtol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = omega_prime(params, mid, quad);
        if (std::abs(f_mid) < search.grad_tol) return mid;
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<StationaryPoint> scan_half_line(const ModelParams& params, const QuadratureSpec& quad,
                                            const SearchSpec& search, double x_max,
                                            int grid_points) {
    const double dedupe = 1e-8;
    std::vector<StationaryPoint> points;

    // The origin is always stationary by evenness.
    const double curv0 = curvature_at_origin(params, quad);
    points.push_back({0.0, omega(params, 0.0, quad), kind_from_curvature(curv0, degeneracy_tol(params)),
                      curv0});

    std::vector<double> xs(grid_points + 1);
    std::vector<double> fp(grid_points + 1);
    for (int i = 0; i <= grid_points; ++i) {
        xs[i] = x_max * static_cast<double>(i) / grid_points;
        // Near the origin the sign of Omega' is the sign of Omega''(0)*x;
        // evaluating at x=0 would return the exact 0.
        fp[i] = (i == 0) ? curv0 : omega_prime(params, xs[i], quad);
    }

    for (int i = 0; i < grid_points; ++i) {
        const double a = fp[i], b = fp[i + 1];
        if (a == 0.0 || (a < 0.0) == (b < 0.0)) continue;
        const double lo = std::max(xs[i], 1e-12 * x_max);
        const double f_lo = (i == 0) ? omega_prime(params, lo, quad) : a;
        if ((f_lo < 0.0) != (b < 0.0)) {
            const double root = refine_root(params, quad, search, lo, xs[i + 1], f_lo);
            if (root > dedupe &&
                (points.size() == 1 || root - points.back().x > dedupe)) {
                const double curv = curvature_at(params, quad, root);
                points.push_back({root, omega(params, root, quad),
                                  kind_from_curvature(curv, degeneracy_tol(params)), curv});
            }
        }
    }
    return points;
}

bool is_max_like(const StationaryPoint& p) {
    // A degenerate origin is a flat-topped maximum at criticality; a
    // degenerate interior point is a max/min merger and is not a maximum.
    return p.kind == StationaryKind::maximum ||
           (p.kind == StationaryKind::degenerate && p.x == 0.0);
}

}  // namespace

void SearchSpec::validate() const {
    if (grid_points < 2) throw std::invalid_argument("SearchSpec: grid_points must be >= 2");
    if (x_max < 0.0) throw std::invalid_argument("SearchSpec: x_max must be >= 0");
    if (!(grad_tol > 0.0) || !(root_xtol > 0.0) || !(value_tol > 0.0) || !(sr_tol > 0.0))
        throw std::invalid_argument("SearchSpec: tolerances must be > 0");
}

std::vector<StationaryPoint> find_stationary_points(const ModelParams& params,
                                                    const QuadratureSpec& quad,
                                                    const SearchSpec& search) {
    params.validate();
    quad.validate();
    search.validate();

    double x_max = search.x_max > 0.0 ? search.x_max : params.lambda + 1.0;
    int doublings = 0;
    while (omega_prime(params, x_max, quad) >= 0.0) {
        if (++doublings > 3)
            throw BracketError("find_stationary_points: Omega' not negative at bracket end after 3 doublings");
        x_max *= 2.0;
    }

    std::vector<StationaryPoint> points =
        scan_half_line(params, quad, search, x_max, search.grid_points);

    // If the origin is a minimum there must be a maximum to its right; a
    // miss means the scan grid was too coarse for this parameter point.
    const bool have_interior_max =
        std::any_of(points.begin() + 1, points.end(), [](const StationaryPoint& p) {
            return p.kind == StationaryKind::maximum;
        });
    if (points.front().kind == StationaryKind::minimum && !have_interior_max)
        points = scan_half_line(params, quad, search, x_max, 2 * search.grid_points);

    return points;
}

LandscapeProfile classify_landscape(const ModelParams& params, const QuadratureSpec& quad,
                                    const SearchSpec& search) {
    LandscapeProfile profile;
    profile.params = params;
    profile.stationary_points = find_stationary_points(params, quad, search);

    int count = 0;
    const StationaryPoint* best = nullptr;
    for (const StationaryPoint& p : profile.stationary_points) {
        if (!is_max_like(p)) continue;
        count += (p.x > 0.0) ? 2 : 1;
        if (best == nullptr || p.omega_value > best->omega_value + search.value_tol) best = &p;
        // ties within value_tol keep the earlier (smaller-x) candidate
    }
    if (best == nullptr) {
        // No maximum among the stationary points (all degenerate/minima);
        // fall back to the highest stationary value to stay well-defined.
        for (const StationaryPoint& p : profile.stationary_points)
            if (best == nullptr || p.omega_value > best->omega_value + search.value_tol) best = &p;
        count = 1;
    }

    profile.maxima_count = count;
    profile.global_maximizer = best->x;
    profile.omega_star = best->omega_value;
    profile.superradiant = best->x > search.sr_tol;
    return profile;
}

std::pair<double, double> global_maximizer(const ModelParams& params, const QuadratureSpec& quad,
                                           const SearchSpec& search) {
    const LandscapeProfile profile = classify_landscape(params, quad, search);
    return {profile.global_maximizer, profile.omega_star};
}

}  // namespace gdicke
