// landscape.hpp — stationary points of Omega(x) on the half-line x >= 0,
// regime classification (one/two/three local maxima on the full line) and
// the global maximizer. Omega is even, so the search is confined to x >= 0
// and mirrored.
#pragma once

#include <utility>
#include <vector>

#include "gdicke/model.hpp"

namespace gdicke {

/// Thrown when the search bracket cannot be grown to enclose all structure.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchSpec {
    int grid_points = 400;    ///< initial Omega' scan grid on [0, x_max]
    double x_max = 0.0;       ///< 0 = automatic (lambda + 1, grown as needed)
    double grad_tol = 1e-10;  ///< |Omega'| early-exit for root refinement
    double root_xtol = 1e-10; ///< bracket width for root refinement
    double value_tol = 1e-9;  ///< Omega ties below this resolve to smaller x
    double sr_tol = 1e-6;     ///< maximizer above this counts as superradiant

    void validate() const;
};

enum class StationaryKind { maximum, minimum, degenerate };

struct StationaryPoint {
    double x = 0.0;
    double omega_value = 0.0;
    StationaryKind kind = StationaryKind::maximum;
    double curvature = 0.0;
};

/// Result of classifying one parameter point. maxima_count follows the
/// full-line mirroring rule: a maximum at x* > 0 counts twice (+-x*), a
/// maximum at the origin counts once.
struct LandscapeProfile {
    ModelParams params;
    std::vector<StationaryPoint> stationary_points;  // ascending x, half-line
    int maxima_count = 0;
    double global_maximizer = 0.0;
    double omega_star = 0.0;
    bool superradiant = false;
};

/// All stationary points of Omega on [0, x_max]: every sign change of
/// Omega' on the scan grid refined by bisection, plus the origin (always
/// stationary by symmetry, classified by curvature_at_origin). The bracket
/// end is verified to have Omega' < 0 and is doubled up to three times
/// otherwise (BracketError beyond that).
std::vector<StationaryPoint> find_stationary_points(const ModelParams& params,
                                                    const QuadratureSpec& quad,
                                                    const SearchSpec& search = {});

LandscapeProfile classify_landscape(const ModelParams& params, const QuadratureSpec& quad,
                                    const SearchSpec& search = {});

/// (x_star, Omega(x_star)); Omega ties within value_tol resolve toward the
/// smaller x, so exact first-order coexistence reports the inner branch.
std::pair<double, double> global_maximizer(const ModelParams& params, const QuadratureSpec& quad,
                                           const SearchSpec& search = {});

}  // namespace gdicke
