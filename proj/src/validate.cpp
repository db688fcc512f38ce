// validate.cpp — the `validate` command's oracle suite: quadrature vs dense
// momentum sums, chain ED against hand-solved spectra and the continuum
// limit, cavity ED sanity, Dicke-limit criticality and derivative
// consistency. Everything here recomputes its expectation independently of
// the code path under test.
#include <cmath>
#include <numbers>
#include <random>

#include "gdicke/cli.hpp"
#include "gdicke/oracle.hpp"

namespace gdicke {

namespace {

ValidationCheck make(const std::string& name, double computed, double expected, double tol) {
    return {name, computed, expected, tol, std::abs(computed - expected) < tol};
}

// Plain 2^16-point Riemann sum over the periodic Brillouin zone, written
// without the quadrature machinery.
double dense_k_average(const ModelParams& p, double x) {
    const int n = 1 << 16;
    double sum = 0.0;
    for (int m = 0; m < n; ++m) {
        const double k = 2.0 * std::numbers::pi * m / n;
        const double y = 0.5 * p.beta * dispersion(p, x, k);
        sum += std::abs(y) + std::log1p(std::exp(-2.0 * std::abs(y))) - std::numbers::ln2;
    }
    return sum / n;
}

// lambda where curvature_at_origin changes sign at tiny J, by bisection.
double critical_lambda_by_curvature(double epsilon, double beta, const QuadratureSpec& quad) {
    ModelParams p{0.0, epsilon, 1e-6, beta};
    double lo = 1e-3, hi = 8.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        p.lambda = mid;
        if (curvature_at_origin(p, quad) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Maximizer of the closed-form Dicke-limit Omega, by bisecting its
// derivative on (0, lambda].
double dicke_maximizer_scalar(const ModelParams& p) {
    double lo = 1e-9, hi = p.lambda + 1.0;
    if (dicke_limit_omega_prime(p, lo) <= 0.0) return 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (dicke_limit_omega_prime(p, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<ValidationCheck> run_validation_suite(const QuadratureSpec& quad) {
    std::vector<ValidationCheck> checks;

    // Quadrature against the dense discrete-k sum (log 2 removed).
    const ModelParams probe_pts[] = {
        {1.3, 1.0, 0.5, 100.0}, {0.7, 0.4, 0.2, 10.0}, {1.5, 2.0, 0.6, 1.0},
        {0.5, 0.9, 0.1, 100.0}, {1.1, 1.4, 0.35, 10.0},
    };
    const double probe_x[] = {0.4, 0.1, 0.9, 0.55, 0.25};
    for (int i = 0; i < 5; ++i) {
        const double via_quad = free_energy_integral(probe_pts[i], probe_x[i], quad);
        const double via_sum = dense_k_average(probe_pts[i], probe_x[i]);
        checks.push_back(make("quad_vs_dense_k_" + std::to_string(i + 1), via_quad, via_sum, 1e-8));
    }
    for (int i = 0; i < 2; ++i) {
        const double via_module =
            discrete_k_free_energy(probe_pts[i], probe_x[i], 1 << 16) - std::numbers::ln2;
        checks.push_back(make("module_dense_k_" + std::to_string(i + 1), via_module,
                              dense_k_average(probe_pts[i], probe_x[i]), 1e-10));
    }

    // Dicke-limit criticality and maximizer.
    checks.push_back(make("dicke_lambda_c", critical_lambda_by_curvature(1.0, 100.0, quad),
                          dicke_critical_coupling(1.0, 100.0), 1e-3));
    {
        const ModelParams p{1.3, 1.0, 1e-6, 100.0};
        checks.push_back(make("dicke_maximizer", global_maximizer(p, quad).first,
                              dicke_maximizer_scalar(p), 1e-3));
    }

    // Chain ED against hand-solved spectra.
    {
        const ModelParams p{0.0, 0.0, 0.7, 1.0};
        const double f2 = spin_chain_ed(p, {2, 0.0});
        const double expected = 0.5 * std::log(4.0 * std::cosh(2.0 * p.beta * p.j_coupling));
        checks.push_back(make("chain_ed_two_site_yy", f2, expected, 1e-12));
    }
    {
        const ModelParams p{1.0, 1.3, 0.0, 2.0};
        const double f = spin_chain_ed(p, {3, 0.0});  // lambda*x = 0, J = 0
        const double expected = std::log(2.0 * std::cosh(0.5 * p.beta * p.epsilon));
        checks.push_back(make("chain_ed_free_spins", f, expected, 1e-12));
    }

    // Chain ED converging to the continuum I(x) + log 2.
    {
        const ModelParams p{1.3, 1.0, 0.5, 1.0};
        const double x = 0.4;
        const double target = free_energy_integral(p, x, quad) + std::numbers::ln2;
        const double diff6 = std::abs(spin_chain_ed(p, {6, x}) - target);
        const double diff10 = std::abs(spin_chain_ed(p, {10, x}) - target);
        checks.push_back(make("chain_ed_convergence", diff10, 0.0, diff6));
    }

    // Cavity ED: free-mode occupation, parity, truncation invariance.
    {
        const ModelParams p{0.0, 1.0, 0.3, 1.0};
        const CavityObservables obs = cavity_ed(p, {2, 30, false});
        checks.push_back(make("cavity_free_mode", obs.mean_photons,
                              1.0 / (std::exp(p.beta) - 1.0), 1e-9));
    }
    {
        const ModelParams p{0.5, 1.0, 0.3, 100.0};
        const CavityObservables obs = cavity_ed(p, {3, 14, true});
        checks.push_back(make("cavity_parity", obs.ground_displacement, 0.0, 1e-8));
        checks.push_back(make("cavity_truncation", obs.truncation_shift, 0.0, 1e-6));
    }

    // Analytic Omega' against central differences, g kept away from 0 and 1.
    {
        std::mt19937 rng(814);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        QuadratureSpec tight = quad;
        tight.abs_tol = 1e-13;
        tight.max_panels = std::max(quad.max_panels, 1 << 14);
        double worst = 0.0;
        int kept = 0;
        while (kept < 10) {
            const ModelParams p{0.5 + u(rng), 0.2 + 1.8 * u(rng), 0.1 + 0.5 * u(rng),
                                u(rng) < 0.5 ? 10.0 : 100.0};
            const double x = 0.1 + 0.9 * u(rng);
            const double g = effective_field(p, x);
            if (g < 0.05 || std::abs(g - 1.0) < 0.05) continue;
            ++kept;
            const double h = 1e-5;
            const double fd = (omega(p, x + h, tight) - omega(p, x - h, tight)) / (2.0 * h);
            const double an = omega_prime(p, x, tight);
            worst = std::max(worst, std::abs(an - fd) / std::max(1.0, std::abs(an)));
        }
        checks.push_back(make("gradient_vs_fd", worst, 0.0, 1e-6));
    }

    // Evenness and dispersion bounds.
    {
        std::mt19937 rng(299);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst_even = 0.0, worst_bound = 0.0;
        for (int i = 0; i < 5; ++i) {
            const ModelParams p{1.5 * u(rng), 2.0 * u(rng), 0.1 + 0.5 * u(rng), 1.0 + 99.0 * u(rng)};
            const double x = -3.0 + 6.0 * u(rng);
            worst_even = std::max(worst_even, std::abs(free_energy_integral(p, x, quad) -
                                                       free_energy_integral(p, -x, quad)));
            const double g = effective_field(p, x);
            const double lo = 2.0 * p.j_coupling * std::abs(1.0 - g);
            const double hi = 2.0 * p.j_coupling * (1.0 + g);
            for (int m = 0; m <= 32; ++m) {
                const double xi = dispersion(p, x, 2.0 * std::numbers::pi * m / 32.0);
                worst_bound = std::max(worst_bound, std::max(lo - xi, xi - hi));
            }
        }
        checks.push_back(make("omega_evenness", worst_even, 0.0, 1e-12));
        checks.push_back(make("dispersion_bounds", worst_bound, 0.0, 1e-12));
    }

    return checks;
}

}  // namespace gdicke
