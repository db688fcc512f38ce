#include "gdicke/model.hpp"

#include <cmath>
#include <numbers>

namespace gdicke {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(double v) { return std::isfinite(v); }

double xi_of(double two_j, double g, double k) {
    const double c = std::cos(0.5 * k);
    const double u = (1.0 - g) * (1.0 - g) + 4.0 * g * c * c;
    return two_j * std::sqrt(u > 0.0 ? u : 0.0);
}

double field_scaled(const ModelParams& p, double x) {
    // g(x) = sqrt((lambda x / J)^2 + (epsilon / 2J)^2)
    return std::hypot(p.lambda * x / p.j_coupling, 0.5 * p.epsilon / p.j_coupling);
}

// Extra panel boundaries packed toward k = pi, added when g is close to 1
// so that the sharply curved region around the near-closed gap starts
// resolved instead of being discovered by refinement.
std::vector<double> kink_breaks(double g, int panels) {
    std::vector<double> cuts;
    if (std::abs(g - 1.0) < 0.05) {
        double w = kPi / panels;
        for (int m = 0; m < 6; ++m) {
            w *= 0.5;
            cuts.push_back(kPi - w);
        }
    }
    return cuts;
}

}  // namespace

void ModelParams::validate() const {
    if (!finite(lambda) || !finite(epsilon) || !finite(j_coupling) || !finite(beta))
        throw std::invalid_argument("ModelParams: non-finite value");
    if (!(beta > 0.0)) throw std::invalid_argument("ModelParams: beta must be > 0");
    if (lambda < 0.0) throw std::invalid_argument("ModelParams: lambda must be >= 0");
    if (epsilon < 0.0) throw std::invalid_argument("ModelParams: epsilon must be >= 0");
    if (j_coupling < 0.0) throw std::invalid_argument("ModelParams: j_coupling must be >= 0");
}

namespace detail {

double log_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double tanh_half_ratio(double beta, double xi) {
    const double y = 0.5 * beta * xi;
    if (y < 1e-6) return 0.5 * beta * (1.0 - y * y / 3.0);
    return std::tanh(y) / xi;
}

}  // namespace detail

double effective_field(const ModelParams& params, double x) {
    params.validate();
    if (params.j_coupling == 0.0)
        throw std::domain_error("effective_field: j_coupling = 0, use the Dicke-limit path");
    return field_scaled(params, x);
}

double dispersion(const ModelParams& params, double x, double k) {
    const double g = effective_field(params, x);
    return xi_of(2.0 * params.j_coupling, g, k);
}

double free_energy_integral(const ModelParams& params, double x, const QuadratureSpec& quad) {
    params.validate();
    if (params.j_coupling == 0.0)
        throw std::domain_error("free_energy_integral: j_coupling = 0, use dicke_limit_omega");
    const double g = field_scaled(params, x);
    const double two_j = 2.0 * params.j_coupling;
    const double beta = params.beta;
    const auto integrand = [=](double k) {
        return detail::log_cosh(0.5 * beta * xi_of(two_j, g, k));
    };
    const std::vector<double> cuts = kink_breaks(g, quad.panels);
    return integrate_adaptive(integrand, 0.0, kPi, quad, cuts) / kPi;
}

double omega(const ModelParams& params, double x, const QuadratureSpec& quad) {
    if (params.j_coupling == 0.0) {
        params.validate();
        return dicke_limit_omega(params, x);
    }
    return -params.beta * x * x + free_energy_integral(params, x, quad);
}

double omega_prime(const ModelParams& params, double x, const QuadratureSpec& quad) {
    params.validate();
    if (x == 0.0) return 0.0;  // Omega is even
    if (params.j_coupling == 0.0) return dicke_limit_omega_prime(params, x);
    if (params.lambda == 0.0) return -2.0 * params.beta * x;  // g is x-independent

    const double g = field_scaled(params, x);
    const double two_j = 2.0 * params.j_coupling;
    const double beta = params.beta;
    // I'(x) = (1/pi) Int_0^pi (beta/2) tanh(beta xi/2) * 4 lambda^2 x (g+cos k)/(g xi) dk
    //       = (2 beta lambda^2 x / pi) Int_0^pi [tanh(beta xi/2)/xi] (1 + cos k / g) dk,
    // with the 1/g folded into the integrand so its magnitude stays O(1/epsilon)
    // even at the huge g of the J -> 0 regime.
    const auto integrand = [=](double k) {
        return detail::tanh_half_ratio(beta, xi_of(two_j, g, k)) * (1.0 + std::cos(k) / g);
    };
    const std::vector<double> cuts = kink_breaks(g, quad.panels);
    const double integral = integrate_adaptive(integrand, 0.0, kPi, quad, cuts);
    const double i_prime = 2.0 * beta * params.lambda * params.lambda * x / kPi * integral;
    return -2.0 * beta * x + i_prime;
}

namespace {

// Fallback for epsilon = 0, where the analytic form of Omega''(0) divides by
// g0 = 0: Richardson-extrapolated symmetric second difference of Omega.
double curvature_by_difference(const ModelParams& params, const QuadratureSpec& quad) {
    QuadratureSpec tight = quad;
    tight.abs_tol = std::min(quad.abs_tol, 1e-12);
    tight.max_panels = std::max(quad.max_panels, 1 << 14);
    const double w0 = omega(params, 0.0, tight);
    const auto second = [&](double h) {
        return (omega(params, h, tight) - 2.0 * w0 + omega(params, -h, tight)) / (h * h);
    };
    const double h = 1e-4;
    const double d1 = second(h);
    const double d2 = second(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

double curvature_at_origin(const ModelParams& params, const QuadratureSpec& quad) {
    params.validate();
    if (params.j_coupling == 0.0) return dicke_limit_curvature(params, 0.0);
    if (params.lambda == 0.0) return -2.0 * params.beta;  // I constant in x
    const double g0 = 0.5 * params.epsilon / params.j_coupling;
    if (g0 < 1e-8) return curvature_by_difference(params, quad);

    const double two_j = 2.0 * params.j_coupling;
    const double beta = params.beta;
    const auto integrand = [=](double k) {
        return detail::tanh_half_ratio(beta, xi_of(two_j, g0, k)) * (1.0 + std::cos(k) / g0);
    };
    const std::vector<double> cuts = kink_breaks(g0, quad.panels);
    const double integral = integrate_adaptive(integrand, 0.0, kPi, quad, cuts);
    return -2.0 * beta + 2.0 * beta * params.lambda * params.lambda / kPi * integral;
}

double dicke_limit_omega(const ModelParams& params, double x) {
    params.validate();
    const double h = std::hypot(params.lambda * x, 0.5 * params.epsilon);
    return -params.beta * x * x + detail::log_cosh(params.beta * h);
}

double dicke_limit_omega_prime(const ModelParams& params, double x) {
    params.validate();
    if (x == 0.0) return 0.0;
    const double beta = params.beta;
    const double h = std::hypot(params.lambda * x, 0.5 * params.epsilon);
    // tanh(beta h)/h with the h -> 0 limit beta
    const double t = detail::tanh_half_ratio(2.0 * beta, h);
    return -2.0 * beta * x + beta * params.lambda * params.lambda * x * t;
}

double dicke_limit_curvature(const ModelParams& params, double x) {
    params.validate();
    const double beta = params.beta;
    const double lam2 = params.lambda * params.lambda;
    const double h = std::hypot(params.lambda * x, 0.5 * params.epsilon);
    const double t = detail::tanh_half_ratio(2.0 * beta, h);  // tanh(beta h)/h
    if (h == 0.0) return -2.0 * beta + beta * beta * lam2;
    const double th = t * h;  // tanh(beta h)
    const double sech2 = 1.0 - th * th;
    const double lx2_over_h2 = (params.lambda * x) * (params.lambda * x) / (h * h);
    return -2.0 * beta + beta * lam2 * (t + lx2_over_h2 * (beta * sech2 - t));
}

}  // namespace gdicke
