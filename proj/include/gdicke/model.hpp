// model.hpp — free-energy landscape of a qubit array with nearest-neighbour
// transverse (YY) coupling inside a single cavity mode, in the thermodynamic
// limit. Everything is expressed in units where the cavity term a'a has
// coefficient 1; the order parameter x is the rescaled coherent-field
// amplitude Re(alpha)/sqrt(N).
//
// The rotated spin chain behind these formulas is a transverse-field Ising
// chain with effective field g(x) = sqrt((lambda*x/J)^2 + (epsilon/2J)^2)
// and quasiparticle energies xi_k(x) = 2J*sqrt(1 + g^2 + 2g cos k). The
// per-spin free-energy functional is
//
//     Omega(x) = -beta*x^2 + I(x),
//     I(x)     = (1/2pi) Int_0^{2pi} log cosh(beta*xi_k(x)/2) dk,
//
// with the constant log 2 of the trace dropped throughout (it only shifts
// Omega by a constant). The k-integral is evaluated on [0, pi] and doubled.
#pragma once

#include <stdexcept>

#include "gdicke/quadrature.hpp"

namespace gdicke {

/// Thermodynamic couplings. j_coupling = 0 is legal for the closed-form
/// Dicke-limit path only; the chain formulas divide by J.
struct ModelParams {
    double lambda = 1.3;      ///< spin-boson coupling
    double epsilon = 1.0;     ///< qubit level splitting
    double j_coupling = 0.5;  ///< nearest-neighbour YY coupling
    double beta = 100.0;      ///< inverse temperature

    void validate() const;
};

/// Effective transverse field g(x) of the rotated chain, in units of J.
/// Even in x, bounded below by epsilon/(2J). Throws std::domain_error when
/// j_coupling = 0 (use the Dicke-limit path instead).
double effective_field(const ModelParams& params, double x);

/// Quasiparticle energy xi_k(x) = 2J*sqrt(1 + g^2 + 2g cos k), k in [0, 2pi].
/// Computed as 2J*sqrt((1-g)^2 + 4g cos^2(k/2)), which stays non-negative
/// near the gap closing at g = 1, k = pi.
double dispersion(const ModelParams& params, double x, double k);

/// I(x): per-spin log-partition contribution of the chain (log 2 omitted),
/// with absolute quadrature error <= quad.abs_tol.
double free_energy_integral(const ModelParams& params, double x, const QuadratureSpec& quad);

/// Omega(x) = -beta*x^2 + I(x). Routes to dicke_limit_omega when J = 0.
double omega(const ModelParams& params, double x, const QuadratureSpec& quad);

/// dOmega/dx, by differentiation under the integral sign:
///   Omega'(x) = -2 beta x
///             + (beta/4pi) Int_0^{2pi} tanh(beta xi_k/2) dxi_k/dx dk,
///   dxi_k/dx  = 4 lambda^2 x (g + cos k) / (g xi_k).
/// Returns exactly 0 at x = 0 (Omega is even). The xi -> 0 limit of
/// tanh(beta xi/2)/xi is beta/2 and is used analytically.
double omega_prime(const ModelParams& params, double x, const QuadratureSpec& quad);

/// Omega''(0), from the analytically differentiated integrand:
///   Omega''(0) = -2 beta
///              + (2 beta lambda^2 / pi g0) Int_0^pi tanh(beta xi0/2)
///                                          (g0 + cos k)/xi0 dk,
/// with g0 = epsilon/(2J). For epsilon = 0 (g0 = 0) this form is singular;
/// a Richardson-extrapolated second difference with step 1e-4 is used then.
/// Sign decides local stability of the normal phase.
double curvature_at_origin(const ModelParams& params, const QuadratureSpec& quad);

/// Closed-form J -> 0 limit:
///   Omega_D(x) = -beta x^2 + log cosh(beta*sqrt((lambda x)^2 + (epsilon/2)^2)).
/// No quadrature involved; even in x; ignores params.j_coupling.
double dicke_limit_omega(const ModelParams& params, double x);

/// d/dx of dicke_limit_omega (exactly 0 at x = 0).
double dicke_limit_omega_prime(const ModelParams& params, double x);

/// Second derivative of dicke_limit_omega at any x; at the origin this is
/// -2 beta + 2 beta lambda^2 tanh(beta epsilon/2)/epsilon (continuous
/// epsilon -> 0 limit included).
double dicke_limit_curvature(const ModelParams& params, double x);

namespace detail {

/// Overflow-safe log cosh(y) = |y| + log1p(exp(-2|y|)) - log 2.
double log_cosh(double y);

/// tanh(beta*xi/2)/xi with the analytic xi -> 0 limit beta/2.
double tanh_half_ratio(double beta, double xi);

}  // namespace detail

}  // namespace gdicke
