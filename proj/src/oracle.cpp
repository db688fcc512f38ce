#include "gdicke/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

namespace gdicke {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// log(2 cosh(y)), overflow-safe.
double log_two_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a));
}

// log sum_i exp(-beta e_i), shifted by the spectrum minimum.
double log_boltzmann_sum(const Eigen::VectorXd& energies, double beta) {
    const double e_min = energies.minCoeff();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < energies.size(); ++i)
        sum += std::exp(-beta * (energies[i] - e_min));
    return -beta * e_min + std::log(sum);
}

int bit(int state, int j) { return (state >> j) & 1; }

// Fills the chain part sum_j [field sX_j + (epsilon/2) sZ_j - J sY_j sY_{j+1}]
// on the 2^N spin block starting at `offset`. Periodic bonds run j = 1..N
// with site N+1 = 1, so N = 2 carries its ring bond twice. sZ|0> = +|0>.
void add_chain_terms(Eigen::MatrixXd& h, int n_spins, double field, double epsilon,
                     double j_coupling, Eigen::Index offset) {
    const int dim = 1 << n_spins;
    for (int s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int j = 0; j < n_spins; ++j) diag += 0.5 * epsilon * (bit(s, j) == 0 ? 1.0 : -1.0);
        h(offset + s, offset + s) += diag;
        if (field != 0.0) {
            for (int j = 0; j < n_spins; ++j) {
                const int t = s ^ (1 << j);
                h(offset + t, offset + s) += field;
            }
        }
        if (j_coupling != 0.0) {
            for (int j = 0; j < n_spins; ++j) {
                const int j2 = (j + 1) % n_spins;
                const int t = s ^ (1 << j) ^ (1 << j2);
                // -J <t|sY_j sY_j2|s>: the YY matrix element is -1 when the
                // two bits agree (|00> <-> |11>) and +1 when they differ.
                h(offset + t, offset + s) += (bit(s, j) == bit(s, j2)) ? j_coupling : -j_coupling;
            }
        }
    }
}

}  // namespace

void ChainSpec::validate() const {
    if (n_spins < 2 || n_spins > 14)
        throw ResourceError("ChainSpec: n_spins must be in 2..14 (dense 2^N matrix)");
    if (!std::isfinite(x)) throw std::invalid_argument("ChainSpec: x must be finite");
}

void CavitySpec::validate() const {
    if (n_spins < 2 || n_spins > 8)
        throw ResourceError("CavitySpec: n_spins must be in 2..8");
    if (fock_cutoff < 10) throw std::invalid_argument("CavitySpec: fock_cutoff must be >= 10");
}

double discrete_k_free_energy(const ModelParams& params, double x, int n_spins) {
    params.validate();
    if (n_spins < 2) throw std::invalid_argument("discrete_k_free_energy: n_spins must be >= 2");
    double sum = 0.0;
    for (int m = 0; m < n_spins; ++m) {
        const double k = kTwoPi * m / n_spins;
        sum += log_two_cosh(0.5 * params.beta * dispersion(params, x, k));
    }
    return sum / n_spins;
}

double spin_chain_ed(const ModelParams& params, const ChainSpec& chain) {
    params.validate();
    chain.validate();
    const int n = chain.n_spins;
    const Eigen::Index dim = Eigen::Index(1) << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    add_chain_terms(h, n, params.lambda * chain.x, params.epsilon, params.j_coupling, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    return log_boltzmann_sum(solver.eigenvalues(), params.beta) / n;
}

namespace {

CavityObservables cavity_ed_once(const ModelParams& params, int n_spins, int cutoff) {
    const Eigen::Index spin_dim = Eigen::Index(1) << n_spins;
    const Eigen::Index dim = spin_dim * (cutoff + 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    for (int n = 0; n <= cutoff; ++n) {
        const Eigen::Index offset = Eigen::Index(n) * spin_dim;
        for (Eigen::Index s = 0; s < spin_dim; ++s) h(offset + s, offset + s) += n;
        add_chain_terms(h, n_spins, 0.0, params.epsilon, params.j_coupling, offset);
    }
    // (lambda / 2 sqrt(N)) (a + a') sum_j sX_j couples photon sectors n, n+1.
    const double coupling = 0.5 * params.lambda / std::sqrt(static_cast<double>(n_spins));
    if (coupling != 0.0) {
        for (int n = 0; n < cutoff; ++n) {
            const double amp = coupling * std::sqrt(n + 1.0);
            const Eigen::Index lo = Eigen::Index(n) * spin_dim;
            const Eigen::Index hi = lo + spin_dim;
            for (Eigen::Index s = 0; s < spin_dim; ++s) {
                for (int j = 0; j < n_spins; ++j) {
                    const Eigen::Index t = s ^ (Eigen::Index(1) << j);
                    h(hi + t, lo + s) += amp;
                    h(lo + s, hi + t) += amp;
                }
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const Eigen::VectorXd& energies = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    // Thermal weights relative to the ground state.
    const double e0 = energies[0];
    double z = 0.0;
    double photon_sum = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double w = std::exp(-params.beta * (energies[i] - e0));
        if (w == 0.0) break;  // energies ascend; all later weights vanish too
        double n_avg = 0.0;
        for (int n = 0; n <= cutoff; ++n) {
            const Eigen::Index offset = Eigen::Index(n) * spin_dim;
            n_avg += n * vectors.col(i).segment(offset, spin_dim).squaredNorm();
        }
        z += w;
        photon_sum += w * n_avg;
    }

    double displacement = 0.0;
    for (int n = 0; n < cutoff; ++n) {
        const Eigen::Index lo = Eigen::Index(n) * spin_dim;
        displacement += 2.0 * std::sqrt(n + 1.0) *
                        vectors.col(0).segment(lo, spin_dim)
                            .dot(vectors.col(0).segment(lo + spin_dim, spin_dim));
    }

    CavityObservables obs;
    obs.mean_photons = photon_sum / z;
    obs.photons_per_spin = obs.mean_photons / n_spins;
    obs.ground_energy_per_spin = e0 / n_spins;
    obs.ground_displacement = displacement;
    return obs;
}

}  // namespace

CavityObservables cavity_ed(const ModelParams& params, const CavitySpec& spec) {
    params.validate();
    spec.validate();
    CavityObservables obs = cavity_ed_once(params, spec.n_spins, spec.fock_cutoff);
    if (spec.check_truncation) {
        const int bigger = (spec.fock_cutoff * 5 + 3) / 4;  // ceil(1.25 c)
        const CavityObservables wide = cavity_ed_once(params, spec.n_spins, bigger);
        obs.truncation_shift = wide.photons_per_spin - obs.photons_per_spin;
        obs.truncation_converged = std::abs(obs.truncation_shift) < 1e-6 &&
                                   std::abs(wide.ground_energy_per_spin -
                                            obs.ground_energy_per_spin) < 1e-6;
    }
    return obs;
}

double dicke_critical_coupling(double epsilon, double beta) {
    if (!(epsilon > 0.0)) throw std::domain_error("dicke_critical_coupling: epsilon must be > 0");
    if (!(beta > 0.0)) throw std::domain_error("dicke_critical_coupling: beta must be > 0");
    return std::sqrt(epsilon / std::tanh(0.5 * beta * epsilon));
}

}  // namespace gdicke
