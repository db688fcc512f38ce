// oracle.hpp — independent brute-force cross-checks for the landscape
// formulas: the finite-N discrete-k free energy, dense exact
// diagonalization of the periodic spin chain, dense ED of the full
// qubit-cavity Hamiltonian at tiny size, and the closed-form Dicke-limit
// critical coupling.
#pragma once

#include "gdicke/model.hpp"

namespace gdicke {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ChainBoundary { periodic };

/// Finite periodic chain in the rotated frame; x multiplies lambda as the
/// per-site field lambda*x. The bond sum runs j = 1..N with site N+1 = 1,
/// so N = 2 carries the doubled bond of the two-site ring.
struct ChainSpec {
    int n_spins = 8;
    double x = 0.0;
    ChainBoundary boundary = ChainBoundary::periodic;

    void validate() const;
};

/// Finite qubit-cavity system: n_spins qubits, photon space truncated at
/// fock_cutoff. check_truncation re-runs at ceil(1.25 * cutoff) and reports
/// the observable shift.
struct CavitySpec {
    int n_spins = 4;
    int fock_cutoff = 20;
    bool check_truncation = true;

    void validate() const;
};

struct CavityObservables {
    double mean_photons = 0.0;            ///< thermal <a'a>
    double photons_per_spin = 0.0;        ///< thermal <a'a>/N
    double ground_energy_per_spin = 0.0;  ///< E_0/N
    double ground_displacement = 0.0;     ///< <a + a'> in the ground state
    bool truncation_converged = true;
    double truncation_shift = 0.0;  ///< photons_per_spin shift at +25% cutoff
};

/// I_N(x) = (1/N) sum_m log[2 cosh(beta xi_{k_m}(x)/2)], k_m = 2 pi m / N.
/// Converges to free_energy_integral(x) + log 2 as N grows.
double discrete_k_free_energy(const ModelParams& params, double x, int n_spins);

/// Free energy per spin of the chain H'(x) = sum_j [lambda x sX_j
/// + (epsilon/2) sZ_j - J sY_j sY_{j+1}] with periodic coupling, from the
/// full spectrum of the 2^N x 2^N matrix:
/// f_N = (1/N) log Tr exp(-beta H'), log-sum-exp stabilized.
double spin_chain_ed(const ModelParams& params, const ChainSpec& chain);

/// Dense thermal ED of H = a'a + sum_j [lambda/(2 sqrt(N)) (a + a') sX_j
/// + (epsilon/2) sZ_j - J sY_j sY_{j+1}]; a qualitative oracle for the
/// order-parameter trend at small N.
CavityObservables cavity_ed(const ModelParams& params, const CavitySpec& spec);

/// lambda_c = sqrt(epsilon / tanh(beta epsilon / 2)), where the Dicke-limit
/// Omega''(0) changes sign.
double dicke_critical_coupling(double epsilon, double beta);

}  // namespace gdicke
