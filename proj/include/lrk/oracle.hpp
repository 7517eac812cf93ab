#pragma once
#include <Eigen/Dense>

#include "lrk/corr.hpp"

namespace lrk::oracle {

// Many-body ground state of the finite ring in the 2^N Fock basis.
struct FockState {
    int nsites;
    Eigen::VectorXcd amplitudes;  // unit norm, definite fermion parity
    int parity;                   // +1 even, -1 odd occupation number
    double energy;
    double energy_even;  // sector minima, both reported
    double energy_odd;
};

// Dense per-parity-sector diagonalization of the ring Hamiltonian
// (hopping + chemical potential + pairing over distances 0 < l < N/2 with
// amplitude cos(l phi) l^-zeta per ordered pair, and the -N h / 2 shift).
// Returns the global minimum; ties resolve to the even sector.
FockState exact_ground_state(const ChainParams& params);

// Renyi entropy of the reduced density matrix of the first xlen sites.
double reduced_density_entropy(const FockState& state, int xlen, double alpha);

// Full 2N x 2N correlation matrix of the state, assembled from the exact
// expectation values 2<a a+>-1, 2<a a>, 2<a+ a+>, 2<a+ a>-1.
CorrelationMatrix correlation_from_state(const FockState& state);

// Ground-state energy of the mode-by-mode Bogoliubov vacuum,
// -(1/2) sum_k Lambda_k over the periodic grid.
double bogoliubov_vacuum_energy(const ChainParams& params);

}  // namespace lrk::oracle
