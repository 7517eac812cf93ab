#pragma once
#include <Eigen/Dense>
#include <iosfwd>

#include "lrk/model.hpp"

namespace lrk {

enum class GridKind { automatic, periodic, antiperiodic };

// Fourier data of the symbol: F_k of (h+2cos)/Lambda and the odd sine
// coefficients g_k of the pairing part, for k = 0..dmax (F even, g odd).
struct FourierBlocks {
    Eigen::VectorXd f;
    Eigen::VectorXd g;
    Mode mode;
    GridKind grid;  // grid actually used (lattice mode)
    int ring_n;     // 0 in limit mode

    double fk(int k) const { return f[std::abs(k)]; }
    double gk(int k) const {
        return k == 0 ? 0.0 : (k > 0 ? g[k] : -g[-k]);
    }
};

// Block Toeplitz restriction of the ground-state correlation matrix to an
// interval of xlen sites: 2x2 blocks [[F_{n-m}, g_{n-m}], [-g_{n-m}, -F_{n-m}]].
struct CorrelationMatrix {
    int xlen;
    FourierBlocks blocks;
    Eigen::MatrixXd dense;
};

// Fourier coefficients for distances 0..xlen-1. Lattice mode: exact sums
// over the ring momenta; the periodic grid hits a zero of the dispersion at
// h = +-2 and the antiperiodic grid theta_j = 2pi(j+1/2)/N is used instead
// (requesting GridKind::periodic there throws GridSingularError).
// Limit mode: panel quadrature of the thermodynamic symbol with panels
// split at its discontinuities, refined to coefficient tolerance 1e-12.
FourierBlocks fourier_blocks(const ChainParams& params, int xlen,
                             GridKind grid = GridKind::automatic);

CorrelationMatrix build_correlation(const ChainParams& params, int xlen,
                                    GridKind grid = GridKind::automatic);

// Assemble the dense matrix for a (possibly smaller) interval from
// precomputed coefficients.
Eigen::MatrixXd assemble_dense(const FourierBlocks& blocks, int xlen);

// Leading sub-interval of an existing correlation matrix (slices the dense
// matrix, so it is exact even when that matrix is not Toeplitz).
CorrelationMatrix restrict_interval(const CorrelationMatrix& cm, int xlen);

// Max-norm change of the interval correlations when the ring is doubled
// (lattice mode diagnostic; reported, not enforced).
double n_convergence_diagnostic(const ChainParams& params, int xlen);

// Debug dump, column order: k, F_k, g_k.
void dump_coefficients_csv(std::ostream& os, const FourierBlocks& blocks);

}  // namespace lrk
