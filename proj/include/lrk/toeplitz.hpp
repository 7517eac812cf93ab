#pragma once
#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lrk/model.hpp"

namespace lrk::toeplitz {

using Complex = std::complex<double>;

struct Jump {
    double theta;
    Eigen::MatrixXcd m_minus;  // limit from below
    Eigen::MatrixXcd m_plus;   // limit from above
};

// Piecewise continuous d x d matrix symbol with declared jump set.
// `cusps` lists points where the symbol is continuous but not smooth;
// quadrature panels are graded there as well.
struct BlockSymbol {
    int dim;
    std::function<Eigen::MatrixXcd(double)> sampler;
    std::vector<Jump> jumps;
    std::vector<double> cusps;
};

// Dense (n*d) x (n*d) block Toeplitz matrix; block (k, l) is the (k-l)-th
// Fourier coefficient of the sampler, quadrature split at declared jumps,
// coefficient tolerance 1e-12.
Eigen::MatrixXcd block_toeplitz(const BlockSymbol& sym, int n);

// log det via pivoted LU: exact log-magnitude plus the accumulated pivot
// phase reduced to (-pi, pi]. Branch continuity across sizes is restored by
// the series helpers below.
Complex log_det_matrix(const Eigen::MatrixXcd& m);

// log det of (lambda I - T_n[sym]) when lambda is given, of T_n[sym] otherwise.
Complex log_det(const BlockSymbol& sym, std::optional<Complex> lambda_shift,
                int n);

// (1/2pi) int log det M(theta) dtheta with the log branch tracked
// continuously in theta; a mismatch at +-pi raises WindingError.
Complex szego_linear_term(const BlockSymbol& sym,
                          std::optional<Complex> lambda_shift = {});

// (1/4pi^2) Tr log^2[ M_-(M_+)^{-1} ] via the eigenvalues of the ratio.
Complex discontinuity_coefficient(const Eigen::MatrixXcd& m_minus,
                                  const Eigen::MatrixXcd& m_plus);

// | log D_n[M C] - log D_n[M] - n log det C |, phase wrapped.
double widom_identity_residual(const BlockSymbol& sym,
                               const Eigen::MatrixXcd& c, int n);

struct DetSeries {
    std::vector<int> sizes;
    std::vector<Complex> logdets;  // branch-continuous along the series
    Complex szego_term;            // per-size linear coefficient
};

struct LogCoeffFit {
    Complex b_fit;
    Complex intercept;
    double residual_rms;
    DetSeries series;
};

// Least-squares fit of (log D_n - n * szego) against log n.
LogCoeffFit fit_log_coefficient(const BlockSymbol& sym,
                                std::optional<Complex> lambda_shift,
                                const std::vector<int>& sizes);

// CSV: n,re_logdet,im_logdet,szego_term
void det_series_to_csv(std::ostream& os, const DetSeries& s);

// The chain correlation symbol as a BlockSymbol, jumps declared from the
// lateral limits (theta = 0 or +-phi, and the dispersion zeros at h = +-2).
BlockSymbol chain_symbol(const ChainParams& params);

}  // namespace lrk::toeplitz
