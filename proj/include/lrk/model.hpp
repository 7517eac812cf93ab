#pragma once
#include <Eigen/Dense>
#include <complex>

namespace lrk {

enum class Mode { lattice, limit };
enum class Side { minus, plus };

// Physical configuration of the chain: chemical potential h, pairing decay
// exponent zeta, pairing modulation angle phi (phi = 0 is the standard
// model), and either a finite ring of N sites or the thermodynamic limit.
struct ChainParams {
    double h = 0.0;
    double zeta = 1.0;
    double phi = 0.0;
    Mode mode = Mode::limit;
    int ring_size = 0;  // N, lattice mode only

    static ChainParams lattice(double h, double zeta, int n, double phi = 0.0);
    static ChainParams limit(double h, double zeta, double phi = 0.0);
    void validate() const;
    bool critical_resonance() const;  // dispersion vanishes on the periodic grid
};

// Value of the 2x2 correlation symbol at one momentum.
struct SymbolSample {
    double theta;
    Eigen::Matrix2cd matrix;
};

// Pairing function G(theta) = 2i sum_{l>=1} cos(l phi) sin(l theta) l^-zeta.
// Lattice mode truncates at l < N/2; limit mode evaluates the full series
// (closed piecewise form at zeta = 1, polylogarithm otherwise).
// At a jump of the limit-mode function the right-lateral value is returned.
std::complex<double> pairing(const ChainParams& p, double theta);
std::complex<double> pairing_lateral(const ChainParams& p, double theta, Side side);

// Imaginary part g(theta) of the pairing, G = i g. Internal workhorse.
double pairing_im(const ChainParams& p, double theta);
double pairing_im_lateral(const ChainParams& p, double theta, Side side);

// Quasiparticle energy sqrt((h + 2 cos theta)^2 + |G(theta)|^2).
double dispersion(const ChainParams& p, double theta);

// Correlation symbol (1/Lambda) [[h+2cos, G], [-G, -(h+2cos)]].
SymbolSample symbol(const ChainParams& p, double theta);

// One-sided limit of the symbol at a discontinuity, including the points
// where the dispersion vanishes or the pairing diverges (the limit matrix
// is then +-i sigma_y-like with unit pairing direction).
SymbolSample symbol_lateral(const ChainParams& p, double theta, Side side);

struct Regime {
    bool critical_line;  // zeta = 1: coefficients come from the jump angles
    double c;            // effective central charge, defined when !critical_line
};

// Effective central charge table for zeta != 1; marker on the zeta = 1 line.
Regime classify_regime(double h, double zeta);

}  // namespace lrk
