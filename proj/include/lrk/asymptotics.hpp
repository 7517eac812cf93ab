#pragma once
#include <complex>
#include <iosfwd>
#include <vector>

#include "lrk/model.hpp"

namespace lrk {

// (cos, sin) of the jump angle xi, or of dxi/2 for the modulated model.
struct JumpAngle {
    double cos_xi;
    double sin_xi;
};

// Jump angle of the symbol discontinuity at theta = 0:
// cos xi = (h+2)/sqrt((h+2)^2 + pi^2), sin xi = pi/sqrt((h+2)^2 + pi^2).
JumpAngle xi_angle(double h);

// Lateral angles xi+- at the theta = +-phi jumps of the modulated model and
// their difference dxi = xi+ - xi-; carries (cos(dxi/2), sin(dxi/2)).
struct XiPair {
    double xi_plus;
    double xi_minus;
    double delta_xi;
    JumpAngle half;  // angle dxi/2 (sine may be negative)
};
XiPair xi_pm(double h, double phi);

// Log-size coefficient of log D_X(lambda) contributed by the theta = 0 jump:
// (2/pi^2) log^2[(sqrt(lambda^2 - cos^2 xi) + sin xi)/sqrt(lambda^2 - 1)].
std::complex<double> b0_lambda(std::complex<double> lambda, const JumpAngle& angle);

// Contribution of the dispersion zero at theta = pi:
// (1/(2 pi^2)) log^2[(lambda+1)/(lambda-1)].
std::complex<double> bpi_lambda(std::complex<double> lambda);

// Entropy log coefficient of one jump, from the real integral
// (2/pi^2) int_c^1 f_alpha'(y) log[sqrt(1-y^2)/(sqrt(y^2-c^2)+s)] dy
// with c = |cos xi|, s = |sin xi|. Also serves the modulated model with the
// dxi/2 angle. Double-exponential quadrature, absolute tolerance 1e-10.
double B_alpha0_quadrature(double alpha, const JumpAngle& angle);

// Residue form, integer alpha >= 2: poles lambda_k = i tan(pi(2k-1)/(2 alpha)),
// k = 1..alpha skipping k = (alpha+1)/2.
double B_alpha0_closed(int alpha, const JumpAngle& angle);

// Conformal contribution (alpha+1)/(12 alpha) of a dispersion zero.
double B_alpha_pi(double alpha);

struct AsymptoticPrediction {
    struct Contribution {
        double theta;
        double coefficient;
    };
    std::vector<Contribution> contributions;
    double total;
    Regime regime;
};

// Total predicted log-size slope of S_alpha for any (h, zeta, phi):
//   zeta = 1, phi = 0:  B_{alpha,0}(xi(h)), plus B_{alpha,pi} iff h = 2
//   zeta = 1, phi > 0:  2 B'_{alpha,phi}(dxi/2), plus B_{alpha,pi} iff h = +-2
//   zeta != 1:          c(h, zeta) (alpha+1)/(6 alpha)
AsymptoticPrediction predict_B(const ChainParams& params, double alpha);

// JSON: {h, zeta, phi, alpha, contributions:[{theta, B}], total, regime}
void prediction_to_json(std::ostream& os, const ChainParams& params,
                        double alpha, const AsymptoticPrediction& pred);

}  // namespace lrk
