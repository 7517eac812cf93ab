#pragma once
#include <complex>

namespace lrk {

// Li_s(e^{i theta}) for real order s > 0 and theta not a multiple of 2*pi.
// Evaluated from the integral representation
//   Li_s(z) = z / Gamma(s) * int_0^inf t^{s-1} / (e^t - z) dt
// after the substitution u = t^s that removes the endpoint singularity.
std::complex<double> polylog_unit_circle(double s, double theta);

// Im Li_s(e^{i theta}); odd in theta, vanishing limit value at theta = 0.
double polylog_im_unit_circle(double s, double theta);

}  // namespace lrk
