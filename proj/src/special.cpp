#include "lrk/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lrk/errors.hpp"
#include "lrk/quadrature.hpp"

namespace lrk {

std::complex<double> polylog_unit_circle(double s, double theta) {
    if (!(s > 0.0)) throw DomainError("polylog order must be positive");
    const double two_pi = 6.283185307179586476925286766559;
    double th = std::fmod(theta, two_pi);
    if (th < 0) th += two_pi;
    if (th == 0.0)
        throw DomainError("polylog_unit_circle: argument z = 1 is singular");

    const std::complex<double> z = std::polar(1.0, th);
    const double umax = std::pow(46.0, s);  // e^t underflows the tail beyond
    // The integrand peaks at u ~ dist(z,1)^s; seed panels around that scale.
    const double peak = std::pow(std::min(th, two_pi - th), s);
    std::vector<double> brk;
    for (double f : {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0, 1000.0}) {
        const double p = peak * f;
        if (p > 0 && p < umax) brk.push_back(p);
    }
    const double inv_s = 1.0 / s;
    // e^t - z = z * (e^{t - i th} - 1), with expm1 of the complex exponent
    // assembled from stable real pieces; avoids the cancellation of two
    // values near 1 when both t and th are small.
    const double sin_half = std::sin(0.5 * th);
    const double sin_th = std::sin(th);
    auto integrand = [&](double u) -> std::complex<double> {
        const double t = std::pow(u, inv_s);
        const double ea = std::expm1(t);
        const std::complex<double> em1(
            ea * std::cos(th) - 2.0 * sin_half * sin_half,
            -(1.0 + ea) * sin_th);
        return 1.0 / (z * em1);
    };
    const std::complex<double> integral =
        gk_panels_c(integrand, 0.0, umax, brk, 1e-14 * std::max(1.0, umax));
    return z * integral / (std::tgamma(s) * s);
}

double polylog_im_unit_circle(double s, double theta) {
    if (theta == 0.0) return 0.0;
    const double sign = theta > 0 ? 1.0 : -1.0;
    return sign * polylog_unit_circle(s, std::abs(theta)).imag();
}

}  // namespace lrk
