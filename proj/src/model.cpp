#include "lrk/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lrk/errors.hpp"
#include "lrk/special.hpp"

namespace lrk {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) < tol; }

// wrap to [-pi, pi)
double wrap_pm_pi(double t) {
    double x = std::fmod(t + kPi, 2 * kPi);
    if (x < 0) x += 2 * kPi;
    return x - kPi;
}

// wrap to [0, 2*pi)
double wrap_2pi(double t) {
    double x = std::fmod(t, 2 * kPi);
    if (x < 0) x += 2 * kPi;
    return x;
}

// zeta=1 closed forms; value at a jump is the right-lateral one.
double sawtooth_g(double theta) {
    return kPi - wrap_2pi(theta);  // theta = 0 gives +pi
}

double sawtooth_g_mod(double theta, double phi) {
    const double x = wrap_pm_pi(theta);
    if (x < -phi) return -(kPi + x);
    if (x < phi) return -x;  // includes x = -phi (right-lateral value +phi)
    return kPi - x;          // includes x = +phi (right-lateral value pi-phi)
}

double lattice_g(const ChainParams& p, double theta) {
    // 2 sum_{l=1}^{N/2-1} cos(l phi) sin(l theta) l^-zeta via recurrences
    const int lmax = p.ring_size / 2 - 1;
    double sum = 0.0;
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    const double cp1 = std::cos(p.phi), sp1 = std::sin(p.phi);
    double sl = s1, cl = c1;        // sin/cos of l*theta
    double slp = sp1, clp = cp1;    // sin/cos of l*phi
    for (int l = 1; l <= lmax; ++l) {
        sum += clp * sl * std::pow(static_cast<double>(l), -p.zeta);
        const double sn = sl * c1 + cl * s1;
        const double cn = cl * c1 - sl * s1;
        sl = sn; cl = cn;
        const double snp = slp * cp1 + clp * sp1;
        const double cnp = clp * cp1 - slp * sp1;
        slp = snp; clp = cnp;
    }
    return 2.0 * sum;
}

double limit_g(const ChainParams& p, double theta) {
    if (near(p.zeta, 1.0)) {
        return p.phi > 0 ? sawtooth_g_mod(theta, p.phi) : sawtooth_g(theta);
    }
    if (p.phi > 0)
        return polylog_im_unit_circle(p.zeta, theta + p.phi) +
               polylog_im_unit_circle(p.zeta, theta - p.phi);
    if (theta == 0.0) return 0.0;
    return 2.0 * polylog_im_unit_circle(p.zeta, theta);
}

}  // namespace

ChainParams ChainParams::lattice(double h, double zeta, int n, double phi) {
    ChainParams p{h, zeta, phi, Mode::lattice, n};
    p.validate();
    return p;
}

ChainParams ChainParams::limit(double h, double zeta, double phi) {
    ChainParams p{h, zeta, phi, Mode::limit, 0};
    p.validate();
    return p;
}

void ChainParams::validate() const {
    if (!(zeta > 0.0)) throw DomainError("zeta must be positive");
    if (!(phi >= 0.0 && phi < kPi)) throw DomainError("phi must lie in [0, pi)");
    if (mode == Mode::lattice) {
        if (ring_size < 4 || ring_size % 2 != 0)
            throw DomainError("lattice ring size must be even and >= 4");
    }
}

bool ChainParams::critical_resonance() const {
    // Lambda vanishes at theta = 0 for h = -2 and at theta = pi for h = 2;
    // both are periodic grid momenta for even N.
    return near(h, 2.0) || near(h, -2.0);
}

double pairing_im(const ChainParams& p, double theta) {
    return p.mode == Mode::lattice ? lattice_g(p, theta) : limit_g(p, theta);
}

namespace {

// limit mode, zeta < 1: points where the pairing series diverges
bool at_divergence(const ChainParams& p, double theta) {
    if (p.mode == Mode::lattice || p.zeta >= 1.0 - 1e-12) return false;
    const double x = wrap_pm_pi(theta);
    if (p.phi > 0) return near(x, p.phi) || near(x, -p.phi);
    return near(x, 0.0);
}

}  // namespace

double pairing_im_lateral(const ChainParams& p, double theta, Side side) {
    if (p.mode == Mode::lattice) return lattice_g(p, theta);
    if (near(p.zeta, 1.0)) {
        if (p.phi > 0) {
            const double x = wrap_pm_pi(theta);
            if (near(x, p.phi))
                return side == Side::plus ? kPi - p.phi : -p.phi;
            if (near(x, -p.phi))
                return side == Side::plus ? p.phi : p.phi - kPi;
            return sawtooth_g_mod(theta, p.phi);
        }
        if (near(wrap_2pi(theta), 0.0) || near(wrap_2pi(theta), 2 * kPi))
            return side == Side::plus ? kPi : -kPi;
        return sawtooth_g(theta);
    }
    if (at_divergence(p, theta))
        return side == Side::plus ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
    // continuous for zeta != 1 away from the divergence set
    return limit_g(p, theta);
}

double dispersion(const ChainParams& p, double theta) {
    return std::hypot(p.h + 2.0 * std::cos(theta), pairing_im(p, theta));
}

std::complex<double> pairing(const ChainParams& p, double theta) {
    return {0.0, pairing_im(p, theta)};
}

std::complex<double> pairing_lateral(const ChainParams& p, double theta, Side side) {
    return {0.0, pairing_im_lateral(p, theta, side)};
}

SymbolSample symbol(const ChainParams& p, double theta) {
    const double eps = p.h + 2.0 * std::cos(theta);
    const double g = pairing_im(p, theta);
    const double lam = std::hypot(eps, g);
    if (lam < 1e-14) {
        std::ostringstream os;
        os << "symbol singular: dispersion vanishes at theta = " << theta;
        throw SingularPointError(os.str());
    }
    SymbolSample s;
    s.theta = theta;
    s.matrix << eps / lam, std::complex<double>(0, g / lam),
        std::complex<double>(0, -g / lam), -eps / lam;
    return s;
}

SymbolSample symbol_lateral(const ChainParams& p, double theta, Side side) {
    const double eps = p.h + 2.0 * std::cos(theta);
    const double g = pairing_im_lateral(p, theta, side);
    const double lam = std::hypot(eps, g);
    SymbolSample s;
    s.theta = theta;
    if (lam < 1e-8 || std::abs(g) > 1e8) {
        // dispersion zero (eps ~ u^2, g ~ u) or pairing divergence: the
        // limit matrix is the pure pairing direction
        const double off = side == Side::plus ? 1e-6 : -1e-6;
        const double sn = pairing_im(p, theta + off) >= 0 ? 1.0 : -1.0;
        s.matrix << 0.0, std::complex<double>(0, sn),
            std::complex<double>(0, -sn), 0.0;
        return s;
    }
    s.matrix << eps / lam, std::complex<double>(0, g / lam),
        std::complex<double>(0, -g / lam), -eps / lam;
    return s;
}

Regime classify_regime(double h, double zeta) {
    if (!(zeta > 0.0)) throw DomainError("zeta must be positive");
    if (near(zeta, 1.0)) return {true, 0.0};
    const bool at_2 = near(h, 2.0);
    const bool at_m2 = near(h, -2.0);
    if (zeta > 1.0) return {false, (at_2 || at_m2) ? 0.5 : 0.0};
    return {false, at_2 ? 1.0 : 0.5};
}

}  // namespace lrk
