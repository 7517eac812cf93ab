#include "lrk/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "lrk/errors.hpp"
#include "lrk/quadrature.hpp"
#include "lrk/spectral.hpp"

namespace lrk {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPi2 = kPi * kPi;

bool on_spectrum_cut(std::complex<double> lambda) {
    return std::abs(lambda.imag()) < 1e-14 && std::abs(lambda.real()) <= 1.0;
}

}  // namespace

JumpAngle xi_angle(double h) {
    const double den = std::hypot(h + 2.0, kPi);
    return {(h + 2.0) / den, kPi / den};
}

XiPair xi_pm(double h, double phi) {
    if (!(phi > 0.0 && phi < kPi))
        throw DomainError("xi_pm requires phi in (0, pi)");
    const double e = h + 2.0 * std::cos(phi);
    const double dp = std::hypot(e, phi - kPi);
    const double dm = std::hypot(e, phi);
    const double xp = std::atan2((phi - kPi) / dp, e / dp);
    const double xm = std::atan2(phi / dm, e / dm);
    const double dxi = xp - xm;
    return {xp, xm, dxi, {std::cos(0.5 * dxi), std::sin(0.5 * dxi)}};
}

std::complex<double> b0_lambda(std::complex<double> lambda,
                               const JumpAngle& angle) {
    if (on_spectrum_cut(lambda))
        throw BranchError("b0_lambda: lambda lies on the spectral cut [-1, 1]");
    const double c2 = angle.cos_xi * angle.cos_xi;
    const double s = std::abs(angle.sin_xi);
    const std::complex<double> ratio =
        (std::sqrt(lambda * lambda - c2) + s) / std::sqrt(lambda * lambda - 1.0);
    const std::complex<double> lg = std::log(ratio);
    return 2.0 / kPi2 * lg * lg;
}

std::complex<double> bpi_lambda(std::complex<double> lambda) {
    if (on_spectrum_cut(lambda))
        throw BranchError("bpi_lambda: lambda lies on the spectral cut [-1, 1]");
    const std::complex<double> lg = std::log((lambda + 1.0) / (lambda - 1.0));
    return lg * lg / (2.0 * kPi2);
}

double B_alpha0_quadrature(double alpha, const JumpAngle& angle) {
    if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
    const double c = std::abs(angle.cos_xi);
    const double s = std::abs(angle.sin_xi);
    if (!(s > 0.0)) throw DomainError("jump angle must have nonzero sine");
    // integrand endpoint behaviour: sqrt cusp at y = c, log^2 blow-up at 1
    auto f = [&](double y, double y_minus_c, double one_minus_y) -> double {
        const double sq1 = std::sqrt(one_minus_y * (1.0 + y));
        const double sq2 = std::sqrt(y_minus_c * (y + c));
        return f_alpha_prime(alpha, y) * std::log(sq1 / (sq2 + s));
    };
    const TanhSinhResult r = tanh_sinh(f, c, 1.0, 1e-11);
    if (!r.converged)
        throw ToleranceError("B_alpha0 quadrature did not converge",
                             r.error_estimate);
    return 2.0 / kPi2 * r.value;
}

double B_alpha0_closed(int alpha, const JumpAngle& angle) {
    if (alpha < 2) throw DomainError("closed form requires integer alpha >= 2");
    const double c2 = angle.cos_xi * angle.cos_xi;
    const double s = std::abs(angle.sin_xi);
    double sum = 0.0;
    for (int k = 1; k <= alpha; ++k) {
        if (2 * k == alpha + 1) continue;  // tan pole, excluded
        const double lk = std::abs(std::tan(kPi * (2 * k - 1) / (2.0 * alpha)));
        const double a = std::atan(s / std::sqrt(c2 + lk * lk));
        sum += a * a;
    }
    return sum / (kPi2 * (alpha - 1));
}

double B_alpha_pi(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
    return (alpha + 1.0) / (12.0 * alpha);
}

AsymptoticPrediction predict_B(const ChainParams& params, double alpha) {
    params.validate();
    AsymptoticPrediction pred;
    pred.regime = classify_regime(params.h, params.zeta);
    const bool h_is_2 = std::abs(params.h - 2.0) < 1e-12;
    const bool h_is_m2 = std::abs(params.h + 2.0) < 1e-12;

    if (pred.regime.critical_line) {
        if (params.phi > 0.0) {
            const XiPair xp = xi_pm(params.h, params.phi);
            const double b = B_alpha0_quadrature(alpha, xp.half);
            pred.contributions.push_back({params.phi, b});
            pred.contributions.push_back({-params.phi, b});
            if (h_is_2) pred.contributions.push_back({kPi, B_alpha_pi(alpha)});
            if (h_is_m2) pred.contributions.push_back({0.0, B_alpha_pi(alpha)});
        } else {
            pred.contributions.push_back(
                {0.0, B_alpha0_quadrature(alpha, xi_angle(params.h))});
            if (h_is_2) pred.contributions.push_back({kPi, B_alpha_pi(alpha)});
        }
    } else {
        // zeta != 1: effective central charge c, itemised per singular point
        const double per_point = B_alpha_pi(alpha);  // one c = 1/2 point
        if (params.zeta > 1.0) {
            if (h_is_2) pred.contributions.push_back({kPi, per_point});
            if (h_is_m2) pred.contributions.push_back({0.0, per_point});
        } else {
            pred.contributions.push_back({0.0, per_point});
            if (h_is_2) pred.contributions.push_back({kPi, per_point});
        }
    }
    pred.total = 0.0;
    for (const auto& c : pred.contributions) pred.total += c.coefficient;
    return pred;
}

void prediction_to_json(std::ostream& os, const ChainParams& params,
                        double alpha, const AsymptoticPrediction& pred) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "{\"h\":%.12g,\"zeta\":%.12g,\"phi\":%.12g,\"alpha\":%.12g,",
                  params.h, params.zeta, params.phi, alpha);
    os << buf << "\"contributions\":[";
    for (size_t i = 0; i < pred.contributions.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s{\"theta\":%.12g,\"B\":%.12g}",
                      i ? "," : "", pred.contributions[i].theta,
                      pred.contributions[i].coefficient);
        os << buf;
    }
    os << "],";
    std::snprintf(buf, sizeof buf, "\"total\":%.12g,", pred.total);
    os << buf;
    if (pred.regime.critical_line) {
        os << "\"regime\":\"critical-line zeta=1\"}";
    } else {
        std::snprintf(buf, sizeof buf, "\"regime\":{\"c\":%.12g}}",
                      pred.regime.c);
        os << buf;
    }
}

}  // namespace lrk
