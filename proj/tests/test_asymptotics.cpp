#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lrk/asymptotics.hpp"
#include "lrk/errors.hpp"

using namespace lrk;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("xi angle") {
    const JumpAngle a = xi_angle(-2.0);
    CHECK(a.cos_xi == 0.0);
    CHECK(a.sin_xi == doctest::Approx(1.0).epsilon(1e-15));
    // direct evaluation of the displayed formula at h = 0
    CHECK(xi_angle(0.0).cos_xi ==
          doctest::Approx(0.5370292721463151).epsilon(1e-12));
    CHECK(xi_angle(1e9).cos_xi == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(xi_angle(0.0).sin_xi > 0.0);
    CHECK(std::pow(a.cos_xi, 2) + std::pow(a.sin_xi, 2) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("xi_pm lateral angles of the modulated model") {
    // both cosines vanish when h = -2 cos phi
    const double phi = kPi / 3;
    const XiPair x = xi_pm(-2.0 * std::cos(phi), phi);
    CHECK(x.xi_plus == doctest::Approx(-kPi / 2).epsilon(1e-14));
    CHECK(x.xi_minus == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(x.delta_xi == doctest::Approx(-kPi).epsilon(1e-14));
    // frozen direct evaluation of the displayed formulas
    CHECK(xi_pm(1.0, kPi / 4).delta_xi ==
          doctest::Approx(-1.087760101940662).epsilon(1e-12));
    // large h: both angles collapse
    CHECK(std::abs(xi_pm(1e8, kPi / 4).delta_xi) < 1e-7);
    const XiPair y = xi_pm(1.0, kPi / 4);
    CHECK(std::pow(y.half.cos_xi, 2) + std::pow(y.half.sin_xi, 2) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(xi_pm(1.0, 0.0), DomainError);
}

TEST_CASE("b0_lambda against the eigenvalue route") {
    const JumpAngle a = xi_angle(0.0);
    // frozen from two independent evaluations (closed form and mu+- route)
    CHECK(b0_lambda(2.0, a).real() ==
          doctest::Approx(0.04468423108681734).epsilon(1e-12));
    CHECK(b0_lambda(2.0, a).imag() == doctest::Approx(0.0).epsilon(1e-14));
    // mu+ mu- = 1 identity: recompute via both eigenvalues explicitly
    for (double lam : {1.5, 2.0, 3.0}) {
        const double c2 = a.cos_xi * a.cos_xi;
        const double sq = std::sqrt(lam * lam - c2);
        const double mu_p = std::pow((sq + a.sin_xi) / std::sqrt(lam * lam - 1), 2);
        const double mu_m = std::pow((sq - a.sin_xi) / std::sqrt(lam * lam - 1), 2);
        CHECK(mu_p * mu_m == doctest::Approx(1.0).epsilon(1e-12));
        const double via_mu =
            (std::pow(std::log(mu_p), 2) + std::pow(std::log(mu_m), 2)) /
            (4 * kPi * kPi);
        CHECK(b0_lambda(lam, a).real() ==
              doctest::Approx(via_mu).epsilon(1e-12));
    }
    // decay at infinity
    CHECK(std::abs(b0_lambda(1e3, a)) < 1e-4);
    CHECK_THROWS_AS(b0_lambda(0.5, a), BranchError);
}

TEST_CASE("bpi_lambda values and the xi = pi/2 reduction") {
    CHECK(bpi_lambda(3.0).real() ==
          doctest::Approx(std::log(2.0) * std::log(2.0) / (2 * kPi * kPi))
              .epsilon(1e-14));
    CHECK(std::abs(bpi_lambda(1e3)) < 1e-5);
    CHECK_THROWS_AS(bpi_lambda(-0.2), BranchError);
    // at xi = pi/2 the jump coefficient reduces to the dispersion-zero one
    const JumpAngle perp{0.0, 1.0};
    for (double lam : {1.5, 2.0, 3.0})
        CHECK(std::abs(b0_lambda(lam, perp) - bpi_lambda(lam)) < 1e-12);
}

TEST_CASE("B coefficients at xi = pi/2 take rational values") {
    const JumpAngle perp{0.0, 1.0};
    CHECK(B_alpha0_closed(2, perp) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(B_alpha0_closed(3, perp) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(B_alpha0_quadrature(2, perp) ==
          doctest::Approx(0.125).epsilon(1e-10));
    CHECK(B_alpha0_quadrature(1, perp) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("quadrature agrees with the closed form across angles and alpha") {
    for (double xi : {0.3, 0.9, kPi / 2}) {
        const JumpAngle a{std::cos(xi), std::sin(xi)};
        for (int alpha : {2, 3, 4, 5}) {
            const double q = B_alpha0_quadrature(alpha, a);
            const double c = B_alpha0_closed(alpha, a);
            CHECK(std::abs(q - c) < 1e-8);
        }
    }
    // negative-sine angle (dxi/2 of the modulated model) is equivalent
    const XiPair x = xi_pm(1.0, kPi / 4);
    CHECK(x.half.sin_xi < 0.0);
    CHECK(B_alpha0_closed(2, x.half) ==
          doctest::Approx(0.028435696240613227).epsilon(1e-10));
    CHECK(B_alpha0_quadrature(2.0, x.half) ==
          doctest::Approx(0.028435696240613227).epsilon(1e-9));
}

TEST_CASE("B quadrature with the h = 0 angle, frozen value") {
    CHECK(B_alpha0_quadrature(2.0, xi_angle(0.0)) ==
          doctest::Approx(0.0827742728346).epsilon(1e-9));
    CHECK(B_alpha0_closed(2, xi_angle(0.0)) ==
          doctest::Approx(0.0827742728346).epsilon(1e-9));
}

TEST_CASE("conformal coefficient of a dispersion zero") {
    CHECK(B_alpha_pi(1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(B_alpha_pi(2.0) == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    CHECK(B_alpha_pi(1e9) == doctest::Approx(1.0 / 12.0).epsilon(1e-8));
}

TEST_CASE("conformal ratio holds at h = -2 and breaks at h = 0") {
    const JumpAngle perp = xi_angle(-2.0);
    CHECK(std::abs(B_alpha0_closed(2, perp) -
                   9.0 / 8.0 * B_alpha0_closed(3, perp)) < 1e-12);
    const JumpAngle generic = xi_angle(0.0);
    CHECK(std::abs(B_alpha0_closed(2, generic) -
                   9.0 / 8.0 * B_alpha0_closed(3, generic)) > 1e-3);
}

TEST_CASE("predict_B composes contributions per regime") {
    // zeta = 1, phi = 0, h = 2: jump plus dispersion zero
    const AsymptoticPrediction p1 =
        predict_B(ChainParams::limit(2.0, 1.0), 1.0);
    REQUIRE(p1.contributions.size() == 2);
    CHECK(p1.total ==
          doctest::Approx(B_alpha0_quadrature(1.0, xi_angle(2.0)) + 1.0 / 6.0)
              .epsilon(1e-12));
    // generic h: single contribution
    const AsymptoticPrediction p2 =
        predict_B(ChainParams::limit(0.0, 1.0), 2.0);
    REQUIRE(p2.contributions.size() == 1);
    CHECK(p2.contributions[0].theta == 0.0);
    // away from the critical line: central charge table
    CHECK(predict_B(ChainParams::limit(0.0, 1.5), 1.0).total == 0.0);
    CHECK(predict_B(ChainParams::limit(2.0, 0.5), 1.0).total ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(predict_B(ChainParams::limit(0.0, 0.5), 1.0).total ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    // modulated model: two jumps, plus the zero for h = +-2
    const AsymptoticPrediction p3 =
        predict_B(ChainParams::limit(1.0, 1.0, kPi / 4), 2.0);
    REQUIRE(p3.contributions.size() == 2);
    CHECK(p3.total ==
          doctest::Approx(2 * 0.028435696240613227).epsilon(1e-8));
    const AsymptoticPrediction p4 =
        predict_B(ChainParams::limit(-2.0, 1.0, kPi / 4), 2.0);
    REQUIRE(p4.contributions.size() == 3);
    // totals are the sum of itemized contributions
    double sum = 0.0;
    for (const auto& c : p4.contributions) sum += c.coefficient;
    CHECK(p4.total == doctest::Approx(sum).epsilon(1e-14));
}

TEST_CASE("prediction serializes to json") {
    const ChainParams p = ChainParams::limit(2.0, 0.5);
    std::ostringstream os;
    prediction_to_json(os, p, 1.0, predict_B(p, 1.0));
    const std::string s = os.str();
    CHECK(s.find("\"total\":0.333333333333") != std::string::npos);
    CHECK(s.find("\"contributions\"") != std::string::npos);
    CHECK(s.find("\"c\":1") != std::string::npos);
}
