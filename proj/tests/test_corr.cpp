#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "lrk/corr.hpp"
#include "lrk/errors.hpp"

using namespace lrk;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("coefficient symmetries: F even, g odd, g_0 = 0") {
    const FourierBlocks fb =
        fourier_blocks(ChainParams::lattice(1.0, 1.0, 512), 16);
    CHECK(fb.gk(0) == 0.0);
    for (int k = 1; k < 16; ++k) {
        CHECK(fb.fk(k) == fb.fk(-k));
        CHECK(fb.gk(k) == -fb.gk(-k));
    }
}

TEST_CASE("deep trivial phase: F_0 near 1 for large h") {
    const FourierBlocks fb =
        fourier_blocks(ChainParams::limit(100.0, 1.0), 1);
    CHECK(std::abs(fb.f[0] - 1.0) < 1e-3);
}

TEST_CASE("xlen = 1 correlation matrix is diag(F_0, -F_0)") {
    const CorrelationMatrix cm =
        build_correlation(ChainParams::lattice(1.0, 1.0, 256), 1);
    CHECK(cm.dense.rows() == 2);
    CHECK(cm.dense(0, 0) == cm.blocks.f[0]);
    CHECK(cm.dense(0, 1) == 0.0);
    CHECK(cm.dense(1, 0) == 0.0);
    CHECK(cm.dense(1, 1) == -cm.blocks.f[0]);
}

TEST_CASE("block Toeplitz structure of the dense matrix") {
    const CorrelationMatrix cm =
        build_correlation(ChainParams::lattice(0.5, 1.0, 256), 12);
    for (int n = 0; n < 11; ++n) {
        for (int m = 0; m < 11; ++m) {
            CHECK(cm.dense(2 * n, 2 * m) == cm.dense(2 * (n + 1), 2 * (m + 1)));
            CHECK(cm.dense(2 * n, 2 * m + 1) ==
                  cm.dense(2 * (n + 1), 2 * (m + 1) + 1));
        }
    }
}

TEST_CASE("spectrum lies in [-1, 1] and pairs as +-nu") {
    const CorrelationMatrix cm =
        build_correlation(ChainParams::lattice(1.0, 1.0, 1024), 50);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cm.dense,
                                                      Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    CHECK(ev.minCoeff() > -1.0 - 1e-10);
    CHECK(ev.maxCoeff() < 1.0 + 1e-10);
    for (int i = 0; i < 50; ++i)
        CHECK(std::abs(ev[i] + ev[99 - i]) < 1e-10);
}

TEST_CASE("particle-hole symmetry: J V J = -V") {
    const CorrelationMatrix cm =
        build_correlation(ChainParams::limit(1.0, 1.0), 8);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(16, 16);
    for (int n = 0; n < 8; ++n) {
        j(2 * n, 2 * n + 1) = 1.0;
        j(2 * n + 1, 2 * n) = 1.0;
    }
    CHECK((j * cm.dense * j + cm.dense).cwiseAbs().maxCoeff() < 1e-14);
    // equivalently -J V^T J = V (the dense matrix is symmetric)
    CHECK((cm.dense - cm.dense.transpose()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("periodic grid at h = +-2 is rejected, antiperiodic used instead") {
    const ChainParams p = ChainParams::lattice(2.0, 1.0, 256);
    CHECK_THROWS_AS(fourier_blocks(p, 4, GridKind::periodic),
                    GridSingularError);
    const FourierBlocks fb = fourier_blocks(p, 4);  // automatic
    CHECK(fb.grid == GridKind::antiperiodic);
    CHECK(std::isfinite(fb.f[0]));
    const ChainParams q = ChainParams::lattice(-2.0, 0.5, 256);
    CHECK(fourier_blocks(q, 4).grid == GridKind::antiperiodic);
}

TEST_CASE("lattice coefficients converge when the ring doubles") {
    // the diagnostic decays like 1/N; values frozen from a run of this
    // builder (N = 2048: 5.73e-5, N = 4096: 2.86e-5)
    const double d1 =
        n_convergence_diagnostic(ChainParams::lattice(1.0, 1.0, 2048), 32);
    const double d2 =
        n_convergence_diagnostic(ChainParams::lattice(1.0, 1.0, 4096), 32);
    CHECK(d2 < 0.6 * d1);
    CHECK(d1 == doctest::Approx(5.726e-5).epsilon(0.01));
    CHECK(d2 == doctest::Approx(2.864e-5).epsilon(0.01));
}

TEST_CASE("lattice approaches the limit-mode coefficients as N grows") {
    const FourierBlocks ex = fourier_blocks(ChainParams::limit(0.0, 1.0), 20);
    double prev = 1e300;
    for (int n : {320, 640, 1280}) {
        const FourierBlocks lat =
            fourier_blocks(ChainParams::lattice(0.0, 1.0, n), 20);
        const double diff =
            std::max((lat.f - ex.f).cwiseAbs().maxCoeff(),
                     (lat.g - ex.g).cwiseAbs().maxCoeff());
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 4e-4);
}

TEST_CASE("limit-mode coefficients at general zeta are stable") {
    // refinement loop reproduces itself when asked twice
    const FourierBlocks a = fourier_blocks(ChainParams::limit(2.0, 0.5), 12);
    const FourierBlocks b = fourier_blocks(ChainParams::limit(2.0, 0.5), 12);
    CHECK((a.f - b.f).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(a.g[1]) > 0.01);  // nontrivial pairing content
}

TEST_CASE("coefficient dump column order") {
    const FourierBlocks fb =
        fourier_blocks(ChainParams::lattice(1.0, 1.0, 128), 2);
    std::ostringstream os;
    dump_coefficients_csv(os, fb);
    CHECK(os.str().substr(0, 10) == std::string("k,F_k,g_k\n"));
    CHECK(os.str().find("-1,") != std::string::npos);
}

TEST_CASE("interval restriction slices the dense matrix") {
    const CorrelationMatrix cm =
        build_correlation(ChainParams::lattice(0.0, 1.0, 256), 10);
    const CorrelationMatrix sub = restrict_interval(cm, 4);
    CHECK(sub.dense.rows() == 8);
    CHECK(sub.dense(7, 6) == cm.dense(7, 6));
    CHECK_THROWS_AS(restrict_interval(cm, 11), DomainError);
}
