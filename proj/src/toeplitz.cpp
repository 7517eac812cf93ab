#include "lrk/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "lrk/errors.hpp"
#include "lrk/quadrature.hpp"

namespace lrk::toeplitz {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

std::vector<double> panel_edges(const BlockSymbol& sym, int density_panels) {
    std::vector<double> edges{-kPi, kPi};
    std::vector<double> graded;
    for (const auto& j : sym.jumps) graded.push_back(j.theta);
    for (double c : sym.cusps) graded.push_back(c);
    for (double raw : graded) {
        double t = std::remainder(raw, kTwoPi);
        if (t >= -kPi && t <= kPi) {
            if (t > -kPi && t < kPi) edges.push_back(t);
            for (double d = 1e-9; d < 0.02; d *= 4.0) {
                if (t - d > -kPi) edges.push_back(t - d);
                if (t + d < kPi) edges.push_back(t + d);
            }
            // a point at -pi grades near +pi too (periodicity)
            if (t == -kPi || t == kPi) {
                for (double d = 1e-9; d < 0.02; d *= 4.0) {
                    edges.push_back(-kPi + d);
                    edges.push_back(kPi - d);
                }
            }
        }
    }
    for (int i = 1; i < density_panels; ++i)
        edges.push_back(-kPi + kTwoPi * i / density_panels);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Fourier coefficients c_j = (1/2pi) int M(theta) e^{-i j theta} dtheta for
// j = -(n-1)..(n-1), computed on a shared composite grid.
std::vector<Eigen::MatrixXcd> fourier_coeffs_once(const BlockSymbol& sym,
                                                  int n, int density_panels) {
    const CompositeGrid grid =
        composite_gl16(panel_edges(sym, density_panels));
    const int d = sym.dim;
    const int ncoef = 2 * n - 1;
    std::vector<Eigen::MatrixXcd> coeffs(
        ncoef, Eigen::MatrixXcd::Zero(d, d));  // index j + (n-1)
    const size_t nn = grid.nodes.size();
    for (size_t i = 0; i < nn; ++i) {
        const double th = grid.nodes[i];
        const Eigen::MatrixXcd m = sym.sampler(th) * (grid.weights[i] / kTwoPi);
        const Complex step = std::polar(1.0, -th);
        Complex ph = 1.0;  // e^{-i j theta}, j = 0 upward
        coeffs[n - 1] += m;
        for (int j = 1; j < n; ++j) {
            ph *= step;
            coeffs[n - 1 + j] += m * ph;
            coeffs[n - 1 - j] += m * std::conj(ph);
        }
    }
    return coeffs;
}

std::vector<Eigen::MatrixXcd> fourier_coeffs(const BlockSymbol& sym, int n) {
    const double tol = 1e-12;
    int density = std::max(48, 4 * n);
    auto a = fourier_coeffs_once(sym, n, density);
    for (int pass = 0; pass < 3; ++pass) {
        density *= 2;
        auto b = fourier_coeffs_once(sym, n, density);
        double diff = 0.0;
        for (size_t j = 0; j < a.size(); ++j)
            diff = std::max(diff, (a[j] - b[j]).cwiseAbs().maxCoeff());
        a = std::move(b);
        if (diff < tol) return a;
    }
    throw ToleranceError("block symbol Fourier coefficients did not converge",
                         1.0);
}

Eigen::MatrixXcd assemble(const std::vector<Eigen::MatrixXcd>& coeffs, int n,
                          int d) {
    Eigen::MatrixXcd t(n * d, n * d);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            t.block(k * d, l * d, d, d) = coeffs[(k - l) + (n - 1)];
    return t;
}

double wrap_phase(double p) {
    double r = std::remainder(p, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

}  // namespace

Eigen::MatrixXcd block_toeplitz(const BlockSymbol& sym, int n) {
    if (n < 1) throw DomainError("block_toeplitz: n must be >= 1");
    return assemble(fourier_coeffs(sym, n), n, sym.dim);
}

Complex log_det_matrix(const Eigen::MatrixXcd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    const auto diag = lu.matrixLU().diagonal();
    double log_abs = 0.0;
    double phase = lu.permutationP().determinant() > 0 ? 0.0 : kPi;
    double min_p = 1e300, max_p = 0.0;
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        const double a = std::abs(diag[i]);
        min_p = std::min(min_p, a);
        max_p = std::max(max_p, a);
        if (a == 0.0)
            throw SingularMatrixError("log_det: exactly singular matrix", 0.0);
        log_abs += std::log(a);
        phase += std::arg(diag[i]);
    }
    if (min_p < 1e-14 * max_p)
        throw SingularMatrixError("log_det: matrix singular to tolerance",
                                  min_p / max_p);
    return {log_abs, wrap_phase(phase)};
}

Complex log_det(const BlockSymbol& sym, std::optional<Complex> lambda_shift,
                int n) {
    Eigen::MatrixXcd t = block_toeplitz(sym, n);
    if (lambda_shift) {
        t = -t;
        t.diagonal().array() += *lambda_shift;
    }
    return log_det_matrix(t);
}

Complex szego_linear_term(const BlockSymbol& sym,
                          std::optional<Complex> lambda_shift) {
    auto logdet_at = [&](double th) -> Complex {
        Eigen::MatrixXcd m = sym.sampler(th);
        if (lambda_shift) {
            m = -m;
            m.diagonal().array() += *lambda_shift;
        }
        const Complex det = m.determinant();
        if (std::abs(det) == 0.0)
            throw SingularMatrixError("szego term: det M(theta) = 0", 0.0);
        return std::log(det);  // principal; unwrapped by the caller
    };

    Complex prev{};
    for (int density = 96;; density *= 2) {
        const CompositeGrid grid = composite_gl16(panel_edges(sym, density));
        Complex acc{};
        double carry = 0.0;  // running branch offset (multiples of 2pi)
        double first_ph = 0.0, last_ph = 0.0;
        bool first = true;
        for (size_t i = 0; i < grid.nodes.size(); ++i) {
            Complex ld = logdet_at(grid.nodes[i]);
            double ph = ld.imag();
            if (!first) {
                while (ph + carry - last_ph > kPi) carry -= kTwoPi;
                while (ph + carry - last_ph < -kPi) carry += kTwoPi;
            } else {
                first_ph = ph;
            }
            first = false;
            last_ph = ph + carry;
            acc += grid.weights[i] * Complex(ld.real(), last_ph);
        }
        // net phase advance around the circle signals nonzero winding
        if (std::abs(last_ph - first_ph) > kPi)
            throw WindingError("symbol determinant winds around the origin");
        acc /= kTwoPi;
        if (density > 96 && std::abs(acc - prev) < 1e-11) return acc;
        prev = acc;
        if (density > 8192)
            throw ToleranceError("szego term quadrature did not converge",
                                 std::abs(acc - prev));
    }
}

Complex discontinuity_coefficient(const Eigen::MatrixXcd& m_minus,
                                  const Eigen::MatrixXcd& m_plus) {
    const Eigen::Index d = m_minus.rows();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m_plus);
    if (!lu.isInvertible())
        throw SingularMatrixError("discontinuity: lateral limit not invertible",
                                  0.0);
    const Eigen::MatrixXcd ratio = m_minus * lu.inverse();
    if ((ratio - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <
        1e-15)
        return 0.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ratio);
    if (es.info() != Eigen::Success)
        throw NonDiagonalizableError("discontinuity: eigensolver failed");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
    const double cond = svd.singularValues()(0) /
                        svd.singularValues()(svd.singularValues().size() - 1);
    if (!std::isfinite(cond) || cond > 1e8)
        throw NonDiagonalizableError("discontinuity: ratio matrix defective");
    Complex sum = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        const Complex mu = es.eigenvalues()[i];
        if (mu.real() <= 0.0 && std::abs(mu.imag()) < 1e-13 * std::abs(mu))
            throw BranchError(
                "discontinuity: ratio eigenvalue on the negative real axis");
        const Complex lg = std::log(mu);
        sum += lg * lg;
    }
    return sum / (4.0 * kPi * kPi);
}

double widom_identity_residual(const BlockSymbol& sym,
                               const Eigen::MatrixXcd& c, int n) {
    BlockSymbol prod = sym;
    const Eigen::MatrixXcd cc = c;
    prod.sampler = [base = sym.sampler, cc](double th) {
        return Eigen::MatrixXcd(base(th) * cc);
    };
    for (auto& j : prod.jumps) {
        j.m_minus = j.m_minus * cc;
        j.m_plus = j.m_plus * cc;
    }
    const Complex lhs = log_det(prod, {}, n);
    const Complex rhs = log_det(sym, {}, n);
    const Complex ldc = log_det_matrix(cc);
    const Complex r = lhs - rhs - static_cast<double>(n) * ldc;
    return std::hypot(r.real(), wrap_phase(r.imag()));
}

LogCoeffFit fit_log_coefficient(const BlockSymbol& sym,
                                std::optional<Complex> lambda_shift,
                                const std::vector<int>& sizes) {
    if (sizes.size() < 4)
        throw WindowError("fit needs at least 4 sizes");
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw DomainError("sizes must be strictly increasing");

    LogCoeffFit fit;
    fit.series.sizes = sizes;
    fit.series.szego_term = szego_linear_term(sym, lambda_shift);

    // one coefficient set; smaller sizes are leading subblocks
    const int nmax = sizes.back();
    const auto coeffs = fourier_coeffs(sym, nmax);
    const Eigen::MatrixXcd tmax = assemble(coeffs, nmax, sym.dim);

    double prev_phase = 0.0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        const int n = sizes[i];
        Eigen::MatrixXcd t = tmax.topLeftCorner(n * sym.dim, n * sym.dim);
        if (lambda_shift) {
            t = -t;
            t.diagonal().array() += *lambda_shift;
        }
        Complex ld = log_det_matrix(t);
        // keep the phase branch continuous in n
        double ph = ld.imag();
        ph += kTwoPi * std::round((prev_phase - ph) / kTwoPi);
        prev_phase = ph;
        fit.series.logdets.push_back({ld.real(), ph});
    }

    // least squares of y = logdet - n*szego against log n
    const size_t m = sizes.size();
    double sxx = 0.0, sx = 0.0;
    Complex sxy{}, sy{};
    std::vector<Complex> y(m);
    for (size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        y[i] = fit.series.logdets[i] -
               static_cast<double>(sizes[i]) * fit.series.szego_term;
        sx += x;
        sxx += x * x;
        sxy += x * y[i];
        sy += y[i];
    }
    const double denom = m * sxx - sx * sx;
    fit.b_fit = (static_cast<double>(m) * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.b_fit * sx) / static_cast<double>(m);
    double rss = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        rss += std::norm(y[i] - fit.b_fit * x - fit.intercept);
    }
    fit.residual_rms = std::sqrt(rss / m);
    return fit;
}

void det_series_to_csv(std::ostream& os, const DetSeries& s) {
    os << "n,re_logdet,im_logdet,szego_term\n";
    char buf[160];
    for (size_t i = 0; i < s.sizes.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.12g\n", s.sizes[i],
                      s.logdets[i].real(), s.logdets[i].imag(),
                      s.szego_term.real());
        os << buf;
    }
}

BlockSymbol chain_symbol(const ChainParams& params) {
    params.validate();
    BlockSymbol sym;
    sym.dim = 2;
    ChainParams p = params;
    sym.sampler = [p](double th) {
        return Eigen::MatrixXcd(symbol(p, th).matrix);
    };
    std::vector<double> candidates{0.0, kPi};
    if (p.phi > 0.0) {
        candidates.push_back(p.phi);
        candidates.push_back(-p.phi);
    }
    for (double t : candidates) {
        const Eigen::Matrix2cd mm = symbol_lateral(p, t, Side::minus).matrix;
        const Eigen::Matrix2cd mp = symbol_lateral(p, t, Side::plus).matrix;
        if ((mm - mp).cwiseAbs().maxCoeff() > 1e-9)
            sym.jumps.push_back({t, mm, mp});
        else
            sym.cusps.push_back(t);  // continuous, possibly non-smooth
    }
    return sym;
}

}  // namespace lrk::toeplitz
