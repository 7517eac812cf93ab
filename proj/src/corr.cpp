#include "lrk/corr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrk/errors.hpp"
#include "lrk/quadrature.hpp"

namespace lrk {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// On-disk memoization of coefficient sets, enabled by LRK_CACHE_DIR.
std::string cache_key(const ChainParams& p, int dmax, GridKind grid) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "mode=%d h=%.17g zeta=%.17g phi=%.17g N=%d grid=%d dmax=%d",
                  p.mode == Mode::lattice ? 0 : 1, p.h, p.zeta, p.phi,
                  p.mode == Mode::lattice ? p.ring_size : 0,
                  static_cast<int>(grid), dmax);
    return buf;
}

std::string cache_path(const std::string& key) {
    const char* dir = std::getenv("LRK_CACHE_DIR");
    if (!dir || !*dir) return {};
    // FNV-1a, stable across runs
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char name[64];
    std::snprintf(name, sizeof name, "/lrk-%016llx.csv", h);
    return std::string(dir) + name;
}

bool cache_load(const std::string& path, const std::string& key,
                FourierBlocks& fb, int dmax) {
    if (path.empty()) return false;
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != "# " + key) return false;
    fb.f.resize(dmax + 1);
    fb.g.resize(dmax + 1);
    for (int k = 0; k <= dmax; ++k) {
        int kk;
        double f, g;
        if (!std::getline(in, line)) return false;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf", &kk, &f, &g) != 3 ||
            kk != k)
            return false;
        fb.f[k] = f;
        fb.g[k] = g;
    }
    return true;
}

void cache_store(const std::string& path, const std::string& key,
                 const FourierBlocks& fb) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) return;
    out << "# " << key << "\n";
    char buf[96];
    for (int k = 0; k < fb.f.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", k, fb.f[k], fb.g[k]);
        out << buf;
    }
}

struct SymbolGrid {
    std::vector<double> theta;
    std::vector<double> weight;
    std::vector<double> a;  // eps/Lambda
    std::vector<double> b;  // g/Lambda
};

// Lattice momenta and symbol ratios; uses the mirror symmetry of the grid.
SymbolGrid lattice_grid(const ChainParams& p, GridKind grid) {
    const int n = p.ring_size;
    const double shift = grid == GridKind::antiperiodic ? 0.5 : 0.0;
    const int lmax = n / 2 - 1;
    std::vector<double> cl(lmax + 1, 0.0);
    for (int l = 1; l <= lmax; ++l)
        cl[l] = std::cos(l * p.phi) * std::pow(static_cast<double>(l), -p.zeta);

    SymbolGrid out;
    out.theta.resize(n);
    out.weight.assign(n, 1.0 / n);
    out.a.resize(n);
    out.b.resize(n);
    std::vector<double> gv(n, 0.0);
    const int half = grid == GridKind::antiperiodic ? n / 2 : n / 2 + 1;
    for (int j = 0; j < n; ++j)
        out.theta[j] = 2.0 * kPi * (j + shift) / n;
    for (int j = 0; j < half; ++j) {
        const double th = out.theta[j];
        const double c1 = std::cos(th), s1 = std::sin(th);
        double sl = s1, cl1 = c1, sum = 0.0;
        for (int l = 1; l <= lmax; ++l) {
            sum += cl[l] * sl;
            const double sn = sl * c1 + cl1 * s1;
            cl1 = cl1 * c1 - sl * s1;
            sl = sn;
        }
        gv[j] = 2.0 * sum;
        // mirror partner theta' = 2pi - theta
        const int jm = grid == GridKind::antiperiodic ? n - 1 - j : (n - j) % n;
        if (jm != j) gv[jm] = -gv[j];
    }
    double min_lam = 1e300;
    for (int j = 0; j < n; ++j) {
        const double eps = p.h + 2.0 * std::cos(out.theta[j]);
        const double lam = std::hypot(eps, gv[j]);
        min_lam = std::min(min_lam, lam);
        if (lam < 1e-12) {
            out.a[j] = out.b[j] = 0.0;  // will throw below
        } else {
            out.a[j] = eps / lam;
            out.b[j] = gv[j] / lam;
        }
    }
    if (min_lam < 1e-12)
        throw GridSingularError(
            "dispersion vanishes at a grid momentum; use the antiperiodic "
            "grid theta_j = 2*pi*(j+1/2)/N");
    return out;
}

// Quadrature grid on (0, pi) for the thermodynamic-limit symbol, graded at
// the singular set and dense enough for oscillations up to frequency dmax.
SymbolGrid limit_grid(const ChainParams& p, int dmax, int density) {
    std::vector<double> special{0.0, kPi};
    if (p.phi > 0.0) special.push_back(p.phi);

    std::vector<double> edges;
    const double grading_span = 0.02;
    for (double s : special) {
        for (double d = 1e-9; d < grading_span; d *= 2.0) {
            if (s - d > 0.0) edges.push_back(s - d);
            if (s + d < kPi) edges.push_back(s + d);
        }
        if (s > 0.0 && s < kPi) edges.push_back(s);
    }
    edges.push_back(0.0);
    edges.push_back(kPi);
    const int m = std::max(48, density * std::max(dmax, 1));
    for (int i = 1; i < m; ++i) edges.push_back(kPi * i / m);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    CompositeGrid cg = composite_gl16(edges);
    SymbolGrid out;
    out.theta = cg.nodes;
    out.weight = std::move(cg.weights);
    const size_t nn = out.theta.size();
    out.a.resize(nn);
    out.b.resize(nn);
    for (size_t i = 0; i < nn; ++i) {
        const double th = out.theta[i];
        const double eps = p.h + 2.0 * std::cos(th);
        const double g = pairing_im(p, th);
        const double lam = std::hypot(eps, g);
        if (lam == 0.0) {
            out.a[i] = 0.0;
            out.b[i] = 1.0;
        } else {
            out.a[i] = eps / lam;
            out.b[i] = g / lam;
        }
    }
    // weights normalised for (1/pi) * int_0^pi
    for (auto& w : out.weight) w /= kPi;
    return out;
}

// F_d = sum w a cos(d theta); g_d = -sum w b sin(d theta), d = 0..dmax.
void accumulate(const SymbolGrid& grid, int dmax, Eigen::VectorXd& f,
                Eigen::VectorXd& g) {
    f.setZero(dmax + 1);
    g.setZero(dmax + 1);
    const size_t nn = grid.theta.size();
    for (size_t i = 0; i < nn; ++i) {
        const double wa = grid.weight[i] * grid.a[i];
        const double wb = grid.weight[i] * grid.b[i];
        const double c1 = std::cos(grid.theta[i]);
        const double s1 = std::sin(grid.theta[i]);
        double cd = 1.0, sd = 0.0;  // cos/sin of d*theta
        for (int d = 0; d <= dmax; ++d) {
            f[d] += wa * cd;
            g[d] -= wb * sd;
            const double cn = cd * c1 - sd * s1;
            sd = sd * c1 + cd * s1;
            cd = cn;
        }
    }
}

FourierBlocks lattice_blocks(const ChainParams& p, int xlen, GridKind grid) {
    GridKind use = grid;
    if (use == GridKind::automatic)
        use = p.critical_resonance() ? GridKind::antiperiodic : GridKind::periodic;
    SymbolGrid sg = lattice_grid(p, use);
    FourierBlocks fb;
    fb.mode = Mode::lattice;
    fb.grid = use;
    fb.ring_n = p.ring_size;
    // grid weights 1/N over the full circle already normalise the sums
    accumulate(sg, xlen - 1, fb.f, fb.g);
    return fb;
}

FourierBlocks limit_blocks(const ChainParams& p, int xlen) {
    const int dmax = xlen - 1;
    FourierBlocks fb;
    fb.mode = Mode::limit;
    fb.grid = GridKind::automatic;
    fb.ring_n = 0;
    const double tol = 1e-12;
    int density = 4;
    SymbolGrid sg = limit_grid(p, dmax, density);
    accumulate(sg, dmax, fb.f, fb.g);
    for (int pass = 0; pass < 3; ++pass) {
        density *= 2;
        SymbolGrid sg2 = limit_grid(p, dmax, density);
        Eigen::VectorXd f2, g2;
        accumulate(sg2, dmax, f2, g2);
        const double diff = std::max((f2 - fb.f).cwiseAbs().maxCoeff(),
                                     (g2 - fb.g).cwiseAbs().maxCoeff());
        fb.f = std::move(f2);
        fb.g = std::move(g2);
        if (diff < tol) return fb;
    }
    throw ToleranceError("limit-mode Fourier coefficients did not converge",
                         1.0);
}

}  // namespace

FourierBlocks fourier_blocks(const ChainParams& params, int xlen,
                             GridKind grid) {
    params.validate();
    if (xlen < 1) throw DomainError("xlen must be >= 1");
    GridKind effective = grid;
    if (params.mode == Mode::lattice && effective == GridKind::automatic)
        effective = params.critical_resonance() ? GridKind::antiperiodic
                                                : GridKind::periodic;
    const std::string key = cache_key(params, xlen - 1, effective);
    const std::string path = cache_path(key);
    FourierBlocks cached;
    cached.mode = params.mode;
    cached.grid = effective;
    cached.ring_n = params.mode == Mode::lattice ? params.ring_size : 0;
    if (cache_load(path, key, cached, xlen - 1)) return cached;

    FourierBlocks fb = params.mode == Mode::lattice
                           ? lattice_blocks(params, xlen, effective)
                           : limit_blocks(params, xlen);
    cache_store(path, key, fb);
    return fb;
}

Eigen::MatrixXd assemble_dense(const FourierBlocks& blocks, int xlen) {
    if (xlen - 1 >= blocks.f.size())
        throw DomainError("assemble_dense: xlen exceeds available coefficients");
    Eigen::MatrixXd v(2 * xlen, 2 * xlen);
    for (int n = 0; n < xlen; ++n) {
        for (int m = 0; m < xlen; ++m) {
            const double fd = blocks.fk(n - m);
            const double gd = blocks.gk(n - m);
            v(2 * n, 2 * m) = fd;
            v(2 * n, 2 * m + 1) = gd;
            v(2 * n + 1, 2 * m) = -gd;
            v(2 * n + 1, 2 * m + 1) = -fd;
        }
    }
    return v;
}

CorrelationMatrix build_correlation(const ChainParams& params, int xlen,
                                    GridKind grid) {
    CorrelationMatrix cm;
    cm.xlen = xlen;
    cm.blocks = fourier_blocks(params, xlen, grid);
    cm.dense = assemble_dense(cm.blocks, xlen);
    return cm;
}

CorrelationMatrix restrict_interval(const CorrelationMatrix& cm, int xlen) {
    if (xlen < 1 || xlen > cm.xlen)
        throw DomainError("restrict_interval: bad sub-interval length");
    CorrelationMatrix out;
    out.xlen = xlen;
    out.blocks = cm.blocks;
    const int keep = std::min<int>(xlen, cm.blocks.f.size());
    out.blocks.f = cm.blocks.f.head(keep);
    out.blocks.g = cm.blocks.g.head(keep);
    out.dense = cm.dense.topLeftCorner(2 * xlen, 2 * xlen);
    return out;
}

double n_convergence_diagnostic(const ChainParams& params, int xlen) {
    if (params.mode != Mode::lattice)
        throw UnsupportedModeError("ring-doubling diagnostic is lattice-only");
    ChainParams doubled = params;
    doubled.ring_size *= 2;
    const FourierBlocks a = fourier_blocks(params, xlen);
    const FourierBlocks b = fourier_blocks(doubled, xlen);
    return std::max((a.f - b.f).cwiseAbs().maxCoeff(),
                    (a.g - b.g).cwiseAbs().maxCoeff());
}

void dump_coefficients_csv(std::ostream& os, const FourierBlocks& blocks) {
    os << "k,F_k,g_k\n";
    char buf[128];
    const int dmax = static_cast<int>(blocks.f.size()) - 1;
    for (int k = -dmax; k <= dmax; ++k) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", k, blocks.fk(k),
                      blocks.gk(k));
        os << buf;
    }
}

}  // namespace lrk
