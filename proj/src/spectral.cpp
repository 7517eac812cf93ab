#include "lrk/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "lrk/errors.hpp"

namespace lrk {

double f_alpha(double alpha, double x) {
    if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
    if (std::abs(x) > 1.0 + 1e-10)
        throw DomainError("f_alpha argument outside [-1, 1]");
    const double xa = std::min(std::abs(x), 1.0);
    const double p = 0.5 * (1.0 + xa);
    const double q = 0.5 * (1.0 - xa);
    if (alpha == 1.0) {
        double s = 0.0;
        if (p > 0.0) s -= p * std::log(p);
        if (q > 0.0) s -= q * std::log(q);
        return s;
    }
    return std::log(std::pow(p, alpha) + std::pow(q, alpha)) / (1.0 - alpha);
}

double f_alpha_prime(double alpha, double x) {
    if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
    if (alpha == 1.0) return 0.5 * std::log((1.0 - x) / (1.0 + x));
    const double p = 0.5 * (1.0 + x);
    const double q = 0.5 * (1.0 - x);
    return alpha / (2.0 * (1.0 - alpha)) *
           (std::pow(p, alpha - 1.0) - std::pow(q, alpha - 1.0)) /
           (std::pow(p, alpha) + std::pow(q, alpha));
}

EntropySpectrum spectrum(const CorrelationMatrix& v) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v.dense,
                                                      Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();  // ascending
    const int x = v.xlen;
    EntropySpectrum out;
    out.nu.resize(x);
    for (int i = 0; i < x; ++i) {
        const double neg = ev[i];
        const double pos = ev[2 * x - 1 - i];
        if (std::abs(pos + neg) > 1e-10)
            throw StructureError("correlation spectrum is not +- paired");
        if (pos > 1.0 + 1e-10)
            throw StructureError("correlation eigenvalue outside [-1, 1]");
        out.nu[x - 1 - i] = std::clamp(pos, 0.0, 1.0);
    }
    std::sort(out.nu.begin(), out.nu.end());
    return out;
}

double entropy(const CorrelationMatrix& v, double alpha) {
    const EntropySpectrum sp = spectrum(v);
    double s = 0.0;
    for (double nu : sp.nu) s += f_alpha(alpha, nu);
    return s;
}

ScanResult entropy_scan(const ChainParams& params, double alpha,
                        const std::vector<int>& xlens,
                        const ScanOptions& opts) {
    params.validate();
    if (xlens.empty()) throw DomainError("scan needs at least one interval");
    for (size_t i = 1; i < xlens.size(); ++i)
        if (xlens[i] <= xlens[i - 1])
            throw DomainError("scan lengths must be strictly increasing");

    ScanResult res;
    res.alpha = alpha;
    res.xlens = xlens;
    res.entropies.assign(xlens.size(), 0.0);
    res.ring_multiple = opts.ring_multiple;

    ChainParams p = params;
    const int max_x = xlens.back();
    if (p.mode == Mode::lattice) {
        int n = std::max(4096, opts.ring_multiple * max_x);
        if (n % 2) ++n;
        p.ring_size = std::max(p.ring_size, n);
    }
    res.params = p;
    const FourierBlocks blocks = fourier_blocks(p, max_x);
    res.ring_n = blocks.ring_n;
    res.grid = blocks.grid;

    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, xlens.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= xlens.size()) return;
            CorrelationMatrix cm;
            cm.xlen = xlens[i];
            cm.blocks = blocks;
            cm.dense = assemble_dense(blocks, xlens[i]);
            res.entropies[i] = entropy(cm, alpha);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return res;
}

void scan_to_csv(std::ostream& os, const ScanResult& scan) {
    char buf[160];
    os << "# lrk scan\n";
    std::snprintf(buf, sizeof buf,
                  "# h=%.12g zeta=%.12g phi=%.12g mode=%s\n", scan.params.h,
                  scan.params.zeta, scan.params.phi,
                  scan.params.mode == Mode::lattice ? "lattice" : "limit");
    os << buf;
    std::snprintf(buf, sizeof buf, "# alpha=%.12g\n", scan.alpha);
    os << buf;
    if (scan.params.mode == Mode::lattice) {
        std::snprintf(buf, sizeof buf,
                      "# ring_n=%d ring_multiple=%d grid=%s\n", scan.ring_n,
                      scan.ring_multiple,
                      scan.grid == GridKind::antiperiodic ? "antiperiodic"
                                                          : "periodic");
        os << buf;
    }
    os << "xlen,entropy\n";
    for (size_t i = 0; i < scan.xlens.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d,%.12g\n", scan.xlens[i],
                      scan.entropies[i]);
        os << buf;
    }
}

}  // namespace lrk
