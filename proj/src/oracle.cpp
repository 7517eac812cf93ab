#include "lrk/oracle.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "lrk/errors.hpp"
#include "lrk/spectral.hpp"

namespace lrk::oracle {
namespace {

// Jordan-Wigner convention: site n is bit n, a_n carries (-1)^(occupied
// sites below n).
inline double sign_below(unsigned s, int n) {
    return std::popcount(s & ((1u << n) - 1u)) % 2 ? -1.0 : 1.0;
}

struct Term {  // coeff * a+_i a+_j, a+_i a_j, etc. tagged by kind
    enum Kind { hop, pair_create, pair_destroy } kind;
    int i, j;
    double coeff;
};

std::vector<Term> hamiltonian_terms(const ChainParams& p) {
    const int n = p.ring_size;
    std::vector<Term> terms;
    for (int site = 0; site < n; ++site) {
        const int next = (site + 1) % n;
        terms.push_back({Term::hop, next, site, 1.0});  // a+_{n+1} a_n
        terms.push_back({Term::hop, site, next, 1.0});  // a+_n a_{n+1}
        for (int l = 1; l < n / 2; ++l) {
            const double cl =
                std::cos(l * p.phi) * std::pow(static_cast<double>(l), -p.zeta);
            const int partner = (site + l) % n;
            terms.push_back({Term::pair_create, site, partner, cl});
            terms.push_back({Term::pair_destroy, site, partner, -cl});
        }
    }
    return terms;
}

// apply a+_i a_j / a+_i a+_j / a_i a_j to basis state s
inline bool apply_term(const Term& t, unsigned s, unsigned& out, double& amp) {
    switch (t.kind) {
        case Term::hop: {
            if (!((s >> t.j) & 1u)) return false;
            unsigned s1 = s & ~(1u << t.j);
            double sg = sign_below(s, t.j);
            if ((s1 >> t.i) & 1u) return false;
            out = s1 | (1u << t.i);
            amp = sg * sign_below(s1, t.i);
            return true;
        }
        case Term::pair_create: {
            if ((s >> t.j) & 1u) return false;
            unsigned s1 = s | (1u << t.j);
            double sg = sign_below(s, t.j);
            if ((s1 >> t.i) & 1u) return false;
            out = s1 | (1u << t.i);
            amp = sg * sign_below(s1, t.i);
            return true;
        }
        case Term::pair_destroy: {
            if (!((s >> t.j) & 1u)) return false;
            unsigned s1 = s & ~(1u << t.j);
            double sg = sign_below(s, t.j);
            if (!((s1 >> t.i) & 1u)) return false;
            out = s1 & ~(1u << t.i);
            amp = sg * sign_below(s1, t.i);
            return true;
        }
    }
    return false;
}

struct SectorResult {
    double energy;
    Eigen::VectorXd full_state;  // embedded in the 2^N basis
};

SectorResult sector_ground_state(const ChainParams& p, int parity) {
    const int n = p.ring_size;
    const unsigned dim = 1u << n;
    std::vector<unsigned> basis;
    std::vector<int> index(dim, -1);
    basis.reserve(dim / 2);
    for (unsigned s = 0; s < dim; ++s) {
        if (std::popcount(s) % 2 == (parity > 0 ? 0 : 1)) {
            index[s] = static_cast<int>(basis.size());
            basis.push_back(s);
        }
    }
    const int sd = static_cast<int>(basis.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(sd, sd);
    const auto terms = hamiltonian_terms(p);
    for (int col = 0; col < sd; ++col) {
        const unsigned s = basis[col];
        h(col, col) += p.h * std::popcount(s) - n * p.h / 2.0;
        for (const auto& t : terms) {
            unsigned out;
            double amp;
            if (apply_term(t, s, out, amp)) h(index[out], col) += t.coeff * amp;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    SectorResult r;
    r.energy = es.eigenvalues()[0];
    r.full_state = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < sd; ++i) r.full_state[basis[i]] = es.eigenvectors()(i, 0);
    return r;
}

}  // namespace

FockState exact_ground_state(const ChainParams& params) {
    params.validate();
    if (params.mode != Mode::lattice)
        throw UnsupportedModeError("exact diagonalization needs a finite ring");
    if (params.ring_size > 14)
        throw SizeError("exact diagonalization capped at N = 14");
    const SectorResult even = sector_ground_state(params, +1);
    const SectorResult odd = sector_ground_state(params, -1);
    FockState st;
    st.nsites = params.ring_size;
    st.energy_even = even.energy;
    st.energy_odd = odd.energy;
    if (odd.energy < even.energy) {
        st.parity = -1;
        st.energy = odd.energy;
        st.amplitudes = odd.full_state.cast<std::complex<double>>();
    } else {
        st.parity = +1;
        st.energy = even.energy;
        st.amplitudes = even.full_state.cast<std::complex<double>>();
    }
    return st;
}

double reduced_density_entropy(const FockState& state, int xlen, double alpha) {
    const int n = state.nsites;
    if (xlen < 1 || xlen >= n)
        throw DomainError("reduced density: need 1 <= xlen < N");
    const int dx = 1 << xlen;
    const int dy = 1 << (n - xlen);
    // X sites are the low bits, so the Fock basis factorises cleanly
    Eigen::MatrixXcd psi(dx, dy);
    for (int y = 0; y < dy; ++y)
        for (int x = 0; x < dx; ++x)
            psi(x, y) = state.amplitudes[static_cast<long>(y) * dx + x];
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-10)
        throw StructureError("reduced density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                       Eigen::EigenvaluesOnly);
    double s = 0.0;
    if (alpha == 1.0) {
        for (double p : es.eigenvalues())
            if (p > 1e-300) s -= p * std::log(p);
    } else {
        double tr_a = 0.0;
        for (double p : es.eigenvalues())
            if (p > 0.0) tr_a += std::pow(p, alpha);
        s = std::log(tr_a) / (1.0 - alpha);
    }
    return s;
}

CorrelationMatrix correlation_from_state(const FockState& state) {
    const int n = state.nsites;
    const unsigned dim = 1u << n;
    Eigen::VectorXd psi = state.amplitudes.real();
    // four correlator families by direct bit operations
    Eigen::MatrixXd ca = Eigen::MatrixXd::Zero(n, n);  // <a+_n a_m>
    Eigen::MatrixXd cb = Eigen::MatrixXd::Zero(n, n);  // <a+_n a+_m>
    Eigen::MatrixXd cc = Eigen::MatrixXd::Zero(n, n);  // <a_n a_m>
    Eigen::MatrixXd cd = Eigen::MatrixXd::Zero(n, n);  // <a_n a+_m>
    for (int i = 0; i < n; ++i) {
        for (int m = 0; m < n; ++m) {
            double va = 0, vb = 0, vc = 0, vd = 0;
            for (unsigned s = 0; s < dim; ++s) {
                const double a = psi[s];
                if (a == 0.0) continue;
                if ((s >> m) & 1u) {
                    unsigned s1 = s & ~(1u << m);
                    const double sg = a * sign_below(s, m);
                    if (!((s1 >> i) & 1u))  // a+_i a_m
                        va += psi[s1 | (1u << i)] * sg * sign_below(s1, i);
                    if ((s1 >> i) & 1u)  // a_i a_m
                        vc += psi[s1 & ~(1u << i)] * sg * sign_below(s1, i);
                } else {
                    unsigned s1 = s | (1u << m);
                    const double sg = a * sign_below(s, m);
                    if (!((s1 >> i) & 1u))  // a+_i a+_m
                        vb += psi[s1 | (1u << i)] * sg * sign_below(s1, i);
                    if ((s1 >> i) & 1u)  // a_i a+_m
                        vd += psi[s1 & ~(1u << i)] * sg * sign_below(s1, i);
                }
            }
            ca(i, m) = va;
            cb(i, m) = vb;
            cc(i, m) = vc;
            cd(i, m) = vd;
        }
    }
    CorrelationMatrix out;
    out.xlen = n;
    out.dense.resize(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int m = 0; m < n; ++m) {
            const double delta = i == m ? 1.0 : 0.0;
            out.dense(2 * i, 2 * m) = 2.0 * cd(i, m) - delta;
            out.dense(2 * i, 2 * m + 1) = 2.0 * cc(i, m);
            out.dense(2 * i + 1, 2 * m) = 2.0 * cb(i, m);
            out.dense(2 * i + 1, 2 * m + 1) = 2.0 * ca(i, m) - delta;
        }
    }
    // diagonal-averaged Toeplitz coefficients (exact up to solver noise)
    out.blocks.mode = Mode::lattice;
    out.blocks.grid = GridKind::periodic;
    out.blocks.ring_n = n;
    out.blocks.f.setZero(n);
    out.blocks.g.setZero(n);
    for (int d = 0; d < n; ++d) {
        double fsum = 0.0, gsum = 0.0;
        int count = 0;
        for (int i = d; i < n; ++i) {
            fsum += out.dense(2 * i, 2 * (i - d));
            gsum += out.dense(2 * i, 2 * (i - d) + 1);
            ++count;
        }
        out.blocks.f[d] = fsum / count;
        out.blocks.g[d] = gsum / count;
    }
    return out;
}

double bogoliubov_vacuum_energy(const ChainParams& params) {
    params.validate();
    if (params.mode != Mode::lattice)
        throw UnsupportedModeError("vacuum energy defined for a finite ring");
    constexpr double pi = 3.141592653589793238462643383279502884;
    const int n = params.ring_size;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += dispersion(params, 2.0 * pi * k / n);
    return -0.5 * sum;
}

}  // namespace lrk::oracle
