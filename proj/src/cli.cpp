#include "lrk/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lrk/analysis.hpp"
#include "lrk/asymptotics.hpp"
#include "lrk/errors.hpp"
#include "lrk/oracle.hpp"
#include "lrk/spectral.hpp"
#include "lrk/toeplitz.hpp"

namespace lrk::cli {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct CommonFlags {
    double h = 0.0;
    double zeta = 1.0;
    double phi = 0.0;
    double alpha = 1.0;
    std::string mode = "lattice";
    int ring_size = 0;
    int ring_multiple = 8;
    int xmin = 100;
    int xmax = 1000;
    int points = 9;
    std::string h_range, zeta_range;
    double lambda = 1.8;
    std::string out;
    std::string format = "csv";
    int jobs = 0;
};

void add_model_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--h", f.h, "chemical potential");
    cmd->add_option("--zeta", f.zeta, "pairing decay exponent");
    cmd->add_option("--phi", f.phi, "pairing modulation angle in [0, pi)");
    cmd->add_option("--mode", f.mode, "lattice|limit")
        ->check(CLI::IsMember({"lattice", "limit"}));
    cmd->add_option("--ring-size", f.ring_size, "lattice ring size N");
    cmd->add_option("--ring-multiple", f.ring_multiple,
                    "lattice N = max(4096, multiple * max |X|)");
}

ChainParams make_params(const CommonFlags& f, int max_x) {
    if (f.mode == "limit") return ChainParams::limit(f.h, f.zeta, f.phi);
    int n = f.ring_size;
    if (n <= 0) n = std::max(4096, f.ring_multiple * max_x);
    if (n % 2) ++n;
    return ChainParams::lattice(f.h, f.zeta, n, f.phi);
}

std::vector<int> geometric_sizes(int xmin, int xmax, int points) {
    if (xmin < 1 || xmax < xmin || points < 1)
        throw DomainError("bad scan range");
    std::vector<int> out;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0
                                     : static_cast<double>(i) / (points - 1);
        const int x = static_cast<int>(
            std::lround(xmin * std::pow(double(xmax) / xmin, t)));
        if (out.empty() || x > out.back()) out.push_back(x);
    }
    return out;
}

struct Range {
    double lo, hi;
    int n;
};
Range parse_range(const std::string& s) {
    Range r;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &r.lo, &r.hi, &r.n) != 3 || r.n < 1)
        throw DomainError("range must be a:b:n");
    return r;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open output file " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void metadata_header(std::ostream& os, const CommonFlags& f,
                     const std::string& extra = {}) {
    char buf[256];
    os << "# " << kVersion << "\n";
    std::snprintf(buf, sizeof buf, "# h=%.12g zeta=%.12g phi=%.12g mode=%s\n",
                  f.h, f.zeta, f.phi, f.mode.c_str());
    os << buf;
    if (!extra.empty()) os << "# " << extra << "\n";
}

void print_matrix_json(std::ostream& os, double theta, const std::string& side,
                       const Eigen::Matrix2cd& m) {
    char buf[512];
    std::snprintf(
        buf, sizeof buf,
        "{\"theta\":%.12g,\"side\":\"%s\",\"matrix\":["
        "[[%.12g,%.12g],[%.12g,%.12g]],[[%.12g,%.12g],[%.12g,%.12g]]]}\n",
        theta, side.c_str(), m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(),
        m(0, 1).imag(), m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(),
        m(1, 1).imag());
    os << buf;
}

int cmd_symbol(const CommonFlags& f, double theta, const std::string& side) {
    const ChainParams p = f.mode == "limit"
                              ? ChainParams::limit(f.h, f.zeta, f.phi)
                              : make_params(f, 128);
    Eigen::Matrix2cd m;
    if (side == "plus")
        m = symbol_lateral(p, theta, Side::plus).matrix;
    else if (side == "minus")
        m = symbol_lateral(p, theta, Side::minus).matrix;
    else
        m = symbol(p, theta).matrix;
    Output out(f.out);
    print_matrix_json(out.os(), theta, side, m);
    return 0;
}

int cmd_entropy(const CommonFlags& f, int xlen) {
    const ChainParams p = make_params(f, xlen);
    const CorrelationMatrix v = build_correlation(p, xlen);
    const double s = entropy(v, f.alpha);
    Output out(f.out);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "{\"xlen\":%d,\"alpha\":%.12g,\"entropy\":%.12g}\n", xlen,
                  f.alpha, s);
    out.os() << buf;
    return 0;
}

ScanResult run_scan(const CommonFlags& f) {
    const std::vector<int> xlens = geometric_sizes(f.xmin, f.xmax, f.points);
    ChainParams p;
    if (f.mode == "limit") {
        p = ChainParams::limit(f.h, f.zeta, f.phi);
    } else {
        int n = f.ring_size > 0 ? f.ring_size
                                : std::max(4096, f.ring_multiple * xlens.back());
        if (n % 2) ++n;
        p = ChainParams::lattice(f.h, f.zeta, n, f.phi);
    }
    ScanOptions opts;
    opts.ring_multiple = f.ring_multiple;
    opts.jobs = f.jobs;
    return entropy_scan(p, f.alpha, xlens, opts);
}

int cmd_scan(const CommonFlags& f) {
    const ScanResult scan = run_scan(f);
    Output out(f.out);
    if (f.format == "json") {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "{\"version\":\"%s\",\"h\":%.12g,\"zeta\":%.12g,"
                      "\"phi\":%.12g,\"alpha\":%.12g,\"mode\":\"%s\","
                      "\"ring_n\":%d,\"points\":[",
                      kVersion, scan.params.h, scan.params.zeta,
                      scan.params.phi, scan.alpha,
                      scan.params.mode == Mode::lattice ? "lattice" : "limit",
                      scan.ring_n);
        out.os() << buf;
        for (size_t i = 0; i < scan.xlens.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s{\"xlen\":%d,\"entropy\":%.12g}",
                          i ? "," : "", scan.xlens[i], scan.entropies[i]);
            out.os() << buf;
        }
        out.os() << "]}\n";
        return 0;
    }
    out.os() << "# " << kVersion << "\n";
    scan_to_csv(out.os(), scan);
    return 0;
}

int cmd_predict(const CommonFlags& f) {
    const ChainParams p = f.mode == "limit"
                              ? ChainParams::limit(f.h, f.zeta, f.phi)
                              : make_params(f, 128);
    const AsymptoticPrediction pred = predict_B(p, f.alpha);
    Output out(f.out);
    prediction_to_json(out.os(), p, f.alpha, pred);
    out.os() << "\n";
    return 0;
}

int cmd_compare(const CommonFlags& f, int window_min, int window_max) {
    const ScanResult scan = run_scan(f);
    const AsymptoticPrediction pred = predict_B(scan.params, f.alpha);
    const int wmin = window_min > 0 ? window_min : std::max(50, f.xmin);
    const int wmax = window_max > 0 ? window_max : f.xmax;
    const ComparisonReport rep =
        compare(scan, pred, scan.params, f.alpha, wmin, wmax);
    Output out(f.out);
    report_to_json(out.os(), rep);
    out.os() << "\n";
    return 0;
}

int cmd_phase_diagram(const CommonFlags& f) {
    if (f.h_range.empty() || f.zeta_range.empty())
        throw DomainError("phase-diagram requires --h-range and --zeta-range");
    const Range hr = parse_range(f.h_range);
    const Range zr = parse_range(f.zeta_range);
    Output out(f.out);
    std::ostream& os = out.os();
    metadata_header(os, f, "command=phase-diagram alpha-grid over (h, zeta)");
    os << "h,zeta,B\n";
    char buf[128];
    for (int i = 0; i < zr.n; ++i) {
        const double z =
            zr.n == 1 ? zr.lo : zr.lo + (zr.hi - zr.lo) * i / (zr.n - 1);
        for (int j = 0; j < hr.n; ++j) {
            const double h =
                hr.n == 1 ? hr.lo : hr.lo + (hr.hi - hr.lo) * j / (hr.n - 1);
            const AsymptoticPrediction pred =
                predict_B(ChainParams::limit(h, z, f.phi), f.alpha);
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", h, z,
                          pred.total);
            os << buf;
        }
    }
    return 0;
}

int cmd_toeplitz_check(const CommonFlags& f) {
    const ChainParams p = ChainParams::limit(f.h, f.zeta, f.phi);
    const toeplitz::BlockSymbol sym = toeplitz::chain_symbol(p);
    const std::complex<double> lambda{f.lambda, 0.0};
    Output out(f.out);
    std::ostream& os = out.os();
    bool ok = true;
    char buf[256];

    const std::complex<double> szego = toeplitz::szego_linear_term(sym, lambda);
    const double szego_expect = std::log(f.lambda * f.lambda - 1.0);
    const double szego_err = std::abs(szego - szego_expect);
    ok &= szego_err < 1e-9;
    std::snprintf(buf, sizeof buf,
                  "szego_term %.12g expected %.12g error %.3g %s\n",
                  szego.real(), szego_expect, szego_err,
                  szego_err < 1e-9 ? "ok" : "FAIL");
    os << buf;

    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd c(2, 2);
    do {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) c(i, j) = {u(rng), u(rng)};
    } while (std::abs(c.determinant()) < 0.3);
    const double widom = toeplitz::widom_identity_residual(sym, c, 32);
    ok &= widom < 1e-9;
    std::snprintf(buf, sizeof buf, "widom_residual %.3g %s\n", widom,
                  widom < 1e-9 ? "ok" : "FAIL");
    os << buf;

    std::complex<double> b_pred = 0.0;
    for (const auto& j : sym.jumps) {
        const Eigen::MatrixXcd mm =
            lambda * Eigen::MatrixXcd::Identity(2, 2) - j.m_minus;
        const Eigen::MatrixXcd mp =
            lambda * Eigen::MatrixXcd::Identity(2, 2) - j.m_plus;
        b_pred += toeplitz::discontinuity_coefficient(mm, mp);
    }
    const toeplitz::LogCoeffFit fit = toeplitz::fit_log_coefficient(
        sym, lambda, {64, 91, 128, 181, 256, 362, 512});
    const double rel =
        std::abs(fit.b_fit - b_pred) / std::max(1e-300, std::abs(b_pred));
    ok &= rel < 0.02;
    std::snprintf(buf, sizeof buf,
                  "log_coefficient fit %.12g predicted %.12g rel_dev %.3g %s\n",
                  fit.b_fit.real(), b_pred.real(), rel,
                  rel < 0.02 ? "ok" : "FAIL");
    os << buf;
    return ok ? 0 : 3;
}

int cmd_oracle_check(const CommonFlags& f, int nmax) {
    Output out(f.out);
    std::ostream& os = out.os();
    double worst = 0.0;
    for (int n = 6; n <= nmax; n += 2) {
        for (double h : {-2.0, 0.0, 1.0, 2.0}) {
            for (double zeta : {0.5, 1.0, 1.5}) {
                for (double phi : {0.0, kPi / 4}) {
                    const ChainParams p = ChainParams::lattice(h, zeta, n, phi);
                    const oracle::FockState gs = oracle::exact_ground_state(p);
                    const CorrelationMatrix vfull =
                        oracle::correlation_from_state(gs);
                    for (int x = 1; x <= n / 2; ++x) {
                        const CorrelationMatrix v = restrict_interval(vfull, x);
                        for (double alpha : {1.0, 2.0, 3.0}) {
                            const double s_ed =
                                oracle::reduced_density_entropy(gs, x, alpha);
                            const double s_corr = entropy(v, alpha);
                            worst = std::max(worst, std::abs(s_ed - s_corr));
                        }
                    }
                }
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "max |S_ED - S_corr| = %.3g (tol 1e-7)\n",
                  worst);
    os << buf;
    return worst < 1e-7 ? 0 : 3;
}

CLI::App* make_sub(CLI::App& app, const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");  // frees -h for the field
    return sub;
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"long-range chain entanglement toolkit"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    CommonFlags f;

    auto* sym = make_sub(app, "symbol", "correlation symbol at one momentum");
    add_model_flags(sym, f);
    double theta = 0.0;
    std::string side = "value";
    sym->add_option("--theta", theta)->required();
    sym->add_option("--side", side)->check(CLI::IsMember({"value", "plus", "minus"}));
    sym->add_option("--out", f.out);

    auto* ent = make_sub(app, "entropy", "interval entropy");
    add_model_flags(ent, f);
    int xlen = 100;
    ent->add_option("--xlen", xlen)->required();
    ent->add_option("--alpha", f.alpha);
    ent->add_option("--out", f.out);

    auto* scan = make_sub(app, "scan", "entropy vs interval length");
    add_model_flags(scan, f);
    scan->add_option("--alpha", f.alpha);
    scan->add_option("--xmin", f.xmin);
    scan->add_option("--xmax", f.xmax);
    scan->add_option("--points", f.points);
    scan->add_option("--jobs", f.jobs);
    scan->add_option("--out", f.out);
    scan->add_option("--format", f.format);

    auto* pred = make_sub(app, "predict", "analytic log coefficient");
    add_model_flags(pred, f);
    pred->add_option("--alpha", f.alpha);
    pred->add_option("--out", f.out);

    auto* cmp = make_sub(app, "compare", "scan against prediction");
    add_model_flags(cmp, f);
    int wmin = 0, wmax = 0;
    cmp->add_option("--alpha", f.alpha);
    cmp->add_option("--xmin", f.xmin);
    cmp->add_option("--xmax", f.xmax);
    cmp->add_option("--points", f.points);
    cmp->add_option("--window-min", wmin);
    cmp->add_option("--window-max", wmax);
    cmp->add_option("--jobs", f.jobs);
    cmp->add_option("--out", f.out);

    auto* toep = make_sub(app, "toeplitz-check", "determinant asymptotics checks");
    add_model_flags(toep, f);
    toep->add_option("--lambda", f.lambda);
    toep->add_option("--out", f.out);

    auto* phase = make_sub(app, "phase-diagram", "grid of log coefficients");
    add_model_flags(phase, f);
    phase->add_option("--alpha", f.alpha);
    phase->add_option("--h-range", f.h_range, "a:b:n");
    phase->add_option("--zeta-range", f.zeta_range, "a:b:n");
    phase->add_option("--jobs", f.jobs);
    phase->add_option("--out", f.out);

    auto* orc = make_sub(app, "oracle-check", "small-ring exact diagonalization check");
    int nmax = 10;
    orc->add_option("--nmax", nmax);
    orc->add_option("--out", f.out);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (sym->parsed()) return cmd_symbol(f, theta, side);
    if (ent->parsed()) return cmd_entropy(f, xlen);
    if (scan->parsed()) return cmd_scan(f);
    if (pred->parsed()) return cmd_predict(f);
    if (cmp->parsed()) return cmd_compare(f, wmin, wmax);
    if (toep->parsed()) return cmd_toeplitz_check(f);
    if (phase->parsed()) return cmd_phase_diagram(f);
    if (orc->parsed()) return cmd_oracle_check(f, nmax);
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    try {
        return dispatch(args);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "{\"error\":\"usage\",\"detail\":\"%s\"}\n",
                     e.what());
        return 2;
    } catch (const ToleranceError& e) {
        std::fprintf(stderr,
                     "{\"error\":\"tolerance\",\"detail\":\"%s\",\"achieved\":%g}\n",
                     e.what(), e.achieved);
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "{\"error\":\"domain\",\"detail\":\"%s\"}\n",
                     e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "{\"error\":\"internal\",\"detail\":\"%s\"}\n",
                     e.what());
        return 1;
    }
}

}  // namespace lrk::cli
