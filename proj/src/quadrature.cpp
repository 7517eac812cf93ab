#include "lrk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrk/errors.hpp"

namespace lrk {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
struct Gk15Result {
    T kronrod;
    double error;
    double resabs;  // integral of |f|, for roundoff floors
};

template <class T, class F>
Gk15Result<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T resg = wg[3] * fc;
    T resk = wgk[7] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        T f1 = f(c - dx);
        T f2 = f(c + dx);
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    resk *= h;
    resg *= h;
    resabs *= std::abs(h);
    return {resk, std::abs(resk - resg), resabs};
}

template <class T, class F>
T gk_adaptive_impl(const F& f, double a, double b, double abs_tol,
                   int max_depth) {
    struct Seg {
        double a, b, err, resabs;
        T val;
        int depth;
        bool refinable;
    };
    auto at_noise = [](const Seg& s) {
        return s.err <= 8e-16 * s.resabs;  // K-G difference is pure roundoff
    };
    auto r0 = gk15<T>(f, a, b);
    std::vector<Seg> segs{{a, b, r0.error, r0.resabs, r0.kronrod, 0, true}};
    while (true) {
        double total_err = 0.0, scale = 0.0;
        size_t worst = segs.size();
        for (size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].err;
            scale += segs[i].resabs;
            if (segs[i].refinable &&
                (worst == segs.size() || segs[i].err > segs[worst].err))
                worst = i;
        }
        // absolute target, floored at the roundoff level of the integral
        const double target = std::max(abs_tol, 1e-15 * scale);
        if (total_err <= target) break;
        if (worst == segs.size()) break;  // everything at its noise floor
        Seg s = segs[worst];
        if (at_noise(s) || s.depth >= max_depth ||
            s.b - s.a < 4e-16 * (std::abs(s.a) + std::abs(s.b))) {
            segs[worst].refinable = false;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        auto rl = gk15<T>(f, s.a, m);
        auto rr = gk15<T>(f, m, s.b);
        // deep splits that do not reduce the error estimate are chasing
        // integrand roundoff; freeze those children
        const bool stalled =
            s.depth > 12 && rl.error + rr.error >= 0.99 * s.err;
        segs[worst] = {s.a, m,         rl.error,     rl.resabs,
                       rl.kronrod, s.depth + 1, !stalled};
        segs.push_back({m, s.b,         rr.error,     rr.resabs,
                        rr.kronrod, s.depth + 1, !stalled});
        if (segs.size() > 200000)
            throw ToleranceError("adaptive quadrature: segment budget exhausted",
                                 total_err);
    }
    T sum{};
    for (const auto& s : segs) sum += s.val;
    return sum;
}

template <class T, class F>
T gk_panels_impl(const F& f, double a, double b,
                 const std::vector<double>& breakpoints, double abs_tol) {
    std::vector<double> pts{a, b};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    T sum{};
    const double tol_per = abs_tol / static_cast<double>(pts.size() - 1);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        sum += gk_adaptive_impl<T>(f, pts[i], pts[i + 1], tol_per, 48);
    return sum;
}

}  // namespace

double gk_adaptive(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth) {
    return gk_adaptive_impl<double>(f, a, b, abs_tol, max_depth);
}

std::complex<double> gk_adaptive_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int max_depth) {
    return gk_adaptive_impl<std::complex<double>>(f, a, b, abs_tol, max_depth);
}

double gk_panels(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints, double abs_tol) {
    return gk_panels_impl<double>(f, a, b, breakpoints, abs_tol);
}

std::complex<double> gk_panels_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breakpoints, double abs_tol) {
    return gk_panels_impl<std::complex<double>>(f, a, b, breakpoints, abs_tol);
}

TanhSinhResult tanh_sinh(
    const std::function<double(double, double, double)>& f, double a, double b,
    double abs_tol, int max_level) {
    // x = c + r*tanh(pi/2 sinh t); distances to the endpoints via
    // 1 -+ tanh(u) = 2 exp(-+2u)/(1 + exp(-+2u)) evaluated cancellation-free.
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double pi_half = 1.5707963267948966;

    auto eval = [&](double t) -> double {
        const double u = pi_half * std::sinh(t);
        const double e2u = std::exp(-2.0 * std::abs(u));
        const double dist = 2.0 * e2u / (1.0 + e2u);  // 1 - |tanh(u)|
        const double x = (u >= 0) ? b - r * dist : a + r * dist;
        const double xa = (u >= 0) ? (b - a) - r * dist : r * dist;
        const double bx = (u >= 0) ? r * dist : (b - a) - r * dist;
        const double w = pi_half * std::cosh(t) /
                         std::pow(std::cosh(u), 2);  // dx/dt / r
        if (!std::isfinite(w) || w == 0.0) return 0.0;
        const double v = f(x, xa, bx);
        return std::isfinite(v) ? v * w : 0.0;
    };

    const double t_max = 6.5;  // |tanh(pi/2 sinh 6.5)| indistinguishable from 1
    double h = 1.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    // level 0: trapezoid with h = 1
    double sum = eval(0.0);
    for (double t = h; t <= t_max; t += h) sum += eval(t) + eval(-t);
    double value = r * h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h) add += eval(t) + eval(-t);
        sum += add;
        prev = value;
        value = r * h * sum;
        const double err = std::abs(value - prev);
        if (level >= 3 && err <= abs_tol)
            return {value, err, true};
    }
    return {value, std::abs(value - prev), false};
}

const double GaussLegendre16::nodes[16] = {
    -0.989400934991649932596154173450, -0.944575023073232576077988415535,
    -0.865631202387831743880467897712, -0.755404408355003033895101194847,
    -0.617876244402643748446671764049, -0.458016777657227386342419442984,
    -0.281603550779258913230460501460, -0.095012509837637440185319335425,
    0.095012509837637440185319335425,  0.281603550779258913230460501460,
    0.458016777657227386342419442984,  0.617876244402643748446671764049,
    0.755404408355003033895101194847,  0.865631202387831743880467897712,
    0.944575023073232576077988415535,  0.989400934991649932596154173450};
const double GaussLegendre16::weights[16] = {
    0.027152459411754094851780572456, 0.062253523938647892862843836994,
    0.095158511682492784809925107602, 0.124628971255533872052476282192,
    0.149595988816576732081501730547, 0.169156519395002538189312079030,
    0.182603415044923588866763667969, 0.189450610455068496285396723208,
    0.189450610455068496285396723208, 0.182603415044923588866763667969,
    0.169156519395002538189312079030, 0.149595988816576732081501730547,
    0.124628971255533872052476282192, 0.095158511682492784809925107602,
    0.062253523938647892862843836994, 0.027152459411754094851780572456};

CompositeGrid composite_gl16(const std::vector<double>& edges) {
    CompositeGrid grid;
    grid.nodes.reserve(16 * (edges.size() - 1));
    grid.weights.reserve(16 * (edges.size() - 1));
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double half = 0.5 * (edges[i + 1] - edges[i]);
        const double mid = 0.5 * (edges[i + 1] + edges[i]);
        if (half <= 0) continue;
        for (int k = 0; k < 16; ++k) {
            grid.nodes.push_back(mid + half * GaussLegendre16::nodes[k]);
            grid.weights.push_back(half * GaussLegendre16::weights[k]);
        }
    }
    return grid;
}

}  // namespace lrk
