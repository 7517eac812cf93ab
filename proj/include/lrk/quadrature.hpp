#pragma once
#include <complex>
#include <functional>
#include <vector>

namespace lrk {

// Adaptive Gauss-Kronrod 15(7) on [a, b] to absolute tolerance.
double gk_adaptive(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth = 48);

std::complex<double> gk_adaptive_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int max_depth = 48);

// Same, with a list of interior breakpoints (jumps, kinks, peaks).
double gk_panels(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints, double abs_tol);

std::complex<double> gk_panels_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breakpoints, double abs_tol);

struct TanhSinhResult {
    double value;
    double error_estimate;
    bool converged;
};

// Double-exponential quadrature on (a, b). The integrand receives the
// abscissa x together with the distances (x - a) and (b - x) computed
// without cancellation, so endpoint singularities like log(b - x) or
// sqrt(x - a) can be evaluated stably.
TanhSinhResult tanh_sinh(
    const std::function<double(double x, double x_minus_a, double b_minus_x)>& f,
    double a, double b, double abs_tol, int max_level = 12);

// Fixed 16-point Gauss-Legendre rule, nodes/weights on [-1, 1].
struct GaussLegendre16 {
    static const double nodes[16];
    static const double weights[16];
};

// Composite fixed-order grid: panel edges -> flattened nodes and weights.
struct CompositeGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
};
CompositeGrid composite_gl16(const std::vector<double>& edges);

}  // namespace lrk
