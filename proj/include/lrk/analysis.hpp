#pragma once
#include <iosfwd>

#include "lrk/asymptotics.hpp"
#include "lrk/spectral.hpp"

namespace lrk {

struct LogFit {
    double slope;
    double intercept;
    double rms_residual;
    int window_min;
    int window_max;
};

// Ordinary least squares of S_alpha against log|X| over the window.
LogFit fit_entropy_slope(const ScanResult& scan, int window_min,
                         int window_max);

struct ComparisonReport {
    double fitted_slope;
    double predicted_B;
    double abs_dev;
    double rel_dev;
    double constant;  // anchored at the largest |X| in the window
    int window_min;
    int window_max;
};

// Fitted slope against the analytic prediction; the additive constant is
// fixed by matching at the largest interval of the window.
ComparisonReport compare(const ScanResult& scan,
                         const AsymptoticPrediction& prediction,
                         const ChainParams& pred_params, double pred_alpha,
                         int window_min, int window_max);

// JSON: {fitted_slope, predicted_B, abs_dev, rel_dev, constant, window}
void report_to_json(std::ostream& os, const ComparisonReport& r);

}  // namespace lrk
