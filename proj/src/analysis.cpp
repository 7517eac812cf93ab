#include "lrk/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "lrk/errors.hpp"

namespace lrk {

LogFit fit_entropy_slope(const ScanResult& scan, int window_min,
                         int window_max) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < scan.xlens.size(); ++i) {
        if (scan.xlens[i] >= window_min && scan.xlens[i] <= window_max) {
            xs.push_back(std::log(static_cast<double>(scan.xlens[i])));
            ys.push_back(scan.entropies[i]);
        }
    }
    if (xs.size() < 4)
        throw WindowError("entropy fit window holds fewer than 4 points");
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LogFit fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;
    double rss = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - fit.slope * xs[i] - fit.intercept;
        rss += r * r;
    }
    fit.rms_residual = std::sqrt(rss / m);
    fit.window_min = window_min;
    fit.window_max = window_max;
    return fit;
}

ComparisonReport compare(const ScanResult& scan,
                         const AsymptoticPrediction& prediction,
                         const ChainParams& pred_params, double pred_alpha,
                         int window_min, int window_max) {
    if (std::abs(scan.params.h - pred_params.h) > 1e-12 ||
        std::abs(scan.params.zeta - pred_params.zeta) > 1e-12 ||
        std::abs(scan.params.phi - pred_params.phi) > 1e-12 ||
        std::abs(scan.alpha - pred_alpha) > 1e-12)
        throw ComparisonError("scan and prediction parameters differ");

    const LogFit fit = fit_entropy_slope(scan, window_min, window_max);
    ComparisonReport r;
    r.fitted_slope = fit.slope;
    r.predicted_B = prediction.total;
    r.abs_dev = std::abs(fit.slope - prediction.total);
    r.rel_dev = prediction.total != 0.0 ? r.abs_dev / std::abs(prediction.total)
                                        : r.abs_dev;
    // constant anchored at the largest window point
    int anchor = -1;
    double anchor_s = 0.0;
    for (size_t i = 0; i < scan.xlens.size(); ++i) {
        if (scan.xlens[i] >= window_min && scan.xlens[i] <= window_max &&
            scan.xlens[i] > anchor) {
            anchor = scan.xlens[i];
            anchor_s = scan.entropies[i];
        }
    }
    r.constant = anchor_s - prediction.total * std::log(static_cast<double>(anchor));
    r.window_min = fit.window_min;
    r.window_max = fit.window_max;
    return r;
}

void report_to_json(std::ostream& os, const ComparisonReport& r) {
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "{\"fitted_slope\":%.12g,\"predicted_B\":%.12g,"
                  "\"abs_dev\":%.12g,\"rel_dev\":%.12g,\"constant\":%.12g,"
                  "\"window\":[%d,%d]}",
                  r.fitted_slope, r.predicted_B, r.abs_dev, r.rel_dev,
                  r.constant, r.window_min, r.window_max);
    os << buf;
}

}  // namespace lrk
