#pragma once
#include <iosfwd>
#include <vector>

#include "lrk/corr.hpp"

namespace lrk {

// Positive members of the +-nu eigenvalue pairs of a correlation matrix.
struct EntropySpectrum {
    std::vector<double> nu;  // ascending, in [0, 1]
};

// Renyi weight of one correlation eigenvalue pair; alpha = 1 is the
// von Neumann limit -p log p - q log q with p, q = (1 +- x)/2.
double f_alpha(double alpha, double x);

// Derivative d f_alpha / dx on (-1, 1); analytic alpha -> 1 limit.
double f_alpha_prime(double alpha, double x);

EntropySpectrum spectrum(const CorrelationMatrix& v);

double entropy(const CorrelationMatrix& v, double alpha);

struct ScanOptions {
    int ring_multiple = 8;  // lattice ring N = max(4096, multiple * max xlen)
    int jobs = 0;           // 0: hardware concurrency
};

struct ScanResult {
    ChainParams params;
    double alpha;
    std::vector<int> xlens;
    std::vector<double> entropies;
    int ring_n;      // 0 when computed in limit mode
    GridKind grid;   // grid used in lattice mode
    int ring_multiple;
};

// Entropy of an interval for each requested length. Lattice mode fixes one
// ring sized by the largest interval so all points share a momentum grid.
ScanResult entropy_scan(const ChainParams& params, double alpha,
                        const std::vector<int>& xlens,
                        const ScanOptions& opts = {});

// CSV serialization: header `xlen,entropy`, 12 significant digits, with
// `# key=value` metadata lines above the header.
void scan_to_csv(std::ostream& os, const ScanResult& scan);

}  // namespace lrk
