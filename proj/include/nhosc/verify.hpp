#pragma once

#include <string>
#include <vector>

namespace nhosc {

struct CheckResult {
    std::string name;
    bool passed;
    double worst;       ///< largest observed error measure
    double threshold;   ///< contract the measure was held to
    std::string detail;
};

struct VerifyOptions {
    double alpha = 5.0;
    double homega = 1.0;
    double tau = 5.0;
    unsigned cutoff = 8;
};

/// Runs every oracle check over a built-in (n, mu) grid: block
/// pseudo-Hermiticity, metric diagnostics and closed forms, partition
/// function dual route, full-space block decomposition and symmetries,
/// and finite-difference derivatives.
std::vector<CheckResult> run_verification_suite(const VerifyOptions& opts);

}  // namespace nhosc
