#pragma once

#include <vector>

#include "quotdeg/report.hpp"

namespace quotdeg {

struct VerifyOptions {
    long long g_max = 4;
    long long p_max = 13;
    double tol = 1e-9;       // relative tolerance for the float cross-checks
    unsigned rng_seed = 20240913;
};

// Runs every module's invariant suite over the configured grid and returns
// one result per check, in a fixed order. Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace quotdeg
