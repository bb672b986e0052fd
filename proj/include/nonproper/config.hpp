#pragma once

#include <cstdint>

namespace nonproper {

// All numeric thresholds live here.
struct Tolerances {
    unsigned precision_bits = 128;
    unsigned max_precision_bits = 512;
    double root_residual = 1e-28;
    double cluster_radius = 1e-20;
    double zero_threshold = 1e-10;
    double numeric_residual = 1e-8;
    double attained_residual = 1e-12;
    double dedup_radius = 1e-10;
    double implicit_residual = 1e-9;
    double snap_tolerance = 1e-24;
    int max_iterations = 600;
};

struct RunOptions {
    std::uint64_t seed = 0;
    Tolerances tol;
};

}  // namespace nonproper
