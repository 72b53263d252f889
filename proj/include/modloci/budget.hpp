#pragma once

#include <cstdint>

namespace modloci {

/// Resource budgets for the symbolic kernels.  Exceeding one throws
/// ResourceLimit; verdict-producing callers report "inconclusive" instead
/// of guessing.
struct Budget {
    std::int64_t gb_steps = 2'000'000;   // pair reductions across one basis computation
    int resolution_extra = 2;           // resolution cutoff = nvars + dim R + this
    int bass_window_extra = 2;          // Bass window top = dim R + this
    int saturation_rounds = 64;
    int witness_products = 3;           // witness search: products of at most this many factors

    static Budget defaults() { return Budget{}; }
    /// Reads MODLOCI_GB_STEPS, MODLOCI_RES_CUTOFF, MODLOCI_BASS_WINDOW from
    /// the environment on top of the defaults.
    static Budget from_env();
};

}  // namespace modloci
