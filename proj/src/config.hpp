#pragma once

#include <cstdint>

namespace glr {

/// Resource limits and tuning knobs shared by all analyses.
///
/// Every cap is a hard limit: crossing one raises Error rather than
/// silently truncating a result.
struct RunConfig {
    std::uint32_t max_elements = 4096;          ///< largest ring / MV-algebra carrier
    std::uint32_t max_ideals = 1u << 16;        ///< two-sided (and left) ideal enumeration cap
    std::uint32_t max_semiring_ideals = 1u << 16;
    std::uint32_t exhaustive_family_limit = 12; ///< full subset families below this lattice size
    std::uint32_t sampled_families = 256;       ///< sampled families above the limit
    std::uint64_t seed = 0;                     ///< RNG seed for sampled checks
    std::uint32_t jobs = 1;                     ///< worker threads for corpus-wide runs
};

inline const char* workbench_version() { return "0.1.0"; }

} // namespace glr
