#pragma once

#include <cstdint>

namespace goldbach {

/// Cost guards shared by every module. All values are inclusive upper bounds.
struct Caps {
    /// Largest 2n for which factorial-bearing identities are evaluated.
    std::uint64_t factorial_cap = 2000;
    /// Largest j accepted by phase_value. Tracks factorial_cap + 1 by default.
    std::uint64_t phase_cap = 2001;
    /// Largest 2n accepted by the exact Wilson counting backend.
    std::uint64_t wilson_count_cap = 10'000;
    /// Largest even number a sweep may reach.
    std::uint64_t sweep_cap = 100'000'000;
    /// Largest matrix side (number of odd labels) an export may produce.
    std::uint64_t matrix_side_cap = 512;
    /// Largest sieve limit.
    std::uint64_t sieve_cap = 100'000'001;
};

} // namespace goldbach
