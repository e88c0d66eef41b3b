#pragma once

#include <cstdint>

namespace sgforge {

/// Work limits for the potentially explosive algorithms. Exhaustion raises
/// ResourceLimit; the limits are configuration, not semantics.
struct Budget {
    std::uint64_t max_spairs = 1'000'000;               // S-pair reductions per Groebner run
    std::uint64_t max_factorization_nodes = 10'000'000; // recursion nodes per enumeration
};

}  // namespace sgforge
