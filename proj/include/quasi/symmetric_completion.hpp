#pragma once

#include <cstdint>
#include <optional>

#include "quasi/perm.hpp"
#include "quasi/square.hpp"

namespace quasi {

struct CompletionLimits {
    int restarts = 200;
    std::uint64_t initial_nodes = 4000;  // grown by half after every failed restart, capped below
    std::uint64_t max_nodes = 5'000'000;
};

/// Completes a symmetric partial grid to a symmetric member of Omega(n, m)
/// (a symmetric Latin square when hole_size == 0). Filled cells of `partial`
/// are kept; they must be symmetric and must not touch the hole block.
/// Returns nullopt when every restart runs out of budget.
std::optional<Grid> complete_symmetric(const Grid& partial, int hole_size, Rng& rng,
                                       const CompletionLimits& limits = {});

}  // namespace quasi
