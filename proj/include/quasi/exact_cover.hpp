#pragma once

// Dancing-links exact cover with randomised option order and a node budget,
// used for the symmetric completions behind commutative holes and switching.

#include <cstdint>
#include <optional>
#include <vector>

#include "quasi/perm.hpp"

namespace quasi {

class ExactCover {
public:
    explicit ExactCover(int columns);

    /// Adds an option covering the given (distinct) columns; returns its id.
    int add_option(const std::vector<int>& columns);

    int columns() const { return columns_; }
    int options() const { return static_cast<int>(option_columns_.size()); }

    struct Result {
        std::optional<std::vector<int>> chosen;  // option ids
        std::uint64_t nodes = 0;
        bool budget_exhausted = false;
    };

    /// One search: options are linked in an rng-shuffled order, and the
    /// search gives up after `node_budget` branching steps.
    Result solve(Rng& rng, std::uint64_t node_budget) const;

private:
    int columns_;
    std::vector<std::vector<int>> option_columns_;
};

}  // namespace quasi
