#pragma once

// Row cycles, cycle switching, and symmetric squares that carry a row cycle
// of prescribed length between rows 0 and 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "quasi/perm.hpp"
#include "quasi/square.hpp"

namespace quasi {

struct RowCycle {
    int row_a = 0;
    int row_b = 0;
    std::vector<int> columns;  // sorted

    int length() const { return static_cast<int>(columns.size()); }
    bool operator==(const RowCycle&) const = default;
};

/// The row cycle rho(i, j, c): columns of row i holding the symbols in the
/// cycle of r_ij through s(i, c).
RowCycle row_cycle(const Square& s, int i, int j, int c);
/// All cycles of r_ij; their column sets partition 0..n-1.
std::vector<RowCycle> row_cycles(const Square& s, int i, int j);

/// Swaps rows row_a and row_b on the cycle's columns. Switching twice on the
/// same cycle restores the square.
Square switch_cycle(const Square& s, const RowCycle& cycle);

/// Commuting count after switching, recounting only pairs that touch the
/// switched cells.
std::int64_t count_after_switch(const Square& s, std::int64_t count_before, const RowCycle& cycle);

enum class CycleKind {
    ThroughDiagonal,  // column set contains {0, 1}; switching leaves n^2 - 4L + 6
    OffColumns,       // column set avoids {0, 1}; switching leaves n^2 - 4L
};

/// Checks the rectangle conditions for completing rows 0 and 1 to a
/// symmetric square: R01 = R10, and R00 != R11 when n is odd.
bool symmetric_rectangle_ok(std::span<const Symbol> row0, std::span<const Symbol> row1);

/// Completes rows 0 = identity and 1 = pi to a symmetric Latin square.
/// Throws std::invalid_argument when the rectangle conditions fail.
Square complete_symmetric_rows(const Permutation& pi, std::uint64_t seed);

/// Row-1 permutation hosting a cycle of the requested kind and length.
Permutation cycle_design(int n, CycleKind kind, int length);

struct SymmetricWithCycle {
    Square square;  // symmetric
    RowCycle cycle;
};

/// Requires n >= 6; ThroughDiagonal: 3 <= length <= n-2; OffColumns:
/// 2 <= length <= n-3.
SymmetricWithCycle symmetric_with_cycle(int n, CycleKind kind, int length, std::uint64_t seed = 0);

/// True iff k = n^2 - 2a for some 3 <= a <= 2n - 6 (n >= 6).
bool high_count_reachable(int n, std::int64_t k);

struct HighCount {
    Square square;
    CycleKind kind;
    int length;
};

/// A square with exactly k_target commuting pairs from one switch on a
/// symmetric square. Throws std::invalid_argument if k_target is outside the
/// family.
HighCount high_counts(int n, std::int64_t k_target, std::uint64_t seed = 0);

}  // namespace quasi
