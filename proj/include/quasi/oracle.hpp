#pragma once

// Brute-force ground truth: every Latin square of order n <= 5, commuting
// count histograms, and sampled counts along random switching walks.

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "quasi/square.hpp"

namespace quasi {

inline constexpr int kMaxEnumerationOrder = 5;

enum class CellOrder { RowMajor, ColumnMajor };

using Histogram = std::map<std::int64_t, std::uint64_t>;

/// Calls `visit` once for every Latin square of order n by cell-by-cell
/// backtracking. Returns the number visited. Throws for n outside 1..5.
std::uint64_t enumerate_all(int n, const std::function<void(const Grid&)>& visit,
                            CellOrder order = CellOrder::RowMajor);

/// Commuting count -> number of squares, over all squares of order n.
/// Row-major runs are sharded on the first two rows across `jobs` threads.
Histogram commuting_histogram(int n, int jobs = 1, CellOrder order = CellOrder::RowMajor);

/// Commuting counts seen along random switching walks at order n (6..8),
/// started from constructed squares with spread-out counts. `samples` is
/// the number of switches taken.
Histogram sampled_support(int n, int samples, std::uint64_t seed = 0);

/// {"count": frequency, ...} with keys in increasing order.
std::string histogram_json(const Histogram& h);

}  // namespace quasi
