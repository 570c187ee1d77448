#pragma once

// Deliberately simple reference checks, kept independent of the library.

#include <cstdint>
#include <set>
#include <vector>

#include "quasi/square.hpp"

namespace naive {

using Rows = std::vector<std::vector<int>>;

inline Rows rows_of(const quasi::Grid& g) {
    Rows r(g.order(), std::vector<int>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) r[i][j] = g(i, j);
    return r;
}

inline std::int64_t count(const Rows& r) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[i][j] >= 0 && r[j][i] >= 0 && r[i][j] == r[j][i]) ++c;
    return c;
}

inline std::int64_t count(const quasi::Grid& g) { return count(rows_of(g)); }

inline bool latin(const Rows& r) {
    const int n = static_cast<int>(r.size());
    for (int i = 0; i < n; ++i) {
        std::set<int> row, col;
        for (int j = 0; j < n; ++j) {
            if (r[i][j] < 0 || r[i][j] >= n || r[j][i] < 0 || r[j][i] >= n) return false;
            row.insert(r[i][j]);
            col.insert(r[j][i]);
        }
        if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
    }
    return true;
}

inline bool latin(const quasi::Grid& g) { return latin(rows_of(g)); }

// n, n+2, ..., n^2-6 and n^2.
inline std::set<std::int64_t> D(int n) {
    std::set<std::int64_t> s{static_cast<std::int64_t>(n) * n};
    for (std::int64_t k = n; k <= static_cast<std::int64_t>(n) * n - 6; k += 2) s.insert(k);
    return s;
}

inline std::set<std::int64_t> DD(int n) {
    if (n == 4) return {4, 6, 8, 16};
    if (n == 5) return {5, 7, 9, 11, 13, 15, 19, 25};
    return D(n);
}

}  // namespace naive
