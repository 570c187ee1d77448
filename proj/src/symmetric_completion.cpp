#include "quasi/symmetric_completion.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "quasi/exact_cover.hpp"

namespace quasi {

// Exact cover model: one primary column per empty unordered cell {x, y} and
// one per (row, symbol) that row still has to receive. Placing s in {x, y}
// covers the cell and (x, s), (y, s); mirror cells are written together.
std::optional<Grid> complete_symmetric(const Grid& partial, int hole_size, Rng& rng,
                                       const CompletionLimits& limits) {
    const int n = partial.order();
    const int h0 = n - hole_size;
    if (hole_size < 0 || hole_size > n) throw std::invalid_argument("bad hole size");
    if (!is_symmetric(partial)) throw std::invalid_argument("partial grid is not symmetric");

    auto in_hole = [&](int x) { return x >= h0; };
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Symbol s = partial(r, c);
            if (s == kEmpty) continue;
            if (in_hole(r) && in_hole(c)) throw std::invalid_argument("hole cell is filled");
            if (s < 0 || s >= n || present[r][s]) return std::nullopt;
            present[r][s] = 1;
        }
    }
    auto required = [&](int v, Symbol s) { return !present[v][s] && (!in_hole(v) || !in_hole(s)); };

    std::vector<int> need_index(static_cast<std::size_t>(n) * n, -1);
    int columns = 0;
    struct CellRef {
        int x, y;
    };
    std::vector<CellRef> cells;
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            if (in_hole(x) && in_hole(y)) continue;
            if (partial(x, y) == kEmpty) {
                cells.push_back({x, y});
                ++columns;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        for (Symbol s = 0; s < n; ++s)
            if (required(v, s)) need_index[static_cast<std::size_t>(v) * n + s] = columns++;

    ExactCover ec(columns);
    struct Placement {
        int x, y;
        Symbol s;
    };
    std::vector<Placement> placements;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        auto [x, y] = cells[ci];
        for (Symbol s = 0; s < n; ++s) {
            if (!required(x, s) || !required(y, s)) continue;
            std::vector<int> cols{static_cast<int>(ci), need_index[static_cast<std::size_t>(x) * n + s]};
            if (x != y) cols.push_back(need_index[static_cast<std::size_t>(y) * n + s]);
            ec.add_option(cols);
            placements.push_back({x, y, s});
        }
    }

    std::uint64_t budget = limits.initial_nodes;
    for (int attempt = 0; attempt < limits.restarts; ++attempt) {
        auto res = ec.solve(rng, budget);
        if (res.chosen) {
            Grid out = partial;
            for (int opt : *res.chosen) {
                const auto& p = placements[opt];
                out(p.x, p.y) = p.s;
                out(p.y, p.x) = p.s;
            }
            return out;
        }
        if (!res.budget_exhausted) return std::nullopt;  // proven infeasible
        budget = std::min(budget * 3 / 2, limits.max_nodes);
    }
    return std::nullopt;
}

}  // namespace quasi
