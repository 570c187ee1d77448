#include "quasi/generators.hpp"

#include <stdexcept>
#include <string>

namespace quasi {

namespace {

// Lexicographically first solutions of find_anti_commutative(4) and (6).
const std::vector<std::vector<Symbol>> kAnti4 = {
    {0, 1, 2, 3},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
    {1, 0, 3, 2},
};

const std::vector<std::vector<Symbol>> kAnti6 = {
    {0, 1, 2, 3, 4, 5},
    {2, 0, 1, 4, 5, 3},
    {1, 2, 0, 5, 3, 4},
    {4, 5, 3, 0, 1, 2},
    {5, 3, 4, 2, 0, 1},
    {3, 4, 5, 1, 2, 0},
};

}  // namespace

Square commutative(int n) {
    if (n <= 0) throw std::invalid_argument("order must be positive");
    Grid g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = (i + j) % n;
    return Square(std::move(g));
}

Square anti_commutative(int n) {
    if (n <= 0) throw std::invalid_argument("order must be positive");
    if (n == 2) throw std::invalid_argument("there is no anti-commutative quasigroup of order 2");
    if (n % 2 == 1) {
        Grid g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = (2 * i + j) % n;
        return Square(std::move(g));
    }
    if (n == 4) return Square::from_rows(kAnti4);
    if (n == 6) return Square::from_rows(kAnti6);
    Square half = anti_commutative(n / 2);
    return paste(doubling_hole(half), half);
}

PartialSquare doubling_hole(const Square& base, const Permutation& sigma) {
    const int m = base.order();
    if (m < 3) throw std::invalid_argument("doubling needs a base of order at least 3");
    if (sigma.size() != m || !sigma.fixed_points().empty())
        throw std::invalid_argument("doubling needs a derangement of the base symbols");
    if (count_commuting(base) != m) throw std::invalid_argument("doubling base must be anti-commutative");
    Grid g(2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            g(i, j) = m + base(i, j);
            g(i, m + j) = sigma(base(i, j));
            g(m + i, j) = base(j, i);
        }
    }
    return PartialSquare(std::move(g), m);
}

PartialSquare doubling_hole(const Square& base) {
    const int m = base.order();
    std::vector<int> shift(m);
    for (int i = 0; i < m; ++i) shift[i] = (i + 1) % m;
    return doubling_hole(base, Permutation(std::move(shift)));
}

std::optional<Square> find_anti_commutative(int n) {
    if (n <= 0) throw std::invalid_argument("order must be positive");
    Grid g(n);
    std::vector<std::vector<char>> row_has(n, std::vector<char>(n, 0)), col_has = row_has;
    const int total = n * n;
    // Iterative cell-order backtracking; next[p] is the next symbol to try at cell p.
    std::vector<int> next(total, 0);
    int p = 0;
    while (p >= 0 && p < total) {
        const int r = p / n, c = p % n;
        if (g(r, c) != kEmpty) {
            row_has[r][g(r, c)] = col_has[c][g(r, c)] = 0;
            g(r, c) = kEmpty;
        }
        bool placed = false;
        for (Symbol s = next[p]; s < n; ++s) {
            if (row_has[r][s] || col_has[c][s]) continue;
            if (r != c && g(c, r) == s) continue;
            g(r, c) = s;
            row_has[r][s] = col_has[c][s] = 1;
            next[p] = s + 1;
            placed = true;
            break;
        }
        if (placed) {
            ++p;
            if (p < total) next[p] = 0;
        } else {
            next[p] = 0;
            --p;
        }
    }
    if (p < 0) return std::nullopt;
    return Square(std::move(g));
}

}  // namespace quasi
