#include "quasi/switching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quasi/symmetric_completion.hpp"

namespace quasi {

RowCycle row_cycle(const Square& s, int i, int j, int c) {
    const int n = s.order();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n || c < 0 || c >= n)
        throw std::invalid_argument("row cycle needs two distinct rows and a valid column");
    std::vector<int> pos_i(n);
    for (int x = 0; x < n; ++x) pos_i[s(i, x)] = x;
    RowCycle rc{i, j, {}};
    int cur = c;
    do {
        rc.columns.push_back(cur);
        cur = pos_i[s(j, cur)];
    } while (cur != c);
    std::sort(rc.columns.begin(), rc.columns.end());
    return rc;
}

std::vector<RowCycle> row_cycles(const Square& s, int i, int j) {
    std::vector<RowCycle> out;
    std::vector<char> seen(s.order(), 0);
    for (int c = 0; c < s.order(); ++c) {
        if (seen[c]) continue;
        auto rc = row_cycle(s, i, j, c);
        for (int x : rc.columns) seen[x] = 1;
        out.push_back(std::move(rc));
    }
    return out;
}

Square switch_cycle(const Square& s, const RowCycle& cycle) {
    Grid g = s.grid();
    for (int c : cycle.columns) std::swap(g(cycle.row_a, c), g(cycle.row_b, c));
    return Square(std::move(g));
}

namespace {

std::vector<std::pair<int, int>> touched_pairs(const RowCycle& cycle) {
    std::vector<std::pair<int, int>> pairs;
    for (int r : {cycle.row_a, cycle.row_b})
        for (int c : cycle.columns) pairs.emplace_back(std::min(r, c), std::max(r, c));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::int64_t pair_contribution(const Grid& g, const std::vector<std::pair<int, int>>& pairs) {
    std::int64_t total = 0;
    for (auto [x, y] : pairs) {
        if (x == y)
            total += 1;
        else if (g(x, y) == g(y, x))
            total += 2;
    }
    return total;
}

}  // namespace

std::int64_t count_after_switch(const Square& s, std::int64_t count_before, const RowCycle& cycle) {
    auto pairs = touched_pairs(cycle);
    Grid g = s.grid();
    std::int64_t before = pair_contribution(g, pairs);
    for (int c : cycle.columns) std::swap(g(cycle.row_a, c), g(cycle.row_b, c));
    return count_before - before + pair_contribution(g, pairs);
}

bool symmetric_rectangle_ok(std::span<const Symbol> row0, std::span<const Symbol> row1) {
    const std::size_t n = row0.size();
    if (n < 2 || row1.size() != n) return false;
    if (row0[1] != row1[0]) return false;
    if (n % 2 == 1 && row0[0] == row1[1]) return false;
    return true;
}

Square complete_symmetric_rows(const Permutation& pi, std::uint64_t seed) {
    const int n = pi.size();
    if (n < 2) throw std::invalid_argument("need at least two rows");
    std::vector<Symbol> row0(n), row1(pi.image());
    std::iota(row0.begin(), row0.end(), 0);
    if (!symmetric_rectangle_ok(row0, row1))
        throw std::invalid_argument(n % 2 == 1 && row1[1] == 0
                                        ? "rectangle forces R00 = R11 at odd order; no symmetric completion"
                                        : "rectangle needs R01 = R10 for a symmetric completion");
    if (!pi.fixed_points().empty()) throw std::invalid_argument("row 1 must be a derangement of row 0");
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n) * 7919 + attempt));
        Grid g(n);
        for (int c = 0; c < n; ++c) {
            g(0, c) = g(c, 0) = row0[c];
            g(1, c) = g(c, 1) = row1[c];
        }
        if (n % 2 == 1) {
            // Every symbol sits on the diagonal exactly once at odd order.
            std::vector<Symbol> rest;
            for (Symbol v = 0; v < n; ++v)
                if (v != g(0, 0) && v != g(1, 1)) rest.push_back(v);
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                shuffle_in_place(std::span<Symbol>(rest), rng);
                placed = true;
                for (int x = 2; x < n && placed; ++x) {
                    Symbol v = rest[x - 2];
                    placed = v != g(x, 0) && v != g(x, 1);
                }
            }
            if (!placed) continue;
            for (int x = 2; x < n; ++x) g(x, x) = rest[x - 2];
        }
        if (auto done = complete_symmetric(g, 0, rng)) return Square(std::move(*done));
    }
    throw std::runtime_error("symmetric completion of a 2 x " + std::to_string(n) + " rectangle ran out of budget");
}

namespace {

void append_cycle(std::vector<int>& image, int first, int len) {
    for (int t = 0; t < len; ++t) image[first + t] = first + (t + 1) % len;
}

// Splits [first, first + len) into 2-cycles plus one 3-cycle when len is odd.
void append_small_cycles(std::vector<int>& image, int first, int len) {
    if (len == 1) throw std::logic_error("cannot derange a single leftover point");
    int p = first;
    if (len % 2 == 1) {
        append_cycle(image, p, 3);
        p += 3;
    }
    for (; p < first + len; p += 2) append_cycle(image, p, 2);
}

}  // namespace

Permutation cycle_design(int n, CycleKind kind, int length) {
    if (n < 6) throw std::invalid_argument("cycle designs need n >= 6");
    std::vector<int> image(n, -1);
    if (kind == CycleKind::ThroughDiagonal) {
        if (length < 3 || length > n - 2)
            throw std::invalid_argument("through-diagonal cycle length must lie in [3, n-2]");
        append_cycle(image, 0, length);
        append_small_cycles(image, length, n - length);
    } else {
        if (length < 2 || length > n - 3)
            throw std::invalid_argument("off-column cycle length must lie in [2, n-3]");
        int head = n % 2 == 0 ? 2 : 3;
        if (n - head - length == 1) ++head;
        append_cycle(image, 0, head);
        append_cycle(image, head, length);
        int rest = n - head - length;
        if (rest > 0) append_small_cycles(image, head + length, rest);
    }
    return Permutation(std::move(image));
}

SymmetricWithCycle symmetric_with_cycle(int n, CycleKind kind, int length, std::uint64_t seed) {
    Permutation pi = cycle_design(n, kind, length);
    Square sq = complete_symmetric_rows(pi, mix_seed(seed, static_cast<std::uint64_t>(kind) * 1009 + length));
    int column = 0;
    if (kind == CycleKind::OffColumns) column = n % 2 == 0 ? 2 : 3;
    RowCycle rc = row_cycle(sq, 0, 1, column);
    if (kind == CycleKind::OffColumns) {
        // cycle_design may have lengthened the head cycle; locate the requested one.
        for (const auto& cand : row_cycles(sq, 0, 1)) {
            bool avoids = !std::binary_search(cand.columns.begin(), cand.columns.end(), 0) &&
                          !std::binary_search(cand.columns.begin(), cand.columns.end(), 1);
            if (avoids && cand.length() == length) {
                rc = cand;
                break;
            }
        }
    }
    if (rc.length() != length) throw std::logic_error("completed square lost the designed row cycle");
    return {std::move(sq), std::move(rc)};
}

bool high_count_reachable(int n, std::int64_t k) {
    if (n < 6) return false;
    std::int64_t diff = static_cast<std::int64_t>(n) * n - k;
    if (diff < 0 || diff % 2 != 0) return false;
    std::int64_t a = diff / 2;
    return a >= 3 && a <= 2 * n - 6;
}

HighCount high_counts(int n, std::int64_t k_target, std::uint64_t seed) {
    if (!high_count_reachable(n, k_target))
        throw std::invalid_argument("k=" + std::to_string(k_target) + " is not n^2 - 2a with 3 <= a <= 2n-6");
    const std::int64_t a = (static_cast<std::int64_t>(n) * n - k_target) / 2;
    CycleKind kind = a % 2 == 1 ? CycleKind::ThroughDiagonal : CycleKind::OffColumns;
    int length = static_cast<int>(a % 2 == 1 ? (a + 3) / 2 : a / 2);
    auto sym = symmetric_with_cycle(n, kind, length, seed);
    Square out = switch_cycle(sym.square, sym.cycle);
    if (count_commuting(out) != k_target) throw std::logic_error("switched square missed its target count");
    return {std::move(out), kind, length};
}

}  // namespace quasi
