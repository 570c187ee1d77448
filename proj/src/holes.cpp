#include "quasi/holes.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "quasi/dcpq.hpp"
#include "quasi/generators.hpp"
#include "quasi/symmetric_completion.hpp"

namespace quasi {

namespace {

std::string pair_str(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

Grid half_hole(int n) {
    const int m = n / 2;
    Grid g(n);
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) g(x, y) = m + (x + y) % m;
        for (int i = 0; i < m; ++i) g(x, m + i) = g(m + i, x) = (x + i) % m;
    }
    return g;
}

// Symbol relabelling that makes the last diagonal cell hold n-1, then drops it.
Grid unit_hole(const Square& s) {
    const int n = s.order();
    std::vector<int> gamma(n);
    std::iota(gamma.begin(), gamma.end(), 0);
    std::swap(gamma[s(n - 1, n - 1)], gamma[n - 1]);
    Grid g = relabel_symbols(s, Permutation(gamma)).grid();
    g(n - 1, n - 1) = kEmpty;
    return g;
}

// A diagonal for the non-hole block compatible with the parity forced by
// symmetry: a symbol occurring t times in the symmetric k x k block sits on
// the diagonal t mod 2 times (mod 2). Hole symbols occur k times there and
// non-hole symbols k - m times.
std::vector<Symbol> diagonal_pattern(int k, int m) {
    std::vector<Symbol> d;
    if (k % 2 == 1) {
        for (int i = 0; i < m; ++i) d.push_back(k + i);
        for (int i = 0; d.size() < static_cast<std::size_t>(k); ++i) d.insert(d.end(), {i, i});
    } else if (m % 2 == 1) {
        for (int i = 0; i < k; ++i) d.push_back(i);
    } else {
        // Both counts even; non-hole symbols are absent from the block when k == m.
        const int base = k == m ? k : 0;
        const int span = k == m ? m : k;
        for (int i = 0; d.size() < static_cast<std::size_t>(k); ++i) d.insert(d.end(), {base + i % span, base + i % span});
    }
    return d;
}

Grid searched_hole(int n, int m, std::uint64_t seed) {
    const int k = n - m;
    const auto pattern = diagonal_pattern(k, m);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n) * 1000003 + m * 131 + attempt));
        std::vector<int> pos(k);
        std::iota(pos.begin(), pos.end(), 0);
        shuffle_in_place(std::span<int>(pos), rng);
        Grid g(n);
        for (int i = 0; i < k; ++i) g(pos[i], pos[i]) = pattern[i];
        if (auto done = complete_symmetric(g, m, rng)) return *done;
    }
    throw ConstructionError("symmetric completion for commutative hole " + pair_str(n, m) + " ran out of budget");
}

struct HoleCache {
    std::mutex mu;
    std::map<std::tuple<int, int, std::uint64_t>, PartialSquare> entries;
};

HoleCache& hole_cache() {
    static HoleCache cache;
    return cache;
}

}  // namespace

bool commutative_hole_exists(int n, int m) {
    return n >= 2 && m >= 1 && 2 * m <= n && (n % 2 == 0 || m % 2 == 1);
}

PartialSquare commutative_hole(int n, int m, std::uint64_t seed) {
    if (!commutative_hole_exists(n, m))
        throw std::invalid_argument("no commutative member of Omega" + pair_str(n, m) +
                                    ": need 1 <= m <= n/2 and m odd when n is odd");
    auto key = std::make_tuple(n, m, seed);
    {
        auto& cache = hole_cache();
        std::lock_guard lock(cache.mu);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
    }
    Grid g;
    if (2 * m == n)
        g = half_hole(n);
    else if (m == 1)
        g = unit_hole(commutative(n));
    else
        g = searched_hole(n, m, seed);
    PartialSquare hole(std::move(g), m);
    if (!is_symmetric(hole.grid()) || count_commuting(hole) != static_cast<std::int64_t>(n) * n - m * m)
        throw std::logic_error("commutative hole " + pair_str(n, m) + " failed its recount");
    auto& cache = hole_cache();
    std::lock_guard lock(cache.mu);
    cache.entries.insert_or_assign(key, hole);
    return hole;
}

bool anti_commutative_hole_supported(int n, int m) {
    if (n < 3 || m < 1 || 2 * m > n || (n == 4 && m == 2)) return false;
    if (m == 1) return true;
    if (3 * m >= n && 2 * m < n) return true;
    if (2 * m == n) return m >= 3;
    return is_exceptional_pair(n, m);
}

PartialSquare anti_commutative_hole(int n, int m) {
    if (n == 4 && m == 2) throw ConstructionError("no anti-commutative member of Omega(4,2) exists");
    if (!anti_commutative_hole_supported(n, m))
        throw ConstructionError("anti-commutative hole " + pair_str(n, m) +
                                " needs m = 1, ceil(n/3) <= m <= n/2, or an exceptional pair");
    PartialSquare out = [&] {
        if (m == 1) return PartialSquare(unit_hole(anti_commutative(n)), 1);
        if (2 * m == n) return doubling_hole(anti_commutative(m));
        if (is_exceptional_pair(n, m)) return build_h_exceptional(n, m);
        return build_Qb_with_j(n, m, 0);
    }();
    if (count_commuting(out) != n - m) throw std::logic_error("anti-commutative hole failed its recount");
    return out;
}

PartialSquare permuted_symmetric_hole(int n, int m, int j, std::uint64_t seed) {
    if (j < 2 || j > m) throw std::invalid_argument("permuted hole needs 2 <= j <= m");
    PartialSquare base = commutative_hole(n, m, seed);
    std::vector<int> moved(j);
    std::iota(moved.begin(), moved.end(), n - j);
    Permutation alpha = Permutation::cycle(n, moved);
    PartialSquare out = apply_row_isotope(base, alpha.inverse());
    if (count_commuting(out) != static_cast<std::int64_t>(n + m - 2 * j) * (n - m))
        throw std::logic_error("permuted hole failed its recount");
    return out;
}

CollidedHole collided_symmetric_hole(int n, int m, int j, std::uint64_t seed, std::uint64_t hole_seed) {
    if (j < 2 || j > n - m) throw std::invalid_argument("collided hole needs 2 <= j <= n - m");
    PartialSquare base = commutative_hole(n, m, hole_seed);
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n) << 32 | static_cast<std::uint64_t>(m) << 16 | j));
    std::vector<int> rows(n - m);
    std::iota(rows.begin(), rows.end(), 0);
    shuffle_in_place(std::span<int>(rows), rng);
    rows.resize(j);
    std::sort(rows.begin(), rows.end());
    auto sample = sample_low_collision_derangement(base.grid(), rows, rng);
    if (!sample)
        throw ConstructionError("no derangement within the collision bound for " + pair_str(n, m) +
                                " j=" + std::to_string(j));
    PartialSquare out = apply_row_isotope(base, sample->alpha.inverse());
    const std::int64_t expected = static_cast<std::int64_t>(n - j - m) * (n - j + m) + sample->collisions;
    if (count_commuting(out) != expected) throw std::logic_error("collided hole failed its recount");
    return {std::move(out), sample->alpha, sample->collisions};
}

}  // namespace quasi
