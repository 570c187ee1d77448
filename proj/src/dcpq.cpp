#include "quasi/dcpq.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasi {

namespace {

int mod(int a, int k) { return ((a % k) + k) % k; }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

bool is_partial_orthomorphism(std::span<const Symbol> theta) {
    const int k = static_cast<int>(theta.size());
    std::vector<char> image(k, 0), diff(k, 0);
    for (int x = 0; x < k; ++x) {
        Symbol t = theta[x];
        if (t == kEmpty) continue;
        if (t < 0 || t >= k) return false;
        int d = mod(t - x, k);
        if (image[t] || diff[d]) return false;
        image[t] = diff[d] = 1;
    }
    return true;
}

int coincidence_capacity(int n, int m) {
    const int k = n - m;
    // floor((k-2)/4) with k >= 2 here, so plain division is a floor.
    return std::max(2 * m - k, m - 1 - (k - 2) / 4);
}

GMap g_map(int n, int m) {
    if (m < ceil_div(n, 3) || 2 * m >= n)
        throw std::invalid_argument("g map needs ceil(n/3) <= m < n/2, got n=" + std::to_string(n) +
                                    " m=" + std::to_string(m));
    const int k = n - m;
    const int half = ceil_div(k, 2);
    GMap out;
    out.seed.n = n;
    out.seed.m = m;
    out.seed.row0.assign(n, kEmpty);
    for (int x = 0; x < k; ++x) {
        Symbol v;
        if (x < half)
            v = k + x;
        else if (x < half + k - m)
            v = mod(half - x - 1, k);
        else
            v = k + (x - k + m);
        out.seed.row0[x] = v;
    }
    for (int i = 0; i < m; ++i) out.seed.row0[k + i] = i;

    std::vector<char> in_a(k, 0);
    for (int x = 0; x < k; ++x)
        if (Symbol v = out.seed.row0[x]; v < k) in_a[mod(v - x, k)] = 1;
    for (int v = 0; v < k; ++v) (in_a[v] ? out.A : out.B).push_back(v);
    out.s = static_cast<int>(std::count_if(out.B.begin(), out.B.end(), [m](int v) { return v < m; }));
    return out;
}

std::optional<std::string> check_seed_conditions(const DcpqSeed& seed) {
    const int n = seed.n, m = seed.m, k = seed.k();
    if (n <= 0 || m < 0 || k <= 0 || static_cast<int>(seed.row0.size()) != n ||
        static_cast<int>(seed.col0F.size()) != m)
        return std::string("seed shape does not match (n, m)");
    std::vector<Symbol> theta(k, kEmpty);
    std::vector<char> f_hit(m, 0);
    for (int x = 0; x < k; ++x) {
        Symbol v = seed.row0[x];
        if (v < 0 || v >= n) return std::string("Condition 1: 0*") + std::to_string(x) + " out of range";
        if (v < k) {
            theta[x] = v;
        } else {
            if (f_hit[v - k]) return std::string("Condition 1: hole symbol repeated in row 0");
            f_hit[v - k] = 1;
        }
    }
    int domain = static_cast<int>(std::count_if(theta.begin(), theta.end(), [](Symbol t) { return t != kEmpty; }));
    if (domain != k - m || !is_partial_orthomorphism(theta))
        return std::string("Condition 1: row 0 on Z_k is not a partial orthomorphism with deficit m");

    std::vector<char> expect(k, 1);
    for (Symbol t : theta)
        if (t != kEmpty) expect[t] = 0;
    std::vector<char> got(k, 0);
    for (int i = 0; i < m; ++i) {
        Symbol v = seed.row0[k + i];
        if (v < 0 || v >= k || got[v]) return std::string("Condition 2: {0*f} is not Z_k minus the orthomorphism image");
        got[v] = 1;
    }
    if (got != expect) return std::string("Condition 2: {0*f} is not Z_k minus the orthomorphism image");

    std::fill(expect.begin(), expect.end(), 1);
    for (int x = 0; x < k; ++x)
        if (theta[x] != kEmpty) expect[mod(theta[x] - x, k)] = 0;
    std::fill(got.begin(), got.end(), 0);
    for (int i = 0; i < m; ++i) {
        Symbol v = seed.col0F[i];
        if (v < 0 || v >= k || got[v]) return std::string("Condition 3: {f*0} is not Z_k minus the differences");
        got[v] = 1;
    }
    if (got != expect) return std::string("Condition 3: {f*0} is not Z_k minus the differences");
    return std::nullopt;
}

PartialSquare cyclic_fill(const DcpqSeed& seed) {
    if (auto err = check_seed_conditions(seed)) throw std::invalid_argument(*err);
    const int n = seed.n, k = seed.k();
    Grid g(n);
    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) g(x, y) = cyclic_add(x, seed.row0[mod(y - x, k)], k);
        for (int f = k; f < n; ++f) {
            g(x, f) = cyclic_add(x, seed.row0[f], k);
            g(f, x) = cyclic_add(x, seed.col0F[f - k], k);
        }
    }
    // Latin property is checked directly by the PartialSquare constructor.
    return PartialSquare(std::move(g), seed.m);
}

bool psi_is_automorphism(const PartialSquare& s, int k) {
    const int n = s.order();
    auto psi = [&](int x) { return x < k ? (x + 1) % k : x; };
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Symbol v = s(r, c);
            Symbol w = s(psi(r), psi(c));
            if ((v == kEmpty) != (w == kEmpty)) return false;
            if (v != kEmpty && psi(v) != w) return false;
        }
    }
    return true;
}

PartialSquare build_Qb(int n, int m, std::span<const int> b) {
    GMap gm = g_map(n, m);
    std::vector<int> sorted_b(b.begin(), b.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_b != gm.B) throw std::invalid_argument("b is not a permutation of B");
    gm.seed.col0F.assign(b.begin(), b.end());
    PartialSquare q = cyclic_fill(gm.seed);
    int coincidences = 0;
    for (int i = 0; i < m; ++i) coincidences += b[i] == i;
    const std::int64_t expected = static_cast<std::int64_t>(n - m) * (2 * coincidences + 1);
    if (count_commuting(q) != expected) throw std::logic_error("Q(b) recount disagrees with k(2l+1)");
    return q;
}

std::vector<int> assign_avoiding(std::vector<int> values, std::span<const int> forbidden) {
    const std::size_t len = values.size();
    if (forbidden.size() != len) throw std::invalid_argument("assign_avoiding size mismatch");
    if (len == 0) return values;
    std::rotate(values.begin(), values.begin() + 1, values.end());
    for (std::size_t i = 0; i < len; ++i) {
        if (values[i] != forbidden[i]) continue;
        bool fixed = false;
        for (std::size_t t = 0; t < len && !fixed; ++t) {
            if (t == i) continue;
            if (values[t] != forbidden[i] && values[i] != forbidden[t]) {
                std::swap(values[i], values[t]);
                fixed = true;
            }
        }
        if (!fixed) throw std::invalid_argument("no assignment avoids the forbidden values");
    }
    return values;
}

std::vector<int> choose_b(int n, int m, int j) {
    GMap gm = g_map(n, m);
    if (j < 0 || j > gm.s)
        throw std::invalid_argument("j=" + std::to_string(j) + " exceeds coincidence capacity s=" +
                                    std::to_string(gm.s));
    std::vector<int> b(m, -1);
    std::vector<int> rest_values;
    int fixed = 0;
    for (int v : gm.B) {
        if (v < m && fixed < j) {
            b[v] = v;
            ++fixed;
        } else {
            rest_values.push_back(v);
        }
    }
    std::vector<int> slots;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) slots.push_back(i);
    auto placed = assign_avoiding(rest_values, slots);
    for (std::size_t t = 0; t < slots.size(); ++t) b[slots[t]] = placed[t];
    return b;
}

PartialSquare build_Qb_with_j(int n, int m, int j) { return build_Qb(n, m, choose_b(n, m, j)); }

bool is_exceptional_pair(int n, int m) {
    return (n == 8 && m == 2) || (n == 20 && m == 6) || (n == 26 && m == 8) || (n == 32 && m == 10);
}

PartialSquare build_h_exceptional(int n, int m) {
    if (!is_exceptional_pair(n, m))
        throw std::invalid_argument("(" + std::to_string(n) + "," + std::to_string(m) +
                                    ") is not one of the exceptional pairs");
    const int k = n - m;
    DcpqSeed seed{n, m, std::vector<Symbol>(n, kEmpty), std::vector<Symbol>(m, kEmpty)};
    std::vector<char> hit(k, 0);
    for (int x = 0; x < k; ++x) {
        Symbol v;
        if (x < m)
            v = k + x;
        else if (x == m)
            v = 1;
        else
            v = mod(m - x, k);
        seed.row0[x] = v;
        if (v < k) hit[v] = 1;
    }
    // h on F: the missing values of Z_k, in index order.
    std::vector<int> h_on_f;
    for (int v = 0; v < k; ++v)
        if (!hit[v]) h_on_f.push_back(v);
    for (int i = 0; i < m; ++i) seed.row0[k + i] = h_on_f.at(i);

    std::vector<char> diff(k, 0);
    for (int x = m; x < k; ++x) diff[mod(seed.row0[x] - x, k)] = 1;
    std::vector<int> targets;
    for (int v = 0; v < k; ++v)
        if (!diff[v]) targets.push_back(v);
    auto h_prime = assign_avoiding(targets, h_on_f);
    seed.col0F = h_prime;

    PartialSquare q = cyclic_fill(seed);
    if (count_commuting(q) != n - m) throw std::logic_error("h construction is not anti-commutative");
    return q;
}

}  // namespace quasi
