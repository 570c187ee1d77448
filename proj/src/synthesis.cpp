#include "quasi/synthesis.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "quasi/dcpq.hpp"
#include "quasi/generators.hpp"
#include "quasi/holes.hpp"
#include "quasi/perm.hpp"
#include "quasi/switching.hpp"

namespace quasi {

bool AdmissibleSet::contains(std::int64_t k) const {
    if (std::binary_search(extras.begin(), extras.end(), k)) return true;
    if (k < lo || k > hi || (k - lo) % 2 != 0) return false;
    return !std::binary_search(excluded.begin(), excluded.end(), k);
}

std::vector<std::int64_t> AdmissibleSet::members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k <= hi; k += 2)
        if (!std::binary_search(excluded.begin(), excluded.end(), k)) out.push_back(k);
    out.insert(out.end(), extras.begin(), extras.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t AdmissibleSet::size() const {
    std::size_t prog = hi >= lo ? static_cast<std::size_t>((hi - lo) / 2 + 1) : 0;
    return prog - excluded.size() + extras.size();
}

std::string AdmissibleSet::describe() const {
    std::ostringstream os;
    auto list = [&os](const std::vector<std::int64_t>& v) {
        os << '{';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << '}';
    };
    if (size() <= 12) {
        list(members());
        return os.str();
    }
    os << '{' << lo << ',' << lo + 2 << ",...," << hi << '}';
    if (!excluded.empty()) {
        os << " \\ ";
        list(excluded);
    }
    if (!extras.empty()) {
        os << " u ";
        list(extras);
    }
    return os.str();
}

AdmissibleSet admissible_D(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    AdmissibleSet s;
    s.n = n;
    const std::int64_t sq = static_cast<std::int64_t>(n) * n;
    s.lo = n;
    s.hi = sq - 6 >= n ? sq - 6 : n - 2;
    s.extras = {sq};
    if (s.hi >= s.lo && (s.hi - s.lo) % 2 != 0) --s.hi;
    return s;
}

AdmissibleSet admissible(int n) {
    AdmissibleSet s = admissible_D(n);
    if (n == 4) s.excluded = {10};
    if (n == 5) s.excluded = {17};
    return s;
}

bool is_admissible(int n, std::int64_t k) { return n >= 1 && admissible(n).contains(k); }

std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>> nearest_admissible(int n, std::int64_t k) {
    std::optional<std::int64_t> below, above;
    for (std::int64_t v : admissible(n).members()) {
        if (v < k) below = v;
        if (v > k && !above) above = v;
    }
    return {below, above};
}

std::optional<int> kconds_feasible_j(int n, int m, std::int64_t k) {
    for (int j = 2; j <= n - m; ++j) {
        std::int64_t v = k - static_cast<std::int64_t>(n - j - m) * (n - j + m);
        if (beta(j) + m <= v && v <= j + static_cast<std::int64_t>(m) * m - 6) return j;
    }
    return std::nullopt;
}

std::int64_t driver_f1(std::int64_t a, std::int64_t b) {
    const std::int64_t d = a - b;
    if (d <= 2) throw std::invalid_argument("f1 needs a - b > 2");
    return b + d * (2 * d - 3) / (d - 2);
}

std::int64_t driver_f2(std::int64_t a, std::int64_t b) { return a * a - 2 * a - b * b + b + 1; }

int driver_q(int n) {
    if (n % 2 == 0) return n / 2;
    return n % 4 == 3 ? (n - 1) / 2 : (n - 3) / 2;
}

int driver_r(int n) {
    int r = (n - 1) / 3;
    return (n % 2 == 0 || r % 2 == 1) ? r : r - 1;
}

DriverConstants driver_constants(int n) {
    if (n < 28) throw std::invalid_argument("driver constants need n >= 28");
    DriverConstants d;
    d.n = n;
    d.q = driver_q(n);
    d.r = driver_r(n);
    const std::int64_t nn = n, q = d.q, r = d.r;
    d.x = {nn,
           nn + q * q - q - 6,
           driver_f1(nn, q),
           driver_f2(nn, q),
           driver_f1(nn, r),
           driver_f2(nn, r),
           nn * nn - q * q + q,
           nn * nn - 6};
    return d;
}

namespace {

std::vector<int> hole_orders(int n) {
    std::vector<int> order;
    auto add = [&](int m) {
        if (m >= 1 && 2 * m <= n && std::find(order.begin(), order.end(), m) == order.end()) order.push_back(m);
    };
    add(driver_q(n));
    add(driver_r(n));
    for (int m = n / 2; m >= 1; --m) add(m);
    return order;
}

bool saturated_order(int m) { return m != 4 && m != 5; }

}  // namespace

std::vector<RoutePlan> route_plans(int n, std::int64_t k, Capability cap) {
    std::vector<RoutePlan> plans;
    if (n < 2) return plans;
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    const auto ms = hole_orders(n);
    auto inner_ok = [](int m, std::int64_t ell) { return admissible(m).contains(ell); };

    for (int m : ms) {
        if (n <= 2 || (n == 4 && m == 2)) continue;
        if (cap == Capability::Buildable && !anti_commutative_hole_supported(n, m)) continue;
        if (std::int64_t ell = k - n + m; inner_ok(m, ell)) plans.push_back({"anti-commutative-hole", m, 0, ell});
    }
    for (int m : ms) {
        if (!commutative_hole_exists(n, m) || !saturated_order(m)) continue;
        for (int j = 2; j <= n - m; ++j) {
            std::int64_t v = k - static_cast<std::int64_t>(n - j - m) * (n - j + m);
            if (beta(j) + m <= v && v <= j + static_cast<std::int64_t>(m) * m - 6)
                plans.push_back({"collided-hole", m, j, 0});
        }
    }
    for (int m : ms) {
        if (!commutative_hole_exists(n, m)) continue;
        if (std::int64_t ell = k - nn + static_cast<std::int64_t>(m) * m; inner_ok(m, ell))
            plans.push_back({"commutative-hole", m, 0, ell});
    }
    for (int m : ms) {
        if (3 * m < n || 2 * m >= n) continue;
        const int s = coincidence_capacity(n, m);
        for (int j = 0; j <= s; ++j)
            if (std::int64_t ell = k - static_cast<std::int64_t>(2 * j + 1) * (n - m); inner_ok(m, ell))
                plans.push_back({"cyclic-hole", m, j, ell});
    }
    for (int m : ms) {
        if (!commutative_hole_exists(n, m)) continue;
        for (int j = 2; j <= m; ++j)
            if (std::int64_t ell = k - static_cast<std::int64_t>(n + m - 2 * j) * (n - m); inner_ok(m, ell))
                plans.push_back({"permuted-hole", m, j, ell});
    }
    if (high_count_reachable(n, k)) plans.push_back({"high-count", 0, 0, 0});
    return plans;
}

std::map<std::int64_t, std::string> rule_table(int n, Capability cap) {
    std::map<std::int64_t, std::string> table;
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    for (std::int64_t k : admissible_D(n).members()) {
        if (k == nn) {
            table[k] = "commutative";
        } else if (k == n && n != 2) {
            table[k] = "anti-commutative";
        } else if (auto plans = route_plans(n, k, cap); !plans.empty()) {
            table[k] = plans.front().rule;
        }
    }
    return table;
}

std::set<std::int64_t> compute_E(int n, Capability cap) {
    std::set<std::int64_t> out;
    for (const auto& [k, rule] : rule_table(n, cap)) out.insert(k);
    return out;
}

namespace {

using Rows = std::vector<std::vector<Symbol>>;

const std::map<int, Rows>& base_rows() {
    static const std::map<int, Rows> rows = {
        {4, {{2, 0, 3, 1}, {1, 3, 2, 0}, {0, 2, 1, 3}, {3, 1, 0, 2}}},
        {5, {{0, 1, 3, 4, 2}, {1, 3, 4, 2, 0}, {3, 0, 2, 1, 4}, {4, 2, 1, 0, 3}, {2, 4, 0, 3, 1}}},
        {6,
         {{1, 2, 3, 4, 5, 0},
          {2, 3, 4, 5, 0, 1},
          {3, 4, 5, 0, 1, 2},
          {0, 5, 2, 1, 4, 3},
          {4, 0, 1, 2, 3, 5},
          {5, 1, 0, 3, 2, 4}}},
        {7,
         {{0, 1, 2, 3, 4, 5, 6},
          {1, 2, 0, 4, 3, 6, 5},
          {2, 0, 1, 5, 6, 3, 4},
          {3, 4, 5, 6, 0, 1, 2},
          {6, 3, 4, 0, 5, 2, 1},
          {4, 5, 6, 1, 2, 0, 3},
          {5, 6, 3, 2, 1, 4, 0}}},
        {8,
         {{1, 2, 3, 4, 5, 6, 7, 0},
          {2, 3, 4, 5, 6, 7, 0, 1},
          {3, 4, 5, 6, 7, 0, 1, 2},
          {4, 5, 6, 7, 0, 1, 2, 3},
          {5, 6, 7, 0, 1, 2, 3, 4},
          {0, 7, 2, 1, 4, 3, 6, 5},
          {7, 0, 1, 3, 2, 4, 5, 6},
          {6, 1, 0, 2, 3, 5, 4, 7}}},
        {9,
         {{1, 2, 3, 4, 5, 6, 7, 8, 0},
          {2, 3, 4, 5, 6, 7, 8, 0, 1},
          {3, 4, 5, 6, 7, 8, 0, 1, 2},
          {4, 5, 6, 7, 8, 0, 1, 2, 3},
          {5, 0, 7, 8, 3, 1, 2, 6, 4},
          {0, 7, 8, 3, 1, 2, 6, 4, 5},
          {8, 6, 0, 1, 2, 3, 4, 5, 7},
          {7, 8, 1, 2, 0, 4, 5, 3, 6},
          {6, 1, 2, 0, 4, 5, 3, 7, 8}}},
        {10,
         {{1, 2, 3, 4, 5, 6, 7, 8, 9, 0},
          {2, 3, 4, 5, 6, 7, 8, 9, 0, 1},
          {3, 4, 5, 6, 7, 8, 9, 0, 1, 2},
          {0, 5, 2, 7, 4, 9, 6, 1, 8, 3},
          {5, 6, 7, 8, 9, 0, 1, 2, 3, 4},
          {9, 0, 1, 2, 3, 4, 5, 6, 7, 8},
          {8, 9, 0, 1, 2, 3, 4, 5, 6, 7},
          {7, 8, 9, 0, 1, 2, 3, 4, 5, 6},
          {6, 7, 8, 9, 0, 1, 2, 3, 4, 5},
          {4, 1, 6, 3, 8, 5, 0, 7, 2, 9}}},
    };
    return rows;
}

}  // namespace

const Square& base_square(int n) {
    static const std::map<int, Square> squares = [] {
        std::map<int, Square> out;
        for (const auto& [order, rows] : base_rows()) out.emplace(order, Square::from_rows(rows));
        return out;
    }();
    auto it = squares.find(n);
    if (it == squares.end()) throw std::invalid_argument("no base square of order " + std::to_string(n));
    return it->second;
}

const std::vector<BaseRecipe>& base_recipes() {
    static const std::vector<BaseRecipe> recipes = {
        {4, 6, {}},
        {5, 9, {{1, 2, 0}, {3, 4, 0}}},
        {5, 11, {{1, 2, 0}, {3, 4, 2}}},
        {5, 15, {{1, 2, 0}}},
        {5, 19, {}},
        {6, 10, {{1, 5, 0}}},
        {6, 14, {{1, 2, 0}, {4, 5, 1}}},
        {6, 22, {}},
        {7, 11, {{1, 2, 0}, {3, 5, 0}}},
        {7, 17, {{3, 5, 0}}},
        {7, 31, {}},
        {8, 16, {{1, 2, 0}, {3, 5, 1}}},
        {8, 26, {{2, 3, 0}}},
        {8, 42, {}},
        {9, 17, {{1, 2, 0}, {3, 4, 0}}},
        {9, 25, {{1, 2, 0}, {3, 5, 2}}},
        {9, 35, {{1, 3, 0}}},
        {9, 37, {{1, 6, 0}}},
        {9, 47, {{1, 8, 0}}},
        {9, 49, {{1, 8, 3}}},
        {9, 53, {{1, 8, 1}}},
        {9, 55, {}},
        {10, 28, {}},
    };
    return recipes;
}

std::optional<Square> base_case(int n, std::int64_t k) {
    for (const auto& r : base_recipes()) {
        if (r.n != n || r.k != k) continue;
        Square s = base_square(n);
        for (const auto& st : r.switches) s = switch_cycle(s, row_cycle(s, st.i, st.j, st.c));
        return s;
    }
    return std::nullopt;
}

std::optional<Square> switching_walk(const Square& start, std::int64_t k, std::uint64_t seed, int max_steps) {
    const int n = start.order();
    if (n < 2) return count_commuting(start) == k ? std::optional<Square>(start) : std::nullopt;
    Rng rng(seed);
    Square cur = start;
    std::int64_t count = count_commuting(cur);
    for (int step = 0; step < max_steps && count != k; ++step) {
        int i = static_cast<int>(uniform_below(rng, n));
        int j = static_cast<int>(uniform_below(rng, n - 1));
        if (j >= i) ++j;
        int c = static_cast<int>(uniform_below(rng, n));
        RowCycle rc = row_cycle(cur, i, j, c);
        std::int64_t next = count_after_switch(cur, count, rc);
        std::int64_t gap = std::llabs(count - k), next_gap = std::llabs(next - k);
        bool accept = next_gap < gap || (next_gap == gap && uniform_below(rng, 2) == 0) ||
                      uniform_below(rng, 100) < 3;
        if (!accept) continue;
        cur = switch_cycle(cur, rc);
        count = next;
    }
    if (count != k) return std::nullopt;
    return cur;
}

namespace {

struct WitnessCache {
    std::shared_mutex mu;
    std::map<std::tuple<int, std::int64_t, std::uint64_t>, std::shared_ptr<const WitnessCertificate>> entries;
};

WitnessCache& witness_cache() {
    static WitnessCache cache;
    return cache;
}

struct Built {
    Square square;
    TraceNode trace;
};

std::string exception_message(int n, std::int64_t k) {
    const char* total = n == 4 ? "576" : "161280";
    return "no quasigroup of order " + std::to_string(n) + " has exactly " + std::to_string(k) +
           " commuting pairs (all " + total + " Latin squares of order " + std::to_string(n) + " checked)";
}

Built pasted(const std::string& rule, const PartialSquare& outer, int m, std::int64_t ell, std::uint64_t seed,
             std::vector<std::pair<std::string, std::int64_t>> params) {
    WitnessCertificate inner = witness(m, ell, seed);
    params.insert(params.begin(), {{"m", m}, {"ell", ell}});
    return {paste(outer, inner.square), TraceNode{rule, std::move(params), {inner.trace}}};
}

std::optional<Built> run_plan(int n, std::int64_t k, const RoutePlan& p, std::uint64_t seed) {
    if (p.rule == "anti-commutative-hole") return pasted(p.rule, anti_commutative_hole(n, p.m), p.m, p.ell, seed, {});
    if (p.rule == "commutative-hole")
        return pasted(p.rule, commutative_hole(n, p.m, seed), p.m, p.ell, seed, {});
    if (p.rule == "cyclic-hole") return pasted(p.rule, build_Qb_with_j(n, p.m, p.j), p.m, p.ell, seed, {{"j", p.j}});
    if (p.rule == "permuted-hole")
        return pasted(p.rule, permuted_symmetric_hole(n, p.m, p.j, seed), p.m, p.ell, seed, {{"j", p.j}});
    if (p.rule == "collided-hole") {
        const std::int64_t base = static_cast<std::int64_t>(n - p.j - p.m) * (n - p.j + p.m);
        for (int attempt = 0; attempt < 8; ++attempt) {
            CollidedHole ch = collided_symmetric_hole(n, p.m, p.j, mix_seed(seed, attempt), seed);
            std::int64_t ell = k - base - ch.collisions;
            if (!admissible(p.m).contains(ell)) continue;
            return pasted(p.rule, ch.square, p.m, ell, seed,
                          {{"j", p.j}, {"i", ch.collisions}, {"attempt", attempt}});
        }
        return std::nullopt;
    }
    if (p.rule == "high-count") {
        HighCount h = high_counts(n, k, seed);
        return Built{std::move(h.square),
                     TraceNode{p.rule,
                               {{"through_diagonal", h.kind == CycleKind::ThroughDiagonal}, {"length", h.length}},
                               {}}};
    }
    throw std::logic_error("unknown route " + p.rule);
}

bool directly_buildable(int n, std::int64_t k) {
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    return k == nn || (k == n && n != 2) || (n <= 10 && base_case(n, k)) ||
           !route_plans(n, k, Capability::Buildable).empty();
}

std::optional<Built> fallback_walk(int n, std::int64_t k, std::uint64_t seed) {
    std::vector<std::int64_t> starts;
    for (std::int64_t v : admissible(n).members())
        if (v != k && directly_buildable(n, v)) starts.push_back(v);
    std::stable_sort(starts.begin(), starts.end(),
                     [k](std::int64_t a, std::int64_t b) { return std::llabs(a - k) < std::llabs(b - k); });
    if (starts.size() > 4) starts.resize(4);
    for (int attempt = 0; attempt < 32; ++attempt) {
        if (starts.empty()) break;
        std::int64_t from = starts[attempt % starts.size()];
        WitnessCertificate start = witness(n, from, seed);
        if (auto sq = switching_walk(start.square, k, mix_seed(seed, 0x5eed0000ULL + attempt)))
            return Built{std::move(*sq),
                         TraceNode{"switching-walk", {{"start_k", from}, {"attempt", attempt}}, {start.trace}}};
    }
    return std::nullopt;
}

Built build_witness(int n, std::int64_t k, std::uint64_t seed) {
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    if (k == nn) return {commutative(n), TraceNode{"commutative", {}, {}}};
    if (k == n) return {anti_commutative(n), TraceNode{"anti-commutative", {}, {}}};
    if (n <= 10) {
        if (auto s = base_case(n, k)) return {std::move(*s), TraceNode{"base-case", {{"n", n}, {"k", k}}, {}}};
    }
    for (const auto& plan : route_plans(n, k, Capability::Buildable)) {
        try {
            if (auto built = run_plan(n, k, plan, seed)) return std::move(*built);
        } catch (const ConstructionError&) {
        } catch (const std::invalid_argument&) {
        }
    }
    if (auto built = fallback_walk(n, k, seed)) return std::move(*built);
    throw ConstructionError("every route failed for n=" + std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

WitnessCertificate witness(int n, std::int64_t k, std::uint64_t seed) {
    if (n < 1) throw InadmissibleError("order must be positive");
    if (!admissible_D(n).contains(k)) {
        auto [below, above] = nearest_admissible(n, k);
        std::string msg = "k=" + std::to_string(k) + " is not in D(" + std::to_string(n) + ")";
        if (below || above) {
            msg += "; nearest admissible:";
            if (below) msg += " " + std::to_string(*below);
            if (above) msg += " " + std::to_string(*above);
        }
        throw InadmissibleError(msg);
    }
    if (!admissible(n).contains(k)) throw ImpossibleError(exception_message(n, k));

    auto key = std::make_tuple(n, k, seed);
    auto& cache = witness_cache();
    {
        std::shared_lock lock(cache.mu);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) return *it->second;
    }
    Built built = build_witness(n, k, seed);
    auto cert = std::make_shared<WitnessCertificate>();
    cert->n = n;
    cert->k_target = k;
    cert->k_recounted = count_commuting(built.square);
    cert->square = std::move(built.square);
    cert->trace = std::move(built.trace);
    cert->seed = seed;
    if (cert->k_recounted != k)
        throw std::logic_error("witness for n=" + std::to_string(n) + " k=" + std::to_string(k) + " recounted to " +
                               std::to_string(cert->k_recounted));
    std::unique_lock lock(cache.mu);
    cache.entries.insert_or_assign(key, cert);
    return *cert;
}

void clear_witness_cache() {
    auto& cache = witness_cache();
    std::unique_lock lock(cache.mu);
    cache.entries.clear();
}

}  // namespace quasi
