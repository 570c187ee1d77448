#include "doctest.h"
#include "naive.hpp"
#include "quasi/holes.hpp"
#include "quasi/perm.hpp"
#include "quasi/synthesis.hpp"

using namespace quasi;

namespace {

std::set<std::int64_t> as_set(const AdmissibleSet& s) {
    auto v = s.members();
    return {v.begin(), v.end()};
}

std::int64_t f1_oracle(std::int64_t a, std::int64_t b) {
    // floor by repeated subtraction
    std::int64_t num = (a - b) * (2 * a - 2 * b - 3), den = a - b - 2, q = 0;
    while (num >= den) {
        num -= den;
        ++q;
    }
    return b + q;
}

}  // namespace

TEST_CASE("admissible sets") {
    for (int n = 1; n <= 40; ++n) {
        CHECK(as_set(admissible_D(n)) == naive::D(n));
        CHECK(as_set(admissible(n)) == naive::DD(n));
        CHECK(admissible(n).size() == naive::DD(n).size());
    }
    CHECK(as_set(admissible_D(4)) == std::set<std::int64_t>{4, 6, 8, 10, 16});
    CHECK(as_set(admissible(4)) == std::set<std::int64_t>{4, 6, 8, 16});
    CHECK(as_set(admissible_D(2)) == std::set<std::int64_t>{4});
    CHECK(admissible(7).describe() == "{7,9,...,43} u {49}");
    CHECK(is_admissible(7, 43));
    CHECK_FALSE(is_admissible(7, 45));
    CHECK_FALSE(is_admissible(5, 17));
    auto [lo, hi] = nearest_admissible(6, 11);
    CHECK(lo == 10);
    CHECK(hi == 12);
}

TEST_CASE("k conditions") {
    CHECK(kconds_feasible_j(12, 5, 90) == 2);
    CHECK_FALSE(kconds_feasible_j(12, 5, 12));
    // Inside this window a feasible j always exists.
    for (int n = 6; n <= 40; ++n)
        for (int m = 1; 2 * m <= n; ++m) {
            if (n % 2 == 1 && m % 2 == 0) continue;
            if (4 + m - m * m + 2 * n > 0) continue;
            for (std::int64_t k : naive::D(n)) {
                if (k < m + beta(n - m) || k >= static_cast<std::int64_t>(n) * n - 2 * n - m * m + m + 2) continue;
                auto j = kconds_feasible_j(n, m, k);
                REQUIRE(j);
                std::int64_t v = k - static_cast<std::int64_t>(n - *j - m) * (n - *j + m);
                CHECK(beta(*j) + m <= v);
                CHECK(v <= *j + m * m - 6);
            }
        }
}

TEST_CASE("driver constants") {
    DriverConstants d = driver_constants(28);
    CHECK(d.q == 14);
    CHECK(d.r == 9);
    CHECK(d.x == std::array<std::int64_t, 8>{28, 204, 43, 547, 48, 657, 602, 778});
    CHECK(driver_constants(29).q == 13);
    CHECK(driver_constants(31).q == 15);
    CHECK_THROWS(driver_constants(27));
    for (int n = 28; n <= 10000; ++n) {
        DriverConstants c = driver_constants(n);
        REQUIRE(c.x[1] >= c.x[2]);
        REQUIRE(c.x[3] >= c.x[4]);
        REQUIRE(c.x[5] >= c.x[6]);
        CHECK(c.x[2] == f1_oracle(n, c.q));
        CHECK(c.x[4] == f1_oracle(n, c.r));
    }
}

TEST_CASE("E(n) against the tabulated base cases") {
    auto gap = [](int n) {
        std::set<std::int64_t> out;
        auto e = compute_E(n);
        for (std::int64_t k : naive::DD(n))
            if (!e.count(k)) out.insert(k);
        return out;
    };
    CHECK(gap(4) == std::set<std::int64_t>{6});
    CHECK(gap(5) == std::set<std::int64_t>{9, 11, 15, 19});
    CHECK(gap(6) == std::set<std::int64_t>{10, 14, 22});
    CHECK(gap(7) == std::set<std::int64_t>{11, 17, 31});
    CHECK(gap(8) == std::set<std::int64_t>{16, 26, 42});
    CHECK(gap(9) == std::set<std::int64_t>{17, 25, 35, 37, 47, 49, 53, 55});
    CHECK(gap(10) == std::set<std::int64_t>{28});
    for (int n = 11; n <= 27; ++n) CHECK(gap(n).empty());
    // Nothing outside the spectrum is ever claimed.
    for (int n = 1; n <= 27; ++n)
        for (std::int64_t k : compute_E(n)) CHECK(naive::DD(n).count(k));
}

TEST_CASE("base cases") {
    const std::map<int, std::int64_t> counts{{4, 6}, {5, 19}, {6, 22}, {7, 31}, {8, 42}, {9, 55}, {10, 28}};
    for (auto [n, k] : counts) CHECK(naive::count(base_square(n).grid()) == k);
    for (const auto& r : base_recipes()) {
        auto s = base_case(r.n, r.k);
        REQUIRE(s);
        CHECK(naive::latin(s->grid()));
        CHECK(naive::count(s->grid()) == r.k);
    }
    std::set<std::int64_t> nine;
    for (const auto& r : base_recipes())
        if (r.n == 9 && !r.switches.empty()) nine.insert(r.k);
    CHECK(nine == std::set<std::int64_t>{17, 25, 35, 37, 47, 49, 53});
    CHECK_FALSE(base_case(9, 19));
}

TEST_CASE("witness") {
    WitnessCertificate a = witness(9, 35);
    CHECK(a.trace.rule == "base-case");
    CHECK(naive::count(a.square.grid()) == 35);

    WitnessCertificate b = witness(12, 90);
    CHECK(b.trace.rule == "collided-hole");
    CHECK(b.k_recounted == 90);
    CHECK(naive::count(b.square.grid()) == 90);

    CHECK_THROWS_AS(witness(4, 10), ImpossibleError);
    CHECK_THROWS_AS(witness(5, 17), ImpossibleError);
    CHECK_THROWS_AS(witness(6, 11), InadmissibleError);
    CHECK_THROWS_AS(witness(6, 34), InadmissibleError);
    CHECK_THROWS_AS(witness(3, 5), InadmissibleError);
}

TEST_CASE("witnesses are deterministic and recount") {
    for (int n = 1; n <= 16; ++n)
        for (std::int64_t k : admissible(n).members()) {
            WitnessCertificate c = witness(n, k, 3);
            CHECK(naive::latin(c.square.grid()));
            CHECK(naive::count(c.square.grid()) == k);
        }
    WitnessCertificate first = witness(14, 100, 3);
    clear_witness_cache();
    WitnessCertificate again = witness(14, 100, 3);
    CHECK(first.square == again.square);
    CHECK(first.trace == again.trace);
}

TEST_CASE("the walk closes the one gap left by buildable holes") {
    auto plans = route_plans(7, 9, Capability::Buildable);
    CHECK(plans.empty());
    WitnessCertificate c = witness(7, 9);
    CHECK(c.trace.rule == "switching-walk");
    CHECK(naive::count(c.square.grid()) == 9);
}
