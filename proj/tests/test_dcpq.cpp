#include "doctest.h"
#include "naive.hpp"
#include "quasi/dcpq.hpp"

using namespace quasi;

namespace {

int ceil3(int n) { return (n + 2) / 3; }

}  // namespace

TEST_CASE("partial orthomorphisms") {
    std::vector<Symbol> empty(4, kEmpty);
    CHECK(is_partial_orthomorphism(empty));
    std::vector<Symbol> twice{0, 2, 4, 1, 3};
    CHECK(is_partial_orthomorphism(twice));
    std::vector<Symbol> shift{1, 2, kEmpty, kEmpty};
    CHECK_FALSE(is_partial_orthomorphism(shift));
}

TEST_CASE("g map at (7,3)") {
    GMap g = g_map(7, 3);
    CHECK(g.seed.row0 == std::vector<Symbol>{4, 5, 3, 6, 0, 1, 2});
    CHECK(g.A == std::vector<int>{1});
    CHECK(g.B == std::vector<int>{0, 2, 3});
    CHECK(g.s == 2);
    CHECK(g_map(9, 4).s == 3);
    CHECK_THROWS(g_map(7, 2));
    CHECK_THROWS(g_map(8, 4));
}

TEST_CASE("s from the formula matches the set construction") {
    for (int n = 3; n <= 200; ++n)
        for (int m = ceil3(n); 2 * m < n; ++m) {
            GMap g = g_map(n, m);
            REQUIRE(static_cast<int>(g.B.size()) == m);
            CHECK(g.s == coincidence_capacity(n, m));
            CHECK(g.s < m);
        }
}

TEST_CASE("Q(b) at (7,3)") {
    auto count_of = [](std::vector<int> b) { return naive::count(build_Qb(7, 3, b).grid()); };
    CHECK(count_of({2, 0, 3}) == 4);
    CHECK(count_of({0, 2, 3}) == 12);
    CHECK(count_of({0, 3, 2}) == 20);
    CHECK_THROWS(build_Qb(7, 3, std::vector<int>{0, 1, 2}));
}

TEST_CASE("Q(b) with j coincidences") {
    CHECK(naive::count(build_Qb_with_j(7, 3, 0).grid()) == 4);
    CHECK(naive::count(build_Qb_with_j(7, 3, 2).grid()) == 20);
    CHECK(naive::count(build_Qb_with_j(13, 5, 1).grid()) == 24);
    CHECK_THROWS(build_Qb_with_j(7, 3, 3));
    for (int n = 5; n <= 40; ++n)
        for (int m = ceil3(n); 2 * m < n; ++m)
            for (int j = 0; j <= coincidence_capacity(n, m); ++j) {
                PartialSquare q = build_Qb_with_j(n, m, j);
                CHECK(validate_partial(q.grid(), m).ok());
                CHECK(psi_is_automorphism(q, n - m));
                CHECK(naive::count(q.grid()) == static_cast<std::int64_t>(n - m) * (2 * j + 1));
                // inside Z_k x Z_k only the diagonal commutes
                int inner = 0;
                for (int x = 0; x < n - m; ++x)
                    for (int y = 0; y < n - m; ++y) inner += q(x, y) == q(y, x);
                CHECK(inner == n - m);
            }
}

TEST_CASE("exceptional pairs") {
    CHECK(naive::count(build_h_exceptional(8, 2).grid()) == 6);
    CHECK(naive::count(build_h_exceptional(20, 6).grid()) == 14);
    CHECK(naive::count(build_h_exceptional(26, 8).grid()) == 18);
    CHECK(naive::count(build_h_exceptional(32, 10).grid()) == 22);
    CHECK_THROWS(build_h_exceptional(9, 3));
}

TEST_CASE("cyclic fill reports the violated condition") {
    GMap g = g_map(7, 3);
    DcpqSeed seed = g.seed;
    seed.col0F = {2, 0, 3};
    PartialSquare q = cyclic_fill(seed);
    CHECK(validate_partial(q.grid(), 3).ok());
    CHECK(psi_is_automorphism(q, 4));

    DcpqSeed bad2 = seed;
    bad2.row0[6] = 3;  // {0*f} must be Z_k minus the image {3} of theta
    auto msg = check_seed_conditions(bad2);
    REQUIRE(msg);
    CHECK(msg->rfind("Condition 2", 0) == 0);
    CHECK_THROWS_AS(cyclic_fill(bad2), std::invalid_argument);

    DcpqSeed bad3 = seed;
    bad3.col0F = {1, 0, 3};
    auto msg3 = check_seed_conditions(bad3);
    REQUIRE(msg3);
    CHECK(msg3->rfind("Condition 3", 0) == 0);
    CHECK_THROWS_AS(cyclic_fill(bad3), std::invalid_argument);
}
