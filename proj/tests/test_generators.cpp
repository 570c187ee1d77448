#include "doctest.h"
#include "naive.hpp"
#include "quasi/generators.hpp"

using namespace quasi;

TEST_CASE("commutative squares") {
    CHECK(commutative(1).grid() == Grid(1, 0));
    for (int n = 1; n <= 64; ++n) {
        Square s = commutative(n);
        CHECK(naive::count(s.grid()) == static_cast<std::int64_t>(n) * n);
        CHECK(s(n - 1, 1 % n) == (n - 1 + 1) % n);
    }
    CHECK_THROWS(commutative(0));
}

TEST_CASE("anti-commutative squares") {
    CHECK(anti_commutative(3) == Square::from_rows({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
    Square five = anti_commutative(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(five(i, j) == (2 * i + j) % 5);
    for (int n = 1; n <= 64; ++n) {
        if (n == 2) continue;
        Square s = anti_commutative(n);
        CHECK(naive::latin(s.grid()));
        CHECK(naive::count(s.grid()) == n);
    }
    CHECK_THROWS(anti_commutative(2));
    CHECK_THROWS(anti_commutative(0));
}

TEST_CASE("searched anti-commutative squares") {
    CHECK_FALSE(find_anti_commutative(2));
    for (int n : {3, 4, 5, 6}) {
        auto s = find_anti_commutative(n);
        REQUIRE(s);
        CHECK(naive::count(s->grid()) == n);
    }
    CHECK(*find_anti_commutative(4) == anti_commutative(4));
    CHECK(*find_anti_commutative(6) == anti_commutative(6));
}

TEST_CASE("doubling") {
    Square base = anti_commutative(3);
    PartialSquare h = doubling_hole(base, Permutation({1, 2, 0}));
    CHECK(validate_partial(h.grid(), 3).ok());
    CHECK(naive::count(h.grid()) == 3);
    for (int m = 3; m <= 12; ++m) {
        PartialSquare d = doubling_hole(anti_commutative(m));
        CHECK(d.order() == 2 * m);
        CHECK(validate_partial(d.grid(), m).ok());
        // only the m diagonal cells outside the hole commute
        CHECK(naive::count(d.grid()) == m);
    }
    CHECK_THROWS(doubling_hole(base, Permutation::identity(3)));
    CHECK_THROWS(doubling_hole(commutative(3)));
    CHECK_THROWS(doubling_hole(commutative(2)));
    CHECK(count_commuting(anti_commutative(8)) == 8);
}
