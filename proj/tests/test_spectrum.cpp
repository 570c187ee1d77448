#include <numeric>

#include "doctest.h"
#include "naive.hpp"
#include "quasi/generators.hpp"
#include "quasi/spectrum.hpp"

using namespace quasi;

TEST_CASE("spectrum C") {
    CHECK(spectrum_C(4).members() == std::vector<std::int64_t>{4, 6, 8, 16});
    CHECK(spectrum_C(5).members() == std::vector<std::int64_t>{5, 7, 9, 11, 13, 15, 19, 25});
    CHECK(spectrum_C(3).members() == std::vector<std::int64_t>{3, 9});
}

TEST_CASE("rationals") {
    CHECK(squarefree_part(8) == 2);
    CHECK(squarefree_part(12) == 3);
    CHECK(squarefree_part(25) == 1);
    CHECK(squarefree_part(72) == 2);
    CHECK_THROWS(make_rational(2, 4));
    CHECK_THROWS(make_rational(3, 2));
    CHECK_THROWS(make_rational(0, 2));
    CHECK(parse_rational("5/8").b == 8);
    CHECK_THROWS(parse_rational("5/x"));
    CHECK(kq(1, 1).all_orders);
}

TEST_CASE("K(q) examples") {
    CHECK(kq_members(1, 2, 12) == std::vector<std::int64_t>{4, 6, 8, 10, 12});
    CHECK(kq(5, 8).s_members(20) == std::vector<std::int64_t>{4, 8, 12, 16, 20});
    CHECK(kq_members(5, 8, 20) == std::vector<std::int64_t>{8, 12, 16, 20});
    CHECK(kq(17, 25).s_members(20) == std::vector<std::int64_t>{5, 10, 15, 20});
    CHECK(kq_members(17, 25, 20) == std::vector<std::int64_t>{10, 15, 20});
    KqSet t = kq(3, 4);
    CHECK(t.even_only);
    CHECK(kq_members(3, 4, 20) == std::vector<std::int64_t>{8, 12, 16, 20});
}

TEST_CASE("K(q) agrees with a direct search over admissible counts") {
    // n is a member iff some admissible count c of order n has c/n^2 = a/b.
    for (std::int64_t b = 2; b <= 12; ++b)
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            KqSet set = kq(a, b);
            for (int n = 1; n <= 30; ++n) {
                const std::int64_t nn = static_cast<std::int64_t>(n) * n;
                bool direct = nn * a % b == 0 && naive::DD(n).count(nn * a / b);
                CHECK(set.contains(n) == direct);
                if (set.contains(n)) {
                    CHECK(set.target_count(n) * b == nn * a);
                    CHECK(set.target_count(n) % 2 == n % 2);
                }
            }
        }
    for (auto [a, b] : std::vector<std::pair<int, int>>{{5, 8}, {17, 25}, {1, 9}, {7, 18}})
        for (int n = 1; n <= 60; ++n) {
            const std::int64_t nn = static_cast<std::int64_t>(n) * n;
            CHECK(kq(a, b).contains(n) == (nn * a % b == 0 && naive::DD(n).count(nn * a / b) > 0));
        }
}

TEST_CASE("proportion") {
    CHECK(proportion(commutative(5)) == Fraction{1, 1});
    CHECK(proportion(anti_commutative(7)) == Fraction{1, 7});
    CHECK(proportion(witness(8, 40).square) == Fraction{5, 8});
}
