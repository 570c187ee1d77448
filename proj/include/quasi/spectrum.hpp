#pragma once

// Closed-form spectra: the commuting counts of order n, and the orders n
// admitting a quasigroup with commuting proportion exactly a/b.

#include <cstdint>
#include <string>
#include <vector>

#include "quasi/square.hpp"
#include "quasi/synthesis.hpp"

namespace quasi {

/// The set of commuting counts realised at order n.
AdmissibleSet spectrum_C(int n);

/// a/b in lowest terms with k the least positive integer making kb a square.
struct RationalQ {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t k = 1;
};

/// Throws std::invalid_argument unless 0 < a <= b, gcd(a, b) = 1, and a = b
/// only for 1/1.
RationalQ make_rational(std::int64_t a, std::int64_t b);
/// Parses "a/b" (or "1").
RationalQ parse_rational(const std::string& text);

/// Product of the primes with odd exponent in v.
std::int64_t squarefree_part(std::int64_t v);

struct KqSet {
    RationalQ q;
    bool all_orders = false;    // q = 1: every positive integer
    std::int64_t root = 1;      // sqrt(kb); members are n = x * root
    std::int64_t x_min = 1;
    bool even_only = false;     // x restricted to even values
    std::vector<std::int64_t> exclusions;

    bool in_S(std::int64_t n) const;
    bool contains(std::int64_t n) const;
    /// Commuting count realising the proportion at order n (n in S).
    std::int64_t target_count(std::int64_t n) const;
    std::vector<std::int64_t> s_members(std::int64_t limit) const;
    std::vector<std::int64_t> members(std::int64_t limit) const;
    std::string describe() const;
};

KqSet kq(std::int64_t a, std::int64_t b);
std::vector<std::int64_t> kq_members(std::int64_t a, std::int64_t b, std::int64_t limit);

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool operator==(const Fraction&) const = default;
    std::string str() const;
};

/// C(s) / n^2 in lowest terms.
Fraction proportion(const Square& s);

}  // namespace quasi
