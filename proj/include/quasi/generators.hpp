#pragma once

#include <optional>

#include "quasi/perm.hpp"
#include "quasi/square.hpp"

namespace quasi {

/// Cayley table of Z_n: cell (i, j) = i + j mod n.
Square commutative(int n);

/// A square of order n whose only commuting pairs are the diagonal ones.
/// Odd n: cell (i, j) = 2i + j mod n. n = 4, 6: stored search results.
/// Even n >= 8: doubling around anti_commutative(n / 2), then pasting
/// anti_commutative(n / 2) into the hole. Throws for n = 2 and n <= 0.
Square anti_commutative(int n);

/// The Q x {1, 2} doubling of an anti-commutative square `base` of order m
/// with hole Q x {2}; (i,1) is relabelled i and (i,2) is m + i on rows and
/// columns. Symbols are swapped between the halves so the hole symbols are
/// the top m, as PartialSquare requires. The result is an anti-commutative
/// member of Omega(2m, m) for any derangement sigma.
PartialSquare doubling_hole(const Square& base, const Permutation& sigma);
/// sigma defaults to i -> i + 1 mod m.
PartialSquare doubling_hole(const Square& base);

/// Lexicographically first anti-commutative Latin square of order n, by
/// cell-order backtracking. Practical for n <= 7.
std::optional<Square> find_anti_commutative(int n);

}  // namespace quasi
