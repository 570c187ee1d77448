#pragma once

// Members of Omega(n, m) with prescribed commuting counts.

#include <cstdint>

#include "quasi/perm.hpp"
#include "quasi/square.hpp"

namespace quasi {

/// Thrown when a construction is outside what this library can build, or a
/// randomised search exhausted its budget.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1 <= m <= n/2, and m odd when n is odd.
bool commutative_hole_exists(int n, int m);

/// A symmetric member of Omega(n, m); recounts to n^2 - m^2. Deterministic in
/// (n, m, seed). m = n/2 and m = 1 are built directly; other cases by
/// randomised symmetric completion.
PartialSquare commutative_hole(int n, int m, std::uint64_t seed = 0);

/// The (n, m) for which anti_commutative_hole has a construction here.
bool anti_commutative_hole_supported(int n, int m);

/// An anti-commutative member of Omega(n, m) (count n - m). Supported:
/// m = 1, ceil(n/3) <= m < n/2, m = n/2 >= 3, and the four exceptional pairs.
/// Throws ConstructionError otherwise; (4, 2) never exists.
PartialSquare anti_commutative_hole(int n, int m);

/// Commutative hole with rows permuted by one j-cycle on the last j hole
/// rows; recounts to (n + m - 2j)(n - m). Requires 2 <= j <= m.
PartialSquare permuted_symmetric_hole(int n, int m, int j, std::uint64_t seed = 0);

struct CollidedHole {
    PartialSquare square;
    Permutation alpha;        // fixes the hole pointwise, moves j non-hole rows
    std::int64_t collisions;  // i, with j <= i <= beta(j), i = j mod 2
};

/// Commutative hole with j non-hole rows permuted by a low-collision
/// derangement; recounts to (n - j - m)(n - j + m) + i. Requires
/// 2 <= j <= n - m.
CollidedHole collided_symmetric_hole(int n, int m, int j, std::uint64_t seed = 0,
                                     std::uint64_t hole_seed = 0);

}  // namespace quasi
