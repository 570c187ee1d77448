#pragma once

// Diagonally cyclic partial quasigroups on Z_k + F with hole F.
//
// F = {f_0, ..., f_{m-1}} is represented by the integers k..n-1 (f_i = k + i),
// so the hole is the top m symbols. The k-cycle psi = (0 1 ... k-1), fixing F,
// is an automorphism of every square built here, so the whole square is
// determined by its first row and the hole column entries f_i * 0.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasi/square.hpp"

namespace quasi {

struct DcpqSeed {
    int n = 0;
    int m = 0;
    std::vector<Symbol> row0;   // 0 * x for x = 0..n-1
    std::vector<Symbol> col0F;  // f_i * 0 for i = 0..m-1

    int k() const { return n - m; }
};

/// x + v in Z_k, except that values v outside Z_k are left fixed.
inline Symbol cyclic_add(int x, Symbol v, int k) { return v < k ? (v + x) % k : v; }

/// theta[x] is the image of x or kEmpty when x is outside the domain.
/// True iff theta and x -> theta(x) - x are both injective into Z_k.
bool is_partial_orthomorphism(std::span<const Symbol> theta);

struct GMap {
    DcpqSeed seed;           // col0F left empty
    std::vector<int> A;      // {g(x) - x : x in Z_k} within Z_k, sorted
    std::vector<int> B;      // Z_k \ A, sorted
    int s = 0;               // |B intersect {0..m-1}|
};

/// Requires ceil(n/3) <= m < n/2.
GMap g_map(int n, int m);
/// max{2m - k, m - 1 - floor((k - 2)/4)} with k = n - m.
int coincidence_capacity(int n, int m);

/// Conditions 1-3 on a seed; returns a message naming the first violated
/// condition, or nullopt when all hold.
std::optional<std::string> check_seed_conditions(const DcpqSeed& seed);

/// Extends a seed cyclically to the full member of Omega(n, m).
/// Throws std::invalid_argument naming the violated condition.
PartialSquare cyclic_fill(const DcpqSeed& seed);

/// True iff relabelling rows, columns and symbols by psi maps every filled
/// cell onto a cell with the correspondingly relabelled symbol.
bool psi_is_automorphism(const PartialSquare& s, int k);

/// Q(b): b must be a permutation of B. Recounts to (n - m)(2l + 1) where l
/// is the number of i with b_i = i.
PartialSquare build_Qb(int n, int m, std::span<const int> b);

/// A permutation of B with exactly j coincidences b_i = i (0 <= j <= s).
std::vector<int> choose_b(int n, int m, int j);
PartialSquare build_Qb_with_j(int n, int m, int j);

/// True for (8,2), (20,6), (26,8), (32,10).
bool is_exceptional_pair(int n, int m);
/// Anti-commutative member of Omega(n, m) for the exceptional pairs.
PartialSquare build_h_exceptional(int n, int m);

/// Permutation of `values` with out[i] != forbidden[i] for all i: rotate,
/// then repair collisions by swaps. Throws if no swap can repair one.
std::vector<int> assign_avoiding(std::vector<int> values, std::span<const int> forbidden);

}  // namespace quasi
