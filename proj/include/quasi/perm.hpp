#pragma once

// Permutations of 0..n-1, derangement sampling, and the collision bound
// used when permuting rows of a commutative partial square.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "quasi/square.hpp"

namespace quasi {

using Rng = std::mt19937_64;

/// splitmix64 finaliser; derives independent seeds from a base seed and tags.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation so seeds replay across toolchains.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

template <typename T>
void shuffle_in_place(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `image` is a bijection on 0..n-1.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    /// The cycle (c[0] c[1] ... c[len-1]) on 0..n-1.
    static Permutation cycle(int n, std::span<const int> points);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[x]; }
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const;
    /// (this * other)(x) = this(other(x)).
    Permutation operator*(const Permutation& other) const;

    std::vector<int> fixed_points() const;
    std::vector<int> support() const;
    std::vector<std::vector<int>> cycles() const;
    bool is_derangement_of(std::span<const int> points) const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// Collision bound: j^2 for j <= 2, floor(j(2j-3)/(j-2)) otherwise.
std::int64_t beta(std::int64_t j);

/// Uniform derangement of `support` (fixing every other point of 0..n-1),
/// by rejection from uniform shuffles.
Permutation random_derangement(int n, std::span<const int> support, Rng& rng);

struct CollisionSample {
    Permutation alpha;
    std::int64_t collisions = 0;
    int attempts = 0;
    bool exhaustive = false;
};

/// |{(x, y) in support^2 : g(alpha(x), y) == g(alpha(y), x)}|.
std::int64_t count_collisions(const Grid& g, const Permutation& alpha, std::span<const int> support);

/// Samples derangements of `support` until one has at most beta(|support|)
/// collisions in `g`. After `budget` failed draws falls back to scanning all
/// derangements when |support| <= 9. Returns nullopt only if that also fails.
std::optional<CollisionSample> sample_low_collision_derangement(
    const Grid& g, std::span<const int> support, Rng& rng, int budget = 64);

/// All derangements of `points` (as permutations of 0..n-1). Intended for
/// small point sets.
std::vector<Permutation> all_derangements(int n, std::span<const int> points);

}  // namespace quasi
