#include "quasi/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quasi {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> hit(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || hit[v])
            throw std::invalid_argument("not a permutation");
        hit[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) im.at(points[i]) = points[(i + 1) % points.size()];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = static_cast<int>(x);
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> im(image_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = image_[other.image_[x]];
    return Permutation(std::move(im));
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (image_[x] == x) out.push_back(x);
    return out;
}

std::vector<int> Permutation::support() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (image_[x] != x) out.push_back(x);
    return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (int x = 0; x < size(); ++x) {
        if (seen[x]) continue;
        auto& cyc = out.emplace_back();
        for (int y = x; !seen[y]; y = image_[y]) {
            seen[y] = 1;
            cyc.push_back(y);
        }
    }
    return out;
}

bool Permutation::is_derangement_of(std::span<const int> points) const {
    std::vector<char> in(image_.size(), 0);
    for (int p : points) in.at(p) = 1;
    for (int x = 0; x < size(); ++x)
        if ((image_[x] == x) == static_cast<bool>(in[x])) return false;
    return true;
}

std::int64_t beta(std::int64_t j) {
    if (j <= 0) throw std::invalid_argument("beta needs a positive argument, got " + std::to_string(j));
    if (j <= 2) return j * j;
    return j * (2 * j - 3) / (j - 2);
}

namespace {

void check_support(int n, std::span<const int> support) {
    if (support.size() < 2) throw std::invalid_argument("derangement support needs at least two points");
    std::vector<char> seen(n, 0);
    for (int p : support) {
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("bad derangement support");
        seen[p] = 1;
    }
}

}  // namespace

Permutation random_derangement(int n, std::span<const int> support, Rng& rng) {
    check_support(n, support);
    std::vector<int> pts(support.begin(), support.end());
    std::vector<int> img(pts);
    for (;;) {
        shuffle_in_place(std::span<int>(img), rng);
        bool deranged = true;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (img[i] == pts[i]) {
                deranged = false;
                break;
            }
        }
        if (deranged) break;
    }
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) im[pts[i]] = img[i];
    return Permutation(std::move(im));
}

std::int64_t count_collisions(const Grid& g, const Permutation& alpha, std::span<const int> support) {
    std::int64_t total = 0;
    for (int x : support)
        for (int y : support)
            if (g(alpha(x), y) == g(alpha(y), x)) ++total;
    return total;
}

std::vector<Permutation> all_derangements(int n, std::span<const int> points) {
    std::vector<int> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    std::vector<int> img(pts);
    std::vector<Permutation> out;
    do {
        bool deranged = true;
        for (std::size_t i = 0; i < pts.size() && deranged; ++i) deranged = img[i] != pts[i];
        if (!deranged) continue;
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        for (std::size_t i = 0; i < pts.size(); ++i) im[pts[i]] = img[i];
        out.emplace_back(std::move(im));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::optional<CollisionSample> sample_low_collision_derangement(
    const Grid& g, std::span<const int> support, Rng& rng, int budget) {
    const int n = g.order();
    check_support(n, support);
    const std::int64_t bound = beta(static_cast<std::int64_t>(support.size()));
    for (int attempt = 1; attempt <= budget; ++attempt) {
        Permutation alpha = random_derangement(n, support, rng);
        std::int64_t c = count_collisions(g, alpha, support);
        if (c <= bound) return CollisionSample{std::move(alpha), c, attempt, false};
    }
    if (support.size() > 9) return std::nullopt;
    for (auto& alpha : all_derangements(n, support)) {
        std::int64_t c = count_collisions(g, alpha, support);
        if (c <= bound) return CollisionSample{std::move(alpha), c, budget, true};
    }
    return std::nullopt;
}

}  // namespace quasi
