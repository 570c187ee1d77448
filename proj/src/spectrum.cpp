#include "quasi/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quasi {

AdmissibleSet spectrum_C(int n) { return admissible(n); }

RationalQ make_rational(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0 || a > b) throw std::invalid_argument("proportion must lie in (0, 1]");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("proportion must be in lowest terms");
    if (a == b && a != 1) throw std::invalid_argument("proportion must be in lowest terms");
    return {a, b, squarefree_part(b)};
}

RationalQ parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        std::int64_t a = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument("");
        std::int64_t b = 1;
        if (slash != std::string::npos) {
            std::string tail = text.substr(slash + 1);
            b = std::stoll(tail, &used);
            if (used != tail.size()) throw std::invalid_argument("");
        }
        return make_rational(a, b);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("proportion out of range: " + text);
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).empty()) throw std::invalid_argument("cannot parse proportion: " + text);
        throw;
    }
}

std::int64_t squarefree_part(std::int64_t v) {
    if (v <= 0) throw std::invalid_argument("squarefree part of a non-positive integer");
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= v; ++p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    return out * v;
}

namespace {

std::int64_t isqrt(std::int64_t v) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Least x >= 1 with x^2 * v >= u.
std::int64_t least_x(std::int64_t u, std::int64_t v) {
    std::int64_t x = 1;
    while (x * x * v < u) ++x;
    return x;
}

}  // namespace

KqSet kq(std::int64_t a, std::int64_t b) {
    KqSet s;
    s.q = make_rational(a, b);
    if (a == b) {
        s.all_orders = true;
        return s;
    }
    const std::int64_t k = s.q.k;
    s.root = isqrt(k * b);
    s.even_only = !(k % 2 == 0 || a % 2 == b % 2);
    s.x_min = std::max(least_x(b, a * a * k), least_x(6, k * b - k * a));
    if (s.even_only && s.x_min % 2 == 1) ++s.x_min;
    if (a == 5 && b == 8) s.exclusions = {4};
    if (a == 17 && b == 25) s.exclusions = {5};
    return s;
}

bool KqSet::in_S(std::int64_t n) const {
    if (n < 1) return false;
    if (all_orders) return true;
    if (n % root != 0) return false;
    std::int64_t x = n / root;
    return x >= x_min && (!even_only || x % 2 == 0);
}

bool KqSet::contains(std::int64_t n) const {
    return in_S(n) && std::find(exclusions.begin(), exclusions.end(), n) == exclusions.end();
}

std::int64_t KqSet::target_count(std::int64_t n) const {
    if (!in_S(n)) throw std::invalid_argument(std::to_string(n) + " is not in S");
    if (all_orders) return n * n;
    std::int64_t x = n / root;
    return x * x * q.k * q.a;
}

std::vector<std::int64_t> KqSet::s_members(std::int64_t limit) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= limit; ++n)
        if (in_S(n)) out.push_back(n);
    return out;
}

std::vector<std::int64_t> KqSet::members(std::int64_t limit) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n : s_members(limit))
        if (contains(n)) out.push_back(n);
    return out;
}

std::string KqSet::describe() const {
    std::ostringstream os;
    if (all_orders) return "K(1) = all positive integers";
    os << "q = " << q.a << '/' << q.b << ", k = " << q.k << ": S = {" << root << "x : x >= " << x_min;
    if (even_only) os << ", x even";
    os << '}';
    if (!exclusions.empty()) {
        os << ", K = S \\ {";
        for (std::size_t i = 0; i < exclusions.size(); ++i) os << (i ? "," : "") << exclusions[i];
        os << '}';
    } else {
        os << ", K = S";
    }
    return os.str();
}

std::vector<std::int64_t> kq_members(std::int64_t a, std::int64_t b, std::int64_t limit) {
    return kq(a, b).members(limit);
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Fraction proportion(const Square& s) {
    const std::int64_t c = count_commuting(s);
    const std::int64_t nn = static_cast<std::int64_t>(s.order()) * s.order();
    const std::int64_t g = std::gcd(c, nn);
    return {c / g, nn / g};
}

}  // namespace quasi
