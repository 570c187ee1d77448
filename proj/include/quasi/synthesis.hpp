#pragma once

// Admissible counts, the route planner, base-case data and the witness engine.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasi/square.hpp"

namespace quasi {

/// {lo, lo+2, ..., hi} plus `extras`, minus `excluded`. The progression is
/// empty when hi < lo.
struct AdmissibleSet {
    int n = 0;
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::vector<std::int64_t> extras;    // sorted, outside the progression
    std::vector<std::int64_t> excluded;  // sorted, inside the progression

    bool contains(std::int64_t k) const;
    std::vector<std::int64_t> members() const;
    std::size_t size() const;
    /// e.g. "{7,9,...,43} u {49}" or "{4,6,8,16}".
    std::string describe() const;
};

/// D(n) = {n, n+2, ..., n^2-6} u {n^2}.
AdmissibleSet admissible_D(int n);
/// D(n) without the two exceptions: 10 at n = 4 and 17 at n = 5.
AdmissibleSet admissible(int n);
bool is_admissible(int n, std::int64_t k);
/// Closest members of admissible(n) below and above k (either may be absent).
std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>> nearest_admissible(int n, std::int64_t k);

/// Smallest j in 2..n-m with beta(j)+m <= k-(n-j-m)(n-j+m) <= j+m^2-6.
std::optional<int> kconds_feasible_j(int n, int m, std::int64_t k);

struct DriverConstants {
    int n = 0;
    int q = 0;
    int r = 0;
    std::array<std::int64_t, 8> x{};  // x[0] is x_1
};

std::int64_t driver_f1(std::int64_t a, std::int64_t b);
std::int64_t driver_f2(std::int64_t a, std::int64_t b);
/// q and r below are defined for every n >= 3; the thresholds need n >= 28.
int driver_q(int n);
int driver_r(int n);
DriverConstants driver_constants(int n);

enum class Capability {
    Existence,  // every hole the existence results provide
    Buildable,  // only holes this library constructs
};

struct RoutePlan {
    std::string rule;
    int m = 0;
    int j = 0;
    std::int64_t ell = 0;  // inner count; unknown (0) for collided-hole plans
};

/// Candidate hole routes for (n, k) in the order the witness engine tries
/// them. Inner counts are assumed available for every member of
/// admissible(m); orders 4 and 5 are never used where saturation is needed.
std::vector<RoutePlan> route_plans(int n, std::int64_t k, Capability cap);

/// k -> first rule reaching it, over D(n), assuming admissible(m) for every
/// m <= n/2.
std::map<std::int64_t, std::string> rule_table(int n, Capability cap = Capability::Existence);
std::set<std::int64_t> compute_E(int n, Capability cap = Capability::Existence);

struct SwitchStep {
    int i;
    int j;
    int c;
};

struct BaseRecipe {
    int n;
    std::int64_t k;
    std::vector<SwitchStep> switches;  // applied in order to base_square(n)
};

/// Embedded squares for 4 <= n <= 10, validated on first use.
const Square& base_square(int n);
const std::vector<BaseRecipe>& base_recipes();
/// Base square of order n with its recipe applied, when one exists for k.
std::optional<Square> base_case(int n, std::int64_t k);

struct TraceNode {
    std::string rule;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<TraceNode> children;

    bool operator==(const TraceNode&) const = default;
};

struct WitnessCertificate {
    int n = 0;
    std::int64_t k_target = 0;
    std::int64_t k_recounted = 0;
    Square square{Grid(1, 0)};
    TraceNode trace;
    std::uint64_t seed = 0;
};

/// k outside D(n).
class InadmissibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
/// k in D(n) but no quasigroup of order n has k commuting pairs.
class ImpossibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A square of order n with exactly k commuting pairs, certified by recount.
/// Deterministic in (n, k, seed); results are memoized process-wide and the
/// function is safe to call from several threads.
WitnessCertificate witness(int n, std::int64_t k, std::uint64_t seed = 0);

/// Random row-cycle switching hill-climb towards k from `start`. Returns
/// nullopt if the step budget runs out.
std::optional<Square> switching_walk(const Square& start, std::int64_t k, std::uint64_t seed,
                                     int max_steps = 20000);

void clear_witness_cache();

}  // namespace quasi
