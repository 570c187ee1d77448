#include "quasi/oracle.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"

#include "quasi/perm.hpp"
#include "quasi/switching.hpp"
#include "quasi/synthesis.hpp"

namespace quasi {

namespace {

class Backtracker {
public:
    Backtracker(int n, CellOrder order) : n_(n), grid_(n), row_used_(n, 0), col_used_(n, 0) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) cells_.emplace_back(order == CellOrder::RowMajor ? a : b,
                                                            order == CellOrder::RowMajor ? b : a);
    }

    bool place(int r, int c, Symbol s) {
        unsigned bit = 1u << s;
        if ((row_used_[r] & bit) || (col_used_[c] & bit)) return false;
        grid_(r, c) = s;
        row_used_[r] |= bit;
        col_used_[c] |= bit;
        return true;
    }

    void unplace(int r, int c) {
        unsigned bit = 1u << grid_(r, c);
        row_used_[r] &= ~bit;
        col_used_[c] &= ~bit;
        grid_(r, c) = kEmpty;
    }

    // Completes from cell index `from`; cells before it must already be set.
    std::uint64_t run(std::size_t from, const std::function<void(const Grid&)>& visit) {
        if (from == cells_.size()) {
            visit(grid_);
            return 1;
        }
        auto [r, c] = cells_[from];
        std::uint64_t total = 0;
        for (Symbol s = 0; s < n_; ++s) {
            if (!place(r, c, s)) continue;
            total += run(from + 1, visit);
            unplace(r, c);
        }
        return total;
    }

private:
    int n_;
    Grid grid_;
    std::vector<unsigned> row_used_, col_used_;
    std::vector<std::pair<int, int>> cells_;
};

void check_order(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("exhaustive enumeration is limited to orders 1.." +
                                    std::to_string(kMaxEnumerationOrder));
}

}  // namespace

std::uint64_t enumerate_all(int n, const std::function<void(const Grid&)>& visit, CellOrder order) {
    check_order(n);
    Backtracker bt(n, order);
    return bt.run(0, visit);
}

Histogram commuting_histogram(int n, int jobs, CellOrder order) {
    check_order(n);
    auto tally = [](Histogram& h) { return [&h](const Grid& g) { ++h[count_commuting(g)]; }; };
    if (order == CellOrder::ColumnMajor || n < 3 || jobs <= 1) {
        Histogram h;
        enumerate_all(n, tally(h), order);
        return h;
    }
    // Shards: every valid pair of first rows.
    std::vector<std::vector<Symbol>> prefixes;
    {
        Backtracker bt(n, CellOrder::RowMajor);
        std::vector<Symbol> cells(static_cast<std::size_t>(2 * n));
        std::function<void(std::size_t)> rec = [&](std::size_t p) {
            if (p == cells.size()) {
                prefixes.push_back(cells);
                return;
            }
            int r = static_cast<int>(p) / n, c = static_cast<int>(p) % n;
            for (Symbol s = 0; s < n; ++s) {
                if (!bt.place(r, c, s)) continue;
                cells[p] = s;
                rec(p + 1);
                bt.unplace(r, c);
            }
        };
        rec(0);
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    Histogram merged;
    auto worker = [&] {
        Histogram local;
        for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
            Backtracker bt(n, CellOrder::RowMajor);
            for (int p = 0; p < 2 * n; ++p) bt.place(p / n, p % n, prefixes[i][p]);
            bt.run(static_cast<std::size_t>(2 * n), tally(local));
        }
        std::lock_guard lock(mu);
        for (auto [k, v] : local) merged[k] += v;
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return merged;
}

Histogram sampled_support(int n, int samples, std::uint64_t seed) {
    if (n < 6 || n > 8) throw std::invalid_argument("sampled support covers orders 6..8");
    const auto targets = admissible(n).members();
    Rng rng(mix_seed(seed, n));
    Histogram h;
    constexpr int kWalkLength = 200;
    int taken = 0;
    while (taken < samples) {
        std::int64_t from = targets[uniform_below(rng, targets.size())];
        Square cur = witness(n, from, seed).square;
        std::int64_t count = count_commuting(cur);
        for (int step = 0; step < kWalkLength && taken < samples; ++step, ++taken) {
            int i = static_cast<int>(uniform_below(rng, n));
            int j = static_cast<int>(uniform_below(rng, n - 1));
            if (j >= i) ++j;
            RowCycle rc = row_cycle(cur, i, j, static_cast<int>(uniform_below(rng, n)));
            count = count_after_switch(cur, count, rc);
            cur = switch_cycle(cur, rc);
            ++h[count];
        }
    }
    return h;
}

std::string histogram_json(const Histogram& h) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto [k, v] : h) j[std::to_string(k)] = v;
    return j.dump();
}

}  // namespace quasi
