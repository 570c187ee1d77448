#include "quasi/exact_cover.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace quasi {

ExactCover::ExactCover(int columns) : columns_(columns) {
    if (columns < 0) throw std::invalid_argument("negative column count");
}

int ExactCover::add_option(const std::vector<int>& columns) {
    for (int c : columns)
        if (c < 0 || c >= columns_) throw std::invalid_argument("option column out of range");
    option_columns_.push_back(columns);
    return static_cast<int>(option_columns_.size()) - 1;
}

namespace {

// Knuth's Algorithm X over a toroidal doubly linked structure. Node 0 is the
// root; nodes 1..C are column headers.
struct Links {
    std::vector<int> left, right, up, down, col, option;
    std::vector<int> size;

    int new_node(int c, int opt) {
        left.push_back(0);
        right.push_back(0);
        up.push_back(0);
        down.push_back(0);
        col.push_back(c);
        option.push_back(opt);
        return static_cast<int>(left.size()) - 1;
    }

    void cover(int c) {
        right[left[c]] = right[c];
        left[right[c]] = left[c];
        for (int i = down[c]; i != c; i = down[i]) {
            for (int j = right[i]; j != i; j = right[j]) {
                up[down[j]] = up[j];
                down[up[j]] = down[j];
                --size[col[j]];
            }
        }
    }

    void uncover(int c) {
        for (int i = up[c]; i != c; i = up[i]) {
            for (int j = left[i]; j != i; j = left[j]) {
                ++size[col[j]];
                up[down[j]] = j;
                down[up[j]] = j;
            }
        }
        right[left[c]] = c;
        left[right[c]] = c;
    }
};

struct Search {
    Links& l;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> stack;

    bool run() {
        if (l.right[0] == 0) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        int best = -1;
        int best_size = std::numeric_limits<int>::max();
        for (int c = l.right[0]; c != 0; c = l.right[c]) {
            if (l.size[c] < best_size) {
                best_size = l.size[c];
                best = c;
                if (best_size <= 1) break;
            }
        }
        if (best_size == 0) return false;
        l.cover(best);
        for (int r = l.down[best]; r != best; r = l.down[r]) {
            stack.push_back(l.option[r]);
            for (int j = l.right[r]; j != r; j = l.right[j]) l.cover(l.col[j]);
            if (run()) return true;
            for (int j = l.left[r]; j != r; j = l.left[j]) l.uncover(l.col[j]);
            stack.pop_back();
            if (exhausted) break;
        }
        l.uncover(best);
        return false;
    }
};

}  // namespace

ExactCover::Result ExactCover::solve(Rng& rng, std::uint64_t node_budget) const {
    Links l;
    l.size.assign(columns_ + 1, 0);
    l.new_node(0, -1);
    std::vector<int> col_order(columns_);
    std::iota(col_order.begin(), col_order.end(), 0);
    shuffle_in_place(std::span<int>(col_order), rng);
    for (int c = 1; c <= columns_; ++c) l.new_node(c, -1);
    // Header ring in shuffled order; ties in the size heuristic follow it.
    int prev = 0;
    for (int idx : col_order) {
        int h = idx + 1;
        l.right[prev] = h;
        l.left[h] = prev;
        l.up[h] = l.down[h] = h;
        prev = h;
    }
    l.right[prev] = 0;
    l.left[0] = prev;

    std::vector<int> opt_order(option_columns_.size());
    std::iota(opt_order.begin(), opt_order.end(), 0);
    shuffle_in_place(std::span<int>(opt_order), rng);
    for (int opt : opt_order) {
        int first = -1;
        for (int c0 : option_columns_[opt]) {
            int h = c0 + 1;
            int node = l.new_node(h, opt);
            l.down[node] = h;
            l.up[node] = l.up[h];
            l.down[l.up[h]] = node;
            l.up[h] = node;
            ++l.size[h];
            if (first < 0) {
                first = node;
                l.left[node] = l.right[node] = node;
            } else {
                l.right[node] = first;
                l.left[node] = l.left[first];
                l.right[l.left[first]] = node;
                l.left[first] = node;
            }
        }
    }

    Search s{l, node_budget, 0, false, {}};
    Result res;
    if (s.run()) res.chosen = s.stack;
    res.nodes = s.nodes;
    res.budget_exhausted = s.exhausted;
    return res;
}

}  // namespace quasi
