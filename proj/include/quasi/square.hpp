#pragma once

// Latin squares and partial Latin squares with a hole.
//
// Rows, columns and symbols share the range 0..n-1. A PartialSquare of order
// n with hole size m always uses the top m values {n-m, ..., n-1} as its hole.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasi {

using Symbol = int;
inline constexpr Symbol kEmpty = -1;

class Permutation;

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string constraint;  // "row", "column", "range", "hole", "hole-row", "hole-symbol"
    int row = -1;
    int col = -1;
    Symbol symbol = kEmpty;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Row-major n x n array of symbols; cells may be kEmpty.
class Grid {
public:
    Grid() = default;
    explicit Grid(int n, Symbol fill = kEmpty);
    Grid(int n, std::vector<Symbol> cells);

    static Grid from_rows(const std::vector<std::vector<Symbol>>& rows);

    int order() const { return n_; }
    Symbol operator()(int r, int c) const { return cells_[index(r, c)]; }
    Symbol& operator()(int r, int c) { return cells_[index(r, c)]; }
    std::span<const Symbol> row(int r) const {
        return {cells_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
    }
    const std::vector<Symbol>& cells() const { return cells_; }
    std::vector<std::vector<Symbol>> rows() const;

    bool operator==(const Grid&) const = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }

    int n_ = 0;
    std::vector<Symbol> cells_;
};

/// Every violated Latin constraint of a fully filled grid.
ValidationReport validate_latin(const Grid& g);
/// Every violated constraint of a partial square whose hole is the top
/// `hole_size` symbols.
ValidationReport validate_partial(const Grid& g, int hole_size);

/// A fully filled Latin square. Immutable once constructed.
class Square {
public:
    /// Throws ValidationError naming the first violated constraint.
    explicit Square(Grid g);
    static Square from_rows(const std::vector<std::vector<Symbol>>& rows);

    int order() const { return grid_.order(); }
    Symbol operator()(int r, int c) const { return grid_(r, c); }
    std::span<const Symbol> row(int r) const { return grid_.row(r); }
    const Grid& grid() const { return grid_; }

    bool operator==(const Square&) const = default;

private:
    Grid grid_;
};

/// A member of Omega(n, m): cells in H x H are empty where H = {n-m..n-1}.
class PartialSquare {
public:
    explicit PartialSquare(Grid g, int hole_size);

    int order() const { return grid_.order(); }
    int hole_size() const { return hole_; }
    int hole_begin() const { return grid_.order() - hole_; }
    bool in_hole(int x) const { return x >= hole_begin(); }
    Symbol operator()(int r, int c) const { return grid_(r, c); }
    const Grid& grid() const { return grid_; }

    bool operator==(const PartialSquare&) const = default;

private:
    Grid grid_;
    int hole_;
};

/// Ordered pairs (i, j) with both (i, j) and (j, i) filled and equal.
std::int64_t count_commuting(const Grid& g);
std::int64_t count_commuting(const Square& s);
std::int64_t count_commuting(const PartialSquare& s);

Square transpose(const Square& s);
bool is_symmetric(const Grid& g);

/// Output row alpha(x) is input row x.
Square apply_row_isotope(const Square& s, const Permutation& alpha);
/// alpha must map the hole onto itself.
PartialSquare apply_row_isotope(const PartialSquare& s, const Permutation& alpha);

/// Applies gamma to every symbol. Commuting counts are unchanged.
Square relabel_symbols(const Square& s, const Permutation& gamma);

/// Fills the hole of `outer` with `inner`, relabelling inner symbol t as
/// outer.hole_begin() + t. The result recounts to the sum of both counts.
Square paste(const PartialSquare& outer, const Square& inner);

bool is_orthogonal(const Square& a, const Square& b);
bool is_self_orthogonal(const Square& s);

// Text format: first line n, then n lines of n space separated symbols;
// empty cells are written as '.'.
std::string to_text(const Grid& g);
Grid parse_text(const std::string& text);
Grid read_text_file(const std::string& path);

std::ostream& operator<<(std::ostream& os, const Grid& g);

}  // namespace quasi
