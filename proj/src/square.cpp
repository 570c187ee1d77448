#include "quasi/square.hpp"

#include <fstream>
#include <sstream>

#include "quasi/perm.hpp"

namespace quasi {

std::string Violation::describe() const {
    std::ostringstream os;
    os << constraint;
    if (constraint == "row") {
        os << ": row " << row << " repeats symbol " << symbol;
    } else if (constraint == "column") {
        os << ": column " << col << " repeats symbol " << symbol;
    } else if (constraint == "range") {
        os << ": cell (" << row << "," << col << ") holds out-of-range value " << symbol;
    } else if (constraint == "hole") {
        os << ": cell (" << row << "," << col << ") must be empty iff it lies in the hole";
    } else if (constraint == "hole-symbol") {
        os << ": hole symbol " << symbol << " at (" << row << "," << col
           << ") outside the off-hole block";
    } else if (constraint == "hole-row") {
        os << ": hole row/column " << (row >= 0 ? row : col) << " misses symbol " << symbol;
    } else if (constraint == "order") {
        os << ": order must be positive";
    }
    return os.str();
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s): " << violations.front().describe();
    return os.str();
}

Grid::Grid(int n, Symbol fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {
    if (n < 0) throw std::invalid_argument("negative order");
}

Grid::Grid(int n, std::vector<Symbol> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 0 || cells_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("grid cell count does not match order");
}

Grid Grid::from_rows(const std::vector<std::vector<Symbol>>& rows) {
    const int n = static_cast<int>(rows.size());
    Grid g(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw std::invalid_argument("row " + std::to_string(r) + " has wrong length");
        for (int c = 0; c < n; ++c) g(r, c) = rows[r][c];
    }
    return g;
}

std::vector<std::vector<Symbol>> Grid::rows() const {
    std::vector<std::vector<Symbol>> out(n_);
    for (int r = 0; r < n_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

namespace {

// Scans rows then columns for repeated or out-of-range filled symbols.
void check_lines(const Grid& g, ValidationReport& rep) {
    const int n = g.order();
    std::vector<int> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            Symbol s = g(r, c);
            if (s == kEmpty) continue;
            if (s < 0 || s >= n) {
                rep.violations.push_back({"range", r, c, s});
                continue;
            }
            if (seen[s]++ == 1) rep.violations.push_back({"row", r, c, s});
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            Symbol s = g(r, c);
            if (s < 0 || s >= n) continue;
            if (seen[s]++ == 1) rep.violations.push_back({"column", r, c, s});
        }
    }
}

}  // namespace

ValidationReport validate_latin(const Grid& g) {
    ValidationReport rep;
    if (g.order() <= 0) {
        rep.violations.push_back({"order"});
        return rep;
    }
    for (int r = 0; r < g.order(); ++r)
        for (int c = 0; c < g.order(); ++c)
            if (g(r, c) == kEmpty) rep.violations.push_back({"hole", r, c, kEmpty});
    check_lines(g, rep);
    return rep;
}

ValidationReport validate_partial(const Grid& g, int hole_size) {
    ValidationReport rep;
    const int n = g.order();
    if (n <= 0 || hole_size < 0 || hole_size > n) {
        rep.violations.push_back({"order"});
        return rep;
    }
    const int h0 = n - hole_size;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            bool hole_cell = r >= h0 && c >= h0;
            Symbol s = g(r, c);
            if (hole_cell != (s == kEmpty)) rep.violations.push_back({"hole", r, c, s});
            if (s >= h0 && s < n && (r >= h0 || c >= h0))
                rep.violations.push_back({"hole-symbol", r, c, s});
        }
    }
    check_lines(g, rep);
    // Hole rows and columns must carry every non-hole symbol.
    for (int h = h0; h < n; ++h) {
        std::vector<char> in_row(n, 0), in_col(n, 0);
        for (int x = 0; x < n; ++x) {
            if (Symbol s = g(h, x); s >= 0 && s < n) in_row[s] = 1;
            if (Symbol s = g(x, h); s >= 0 && s < n) in_col[s] = 1;
        }
        for (Symbol s = 0; s < h0; ++s) {
            if (!in_row[s]) rep.violations.push_back({"hole-row", h, -1, s});
            if (!in_col[s]) rep.violations.push_back({"hole-row", -1, h, s});
        }
    }
    return rep;
}

Square::Square(Grid g) : grid_(std::move(g)) {
    auto rep = validate_latin(grid_);
    if (!rep.ok()) throw ValidationError("invalid Latin square: " + rep.violations.front().describe());
}

Square Square::from_rows(const std::vector<std::vector<Symbol>>& rows) {
    return Square(Grid::from_rows(rows));
}

PartialSquare::PartialSquare(Grid g, int hole_size) : grid_(std::move(g)), hole_(hole_size) {
    auto rep = validate_partial(grid_, hole_);
    if (!rep.ok())
        throw ValidationError("invalid partial square with hole: " + rep.violations.front().describe());
}

std::int64_t count_commuting(const Grid& g) {
    const int n = g.order();
    std::int64_t count = 0;
    for (int i = 0; i < n; ++i) {
        Symbol d = g(i, i);
        if (d != kEmpty) ++count;
        for (int j = i + 1; j < n; ++j) {
            Symbol a = g(i, j);
            if (a != kEmpty && a == g(j, i)) count += 2;
        }
    }
    return count;
}

std::int64_t count_commuting(const Square& s) { return count_commuting(s.grid()); }
std::int64_t count_commuting(const PartialSquare& s) { return count_commuting(s.grid()); }

Square transpose(const Square& s) {
    const int n = s.order();
    Grid g(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(c, r) = s(r, c);
    return Square(std::move(g));
}

bool is_symmetric(const Grid& g) {
    for (int r = 0; r < g.order(); ++r)
        for (int c = r + 1; c < g.order(); ++c)
            if (g(r, c) != g(c, r)) return false;
    return true;
}

namespace {

Grid permute_rows(const Grid& in, const Permutation& alpha) {
    const int n = in.order();
    if (alpha.size() != n) throw std::invalid_argument("isotope size mismatch");
    Grid out(n);
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < n; ++c) out(alpha(x), c) = in(x, c);
    return out;
}

}  // namespace

Square apply_row_isotope(const Square& s, const Permutation& alpha) {
    return Square(permute_rows(s.grid(), alpha));
}

PartialSquare apply_row_isotope(const PartialSquare& s, const Permutation& alpha) {
    for (int x = s.hole_begin(); x < s.order(); ++x)
        if (alpha.size() == s.order() && !s.in_hole(alpha(x)))
            throw std::invalid_argument("row isotope must map the hole onto itself");
    return PartialSquare(permute_rows(s.grid(), alpha), s.hole_size());
}

Square relabel_symbols(const Square& s, const Permutation& gamma) {
    const int n = s.order();
    if (gamma.size() != n) throw std::invalid_argument("relabel size mismatch");
    Grid g(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = gamma(s(r, c));
    return Square(std::move(g));
}

Square paste(const PartialSquare& outer, const Square& inner) {
    if (inner.order() != outer.hole_size())
        throw std::invalid_argument("inner order " + std::to_string(inner.order()) +
                                    " does not match hole size " + std::to_string(outer.hole_size()));
    Grid g = outer.grid();
    const int h0 = outer.hole_begin();
    for (int r = 0; r < inner.order(); ++r)
        for (int c = 0; c < inner.order(); ++c) g(h0 + r, h0 + c) = h0 + inner(r, c);
    return Square(std::move(g));
}

bool is_orthogonal(const Square& a, const Square& b) {
    const int n = a.order();
    if (b.order() != n) throw std::invalid_argument("orthogonality needs equal orders");
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            auto key = static_cast<std::size_t>(a(r, c)) * n + b(r, c);
            if (seen[key]) return false;
            seen[key] = 1;
        }
    }
    return true;
}

bool is_self_orthogonal(const Square& s) { return is_orthogonal(s, transpose(s)); }

std::string to_text(const Grid& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Grid& g) {
    os << g.order() << '\n';
    for (int r = 0; r < g.order(); ++r) {
        for (int c = 0; c < g.order(); ++c) {
            if (c) os << ' ';
            if (g(r, c) == kEmpty)
                os << '.';
            else
                os << g(r, c);
        }
        os << '\n';
    }
    return os;
}

Grid parse_text(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n) || n <= 0) throw std::invalid_argument("square text must start with a positive order");
    Grid g(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::string tok;
            if (!(is >> tok))
                throw std::invalid_argument("square text ended early at row " + std::to_string(r));
            if (tok == ".") continue;
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw std::invalid_argument("bad cell token '" + tok + "'");
            g(r, c) = v;
        }
    }
    std::string extra;
    if (is >> extra) throw std::invalid_argument("trailing data after square");
    return g;
}

Grid read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

}  // namespace quasi
