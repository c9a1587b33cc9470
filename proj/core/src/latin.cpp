#include "tropnet/latin.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace tropnet {

namespace {

// Flattens after shape/range validation.
std::pair<int, std::vector<int>> check_shape(const std::vector<std::vector<int>>& rows) {
    int d = static_cast<int>(rows.size());
    if (d == 0) {
        throw MalformedInputError("empty square");
    }
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(d * d));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d) {
            throw MalformedInputError("square rows have unequal lengths");
        }
        for (int x : row) {
            if (x < 1 || x > d) {
                throw MalformedInputError("square entry out of range 1..d");
            }
            cells.push_back(x);
        }
    }
    return {d, std::move(cells)};
}

bool latin_property(int d, const std::vector<int>& cells) {
    for (int r = 0; r < d; ++r) {
        std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
        for (int c = 0; c < d; ++c) {
            int x = cells[static_cast<std::size_t>(r * d + c)];
            if (seen[static_cast<std::size_t>(x)]) {
                return false;
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    for (int c = 0; c < d; ++c) {
        std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
        for (int r = 0; r < d; ++r) {
            int x = cells[static_cast<std::size_t>(r * d + c)];
            if (seen[static_cast<std::size_t>(x)]) {
                return false;
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    return true;
}

}  // namespace

bool is_latin(const std::vector<std::vector<int>>& rows) {
    auto [d, cells] = check_shape(rows);
    return latin_property(d, cells);
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
    auto [d, cells] = check_shape(rows);
    if (!latin_property(d, cells)) {
        throw MalformedInputError("array is not a Latin square");
    }
    return LatinSquare(d, std::move(cells));
}

std::vector<std::vector<int>> LatinSquare::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(d_));
    for (int r = 0; r < d_; ++r) {
        auto& row = out[static_cast<std::size_t>(r)];
        row.resize(static_cast<std::size_t>(d_));
        for (int c = 0; c < d_; ++c) {
            row[static_cast<std::size_t>(c)] = at(r, c);
        }
    }
    return out;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) {
        throw OrderMismatchError("orthogonality of squares of different orders");
    }
    int d = a.order();
    std::vector<bool> seen(static_cast<std::size_t>(d * d), false);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            int idx = (a.at(r, c) - 1) * d + (b.at(r, c) - 1);
            if (seen[static_cast<std::size_t>(idx)]) {
                return false;
            }
            seen[static_cast<std::size_t>(idx)] = true;
        }
    }
    return true;
}

namespace {

// Relabels symbols by first occurrence in row-major order; this produces the
// lexicographically smallest flattening among all relabelings.
std::vector<int> relabel_canonical(const std::vector<int>& cells, int d) {
    std::vector<int> map(static_cast<std::size_t>(d) + 1, 0);
    int next = 1;
    std::vector<int> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        int s = cells[i];
        if (map[static_cast<std::size_t>(s)] == 0) {
            map[static_cast<std::size_t>(s)] = next++;
        }
        out[i] = map[static_cast<std::size_t>(s)];
    }
    return out;
}

std::vector<int> permute_cells(const std::vector<int>& cells, int d,
                               const std::vector<int>& row_perm,
                               const std::vector<int>& col_perm) {
    std::vector<int> out(cells.size());
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            out[static_cast<std::size_t>(r * d + c)] =
                cells[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(r)] * d +
                                               col_perm[static_cast<std::size_t>(c)])];
        }
    }
    return out;
}

std::vector<int> flatten(const LatinSquare& s) {
    std::vector<int> out;
    int d = s.order();
    out.reserve(static_cast<std::size_t>(d * d));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            out.push_back(s.at(r, c));
        }
    }
    return out;
}

LatinSquare square_from_flat(int d, const std::vector<int>& cells) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        rows[static_cast<std::size_t>(r)].assign(
            cells.begin() + r * d, cells.begin() + (r + 1) * d);
    }
    return LatinSquare::from_rows(rows);
}

}  // namespace

OLSPair canonical_form(const OLSPair& p) {
    if (p.first.order() != p.second.order()) {
        throw OrderMismatchError("pair of squares of different orders");
    }
    int d = p.first.order();
    std::vector<int> fa = flatten(p.first);
    std::vector<int> fb = flatten(p.second);

    std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
    std::vector<int> base_perm(static_cast<std::size_t>(d));
    std::iota(base_perm.begin(), base_perm.end(), 0);

    for (int swap = 0; swap < 2; ++swap) {
        const std::vector<int>& ca = swap ? fb : fa;
        const std::vector<int>& cb = swap ? fa : fb;
        std::vector<int> row_perm = base_perm;
        do {
            std::vector<int> col_perm = base_perm;
            do {
                std::vector<int> a = relabel_canonical(permute_cells(ca, d, row_perm, col_perm), d);
                std::vector<int> b = relabel_canonical(permute_cells(cb, d, row_perm, col_perm), d);
                auto cand = std::make_pair(std::move(a), std::move(b));
                if (!best || cand < *best) {
                    best = std::move(cand);
                }
            } while (std::next_permutation(col_perm.begin(), col_perm.end()));
        } while (std::next_permutation(row_perm.begin(), row_perm.end()));
    }
    return OLSPair{square_from_flat(d, best->first), square_from_flat(d, best->second)};
}

namespace {

// All Latin squares of order d by cell-wise backtracking; optionally with the
// first row fixed to 1..d, or fully reduced (first row and column 1..d).
void gen_latin(int d, bool reduced, bool fixed_first_row, std::vector<int>& cells, int pos,
               std::vector<LatinSquare>& out) {
    if (pos == d * d) {
        out.push_back(square_from_flat(d, cells));
        return;
    }
    int r = pos / d;
    int c = pos % d;
    for (int v = 1; v <= d; ++v) {
        if ((fixed_first_row || reduced) && r == 0 && v != c + 1) {
            continue;
        }
        if (reduced && c == 0 && v != r + 1) {
            continue;
        }
        bool ok = true;
        for (int cc = 0; cc < c && ok; ++cc) {
            ok = cells[static_cast<std::size_t>(r * d + cc)] != v;
        }
        for (int rr = 0; rr < r && ok; ++rr) {
            ok = cells[static_cast<std::size_t>(rr * d + c)] != v;
        }
        if (!ok) {
            continue;
        }
        cells[static_cast<std::size_t>(pos)] = v;
        gen_latin(d, reduced, fixed_first_row, cells, pos + 1, out);
        cells[static_cast<std::size_t>(pos)] = 0;
    }
}

}  // namespace

std::vector<LatinSquare> enumerate_latin(int d, bool reduced, bool fixed_first_row) {
    std::vector<LatinSquare> out;
    std::vector<int> cells(static_cast<std::size_t>(d * d), 0);
    gen_latin(d, reduced, fixed_first_row, cells, 0, out);
    return out;
}

std::vector<OLSPair> enumerate_ols(int d) {
    if (d < 2 || d > 4) {
        throw UnsupportedOrderError("orthogonal-pair enumeration supports orders 2..4 only");
    }
    // Every orthogonal class has a representative with the first square
    // reduced (common row/column permutations) and the second square's first
    // row equal to 1..d (independent relabeling).
    std::vector<LatinSquare> firsts = enumerate_latin(d, /*reduced=*/true, false);
    std::vector<LatinSquare> seconds = enumerate_latin(d, false, /*fixed_first_row=*/true);
    std::set<OLSPair> classes;
    for (const auto& a : firsts) {
        for (const auto& b : seconds) {
            if (are_orthogonal(a, b)) {
                classes.insert(canonical_form(OLSPair{a, b}));
            }
        }
    }
    return {classes.begin(), classes.end()};
}

}  // namespace tropnet
