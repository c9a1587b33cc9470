#pragma once

#include <compare>
#include <vector>

#include "tropnet/errors.hpp"

namespace tropnet {

/// d x d Latin square with entries 1..d, row-major.
class LatinSquare {
public:
    /// Validates shape and the Latin property; throws MalformedInputError if
    /// either fails (use is_latin() for a boolean check).
    static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return d_; }
    int at(int r, int c) const { return cells_[static_cast<std::size_t>(r * d_ + c)]; }
    std::vector<std::vector<int>> rows() const;

    auto operator<=>(const LatinSquare& o) const = default;

private:
    int d_ = 0;
    std::vector<int> cells_;
    LatinSquare(int d, std::vector<int> cells) : d_(d), cells_(std::move(cells)) {}
};

/// True iff the array is a Latin square. Throws MalformedInputError for a
/// non-square shape or out-of-range entries.
bool is_latin(const std::vector<std::vector<int>>& rows);

/// Ordered pair of Latin squares of equal order.
struct OLSPair {
    LatinSquare first;
    LatinSquare second;

    auto operator<=>(const OLSPair& o) const = default;
};

/// True iff superposition yields all d^2 ordered pairs exactly once.
/// Throws OrderMismatchError for different orders.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Minimum representative of the orbit of p under the group generated by
/// common row permutations, common column permutations, independent symbol
/// relabelings in each square, and swapping the two squares. Minimality is
/// judged by lexicographic comparison of the flattened (first, second) pair.
OLSPair canonical_form(const OLSPair& p);

/// All Latin squares of order d by backtracking, optionally restricted to
/// reduced squares (first row and column 1..d) or to a fixed first row 1..d.
std::vector<LatinSquare> enumerate_latin(int d, bool reduced, bool fixed_first_row);

/// All canonical classes of orthogonal pairs of order d (2 <= d <= 4),
/// ascending. Throws UnsupportedOrderError outside that range.
std::vector<OLSPair> enumerate_ols(int d);

}  // namespace tropnet
