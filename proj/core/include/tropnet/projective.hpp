#pragma once

#include <array>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "tropnet/errors.hpp"
#include "tropnet/mat3.hpp"
#include "tropnet/multipoly.hpp"
#include "tropnet/quotient.hpp"
#include "tropnet/rational.hpp"
#include "tropnet/unipoly.hpp"

namespace tropnet {

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const UniPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const QuotientElem& x) { return x.is_zero(); }

inline Rational ring_inverse(const Rational& x) {
    if (x == 0) {
        throw DomainError("inverse of zero");
    }
    return Rational(1) / x;
}
inline QuotientElem ring_inverse(const QuotientElem& x) { return x.inverse(); }

/// Canonical representative of a coordinate triple, up to nonzero scalar.
/// Fields: first nonzero coordinate becomes 1. Polynomial rings: divided by
/// rational content, sign fixed so the first nonzero entry has positive
/// leading coefficient.
void canonicalize_triple(std::array<Rational, 3>& v);
void canonicalize_triple(std::array<QuotientElem, 3>& v);
void canonicalize_triple(std::array<MultiPoly, 3>& v);
void canonicalize_triple(std::array<UniPoly, 3>& v);

/// Point (a:b:c) of the projective plane over ring R.
template <class R>
struct ProjPoint {
    std::array<R, 3> c;

    static ProjPoint make(R a, R b, R cc) {
        std::array<R, 3> v{std::move(a), std::move(b), std::move(cc)};
        if (ring_is_zero(v[0]) && ring_is_zero(v[1]) && ring_is_zero(v[2])) {
            throw MalformedInputError("projective point with all coordinates zero");
        }
        canonicalize_triple(v);
        return ProjPoint{std::move(v)};
    }
};

/// Line dx + ey + fz = 0 represented by its dual triple [d:e:f].
template <class R>
struct ProjLine {
    std::array<R, 3> c;

    static ProjLine make(R d, R e, R f) {
        std::array<R, 3> v{std::move(d), std::move(e), std::move(f)};
        if (ring_is_zero(v[0]) && ring_is_zero(v[1]) && ring_is_zero(v[2])) {
            throw MalformedInputError("projective line with all coordinates zero");
        }
        canonicalize_triple(v);
        return ProjLine{std::move(v)};
    }
};

template <class R>
std::array<R, 3> triple_cross(const std::array<R, 3>& a, const std::array<R, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class R>
bool triple_proportional(const std::array<R, 3>& a, const std::array<R, 3>& b) {
    auto x = triple_cross(a, b);
    return ring_is_zero(x[0]) && ring_is_zero(x[1]) && ring_is_zero(x[2]);
}

template <class R>
bool incident(const ProjPoint<R>& p, const ProjLine<R>& l) {
    return ring_is_zero(p.c[0] * l.c[0] + p.c[1] * l.c[1] + p.c[2] * l.c[2]);
}

template <class R>
bool proj_equal(const ProjPoint<R>& a, const ProjPoint<R>& b) {
    return triple_proportional(a.c, b.c);
}

template <class R>
bool proj_equal(const ProjLine<R>& a, const ProjLine<R>& b) {
    return triple_proportional(a.c, b.c);
}

template <class R>
ProjPoint<R> meet(const ProjLine<R>& l1, const ProjLine<R>& l2) {
    auto x = triple_cross(l1.c, l2.c);
    if (ring_is_zero(x[0]) && ring_is_zero(x[1]) && ring_is_zero(x[2])) {
        throw CoincidentLinesError("meet of coincident lines");
    }
    return ProjPoint<R>::make(std::move(x[0]), std::move(x[1]), std::move(x[2]));
}

template <class R>
ProjLine<R> join(const ProjPoint<R>& p1, const ProjPoint<R>& p2) {
    auto x = triple_cross(p1.c, p2.c);
    if (ring_is_zero(x[0]) && ring_is_zero(x[1]) && ring_is_zero(x[2])) {
        throw CoincidentPointsError("join of coincident points");
    }
    return ProjLine<R>::make(std::move(x[0]), std::move(x[1]), std::move(x[2]));
}

/// Invertible rational dual-coordinate transformation (as a degree-0 Mat3)
/// sending the four input lines to z=0, x+y+z=0, x=0, y=0 respectively.
/// Throws DegenerateConfigurationError when any three inputs are concurrent
/// or any two coincide.
Mat3 standardize_quadrilateral(const ProjLine<Rational>& l11, const ProjLine<Rational>& l12,
                               const ProjLine<Rational>& l21, const ProjLine<Rational>& l22);

/// Homogeneous degree-d form in x,y,z as exponent-triple -> coefficient.
template <class R>
using HomForm = std::map<std::array<int, 3>, R>;

/// Product of the linear forms dual to the given lines.
template <class R>
HomForm<R> expand_line_product(const std::vector<ProjLine<R>>& lines) {
    HomForm<R> acc;
    acc[{0, 0, 0}] = [] {
        if constexpr (std::is_same_v<R, Rational>) {
            return Rational(1);
        } else {
            return R::from_rational(1);
        }
    }();
    for (const auto& l : lines) {
        HomForm<R> next;
        for (const auto& [mono, coeff] : acc) {
            for (int v = 0; v < 3; ++v) {
                if (ring_is_zero(l.c[static_cast<std::size_t>(v)])) {
                    continue;
                }
                std::array<int, 3> m = mono;
                m[static_cast<std::size_t>(v)] += 1;
                R add = coeff * l.c[static_cast<std::size_t>(v)];
                auto it = next.find(m);
                if (it == next.end()) {
                    next.emplace(m, std::move(add));
                } else {
                    it->second = it->second + add;
                    if (ring_is_zero(it->second)) {
                        next.erase(it);
                    }
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// Tests whether the product C of classC's linear forms lies in the pencil
/// spanned by the products A, B of the other two classes: returns (lambda:mu)
/// with C = lambda*A + mu*B up to scalar, or nullopt. R must be a field.
template <class R>
std::optional<std::pair<R, R>> pencil_member(const std::vector<ProjLine<R>>& classA,
                                             const std::vector<ProjLine<R>>& classB,
                                             const std::vector<ProjLine<R>>& classC) {
    HomForm<R> A = expand_line_product(classA);
    HomForm<R> B = expand_line_product(classB);
    HomForm<R> C = expand_line_product(classC);

    // Rows (a, b | c) of the linear system lambda*a + mu*b = c, one row per
    // monomial appearing anywhere (map iteration = lexicographic order).
    std::map<std::array<int, 3>, std::array<R, 3>> rows;
    for (const auto& [m, v] : A) {
        rows[m][0] = v;
    }
    for (const auto& [m, v] : B) {
        rows[m][1] = v;
    }
    for (const auto& [m, v] : C) {
        rows[m][2] = v;
    }

    std::vector<std::array<R, 3>> mat;
    mat.reserve(rows.size());
    for (auto& [m, r] : rows) {
        mat.push_back(r);
    }

    // Gaussian elimination for the two unknowns.
    std::size_t pivot_row = 0;
    std::array<std::optional<std::size_t>, 2> pivot_of{};
    for (std::size_t col = 0; col < 2 && pivot_row < mat.size(); ++col) {
        std::size_t found = mat.size();
        for (std::size_t r = pivot_row; r < mat.size(); ++r) {
            if (!ring_is_zero(mat[r][col])) {
                found = r;
                break;
            }
        }
        if (found == mat.size()) {
            continue;
        }
        std::swap(mat[pivot_row], mat[found]);
        R inv = ring_inverse(mat[pivot_row][col]);
        for (auto& x : mat[pivot_row]) {
            x = x * inv;
        }
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (r == pivot_row || ring_is_zero(mat[r][col])) {
                continue;
            }
            R factor = mat[r][col];
            for (std::size_t cidx = 0; cidx < 3; ++cidx) {
                mat[r][cidx] = mat[r][cidx] - factor * mat[pivot_row][cidx];
            }
        }
        pivot_of[col] = pivot_row;
        ++pivot_row;
    }
    // Consistency: all non-pivot rows must have zero rhs.
    for (std::size_t r = pivot_row; r < mat.size(); ++r) {
        if (!ring_is_zero(mat[r][2])) {
            return std::nullopt;
        }
    }
    R lambda{};
    R mu{};
    if (pivot_of[0]) {
        lambda = mat[*pivot_of[0]][2];
    }
    if (pivot_of[1]) {
        mu = mat[*pivot_of[1]][2];
    }
    if (ring_is_zero(lambda) && ring_is_zero(mu)) {
        // C == 0 cannot happen (products of nonzero forms); treat as absent.
        return std::nullopt;
    }
    // Canonical representative of (lambda : mu).
    R scale = ring_inverse(ring_is_zero(lambda) ? mu : lambda);
    return std::make_pair(lambda * scale, mu * scale);
}

}  // namespace tropnet
