#pragma once

#include <array>

#include "tropnet/unipoly.hpp"

namespace tropnet {

/// 3x3 matrix of polynomials in t, row-major.
struct Mat3 {
    std::array<UniPoly, 9> e;

    static Mat3 identity();
    static Mat3 diagonal(const UniPoly& a, const UniPoly& b, const UniPoly& c);

    UniPoly& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
    const UniPoly& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }

    bool operator==(const Mat3& o) const { return e == o.e; }
};

UniPoly mat3_det(const Mat3& m);

/// Classical adjugate (transpose of the cofactor matrix).
/// Satisfies m * adj(m) = adj(m) * m = det(m) * I.
Mat3 mat3_adjugate(const Mat3& m);

/// Cofactor matrix, i.e. the transpose of the classical adjugate. This is the
/// matrix that transports point coordinates compatibly with the
/// line-coordinate transformation m (the dual map of m up to det scaling).
Mat3 mat3_point_transform(const Mat3& m);

Mat3 mat3_transpose(const Mat3& m);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);

/// m * v for a coordinate triple.
std::array<UniPoly, 3> mat3_apply(const Mat3& m, const std::array<UniPoly, 3>& v);

}  // namespace tropnet
