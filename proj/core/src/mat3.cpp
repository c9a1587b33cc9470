#include "tropnet/mat3.hpp"

namespace tropnet {

Mat3 Mat3::identity() {
    return diagonal(UniPoly::constant(1), UniPoly::constant(1), UniPoly::constant(1));
}

Mat3 Mat3::diagonal(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
    Mat3 m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    return m;
}

namespace {

// 2x2 minor of m obtained by deleting row r and column c.
UniPoly minor_det(const Mat3& m, int r, int c) {
    int r0 = (r == 0) ? 1 : 0;
    int r1 = (r == 2) ? 1 : 2;
    int c0 = (c == 0) ? 1 : 0;
    int c1 = (c == 2) ? 1 : 2;
    return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
}

UniPoly cofactor(const Mat3& m, int r, int c) {
    UniPoly d = minor_det(m, r, c);
    return ((r + c) % 2 == 0) ? d : -d;
}

}  // namespace

UniPoly mat3_det(const Mat3& m) {
    return m.at(0, 0) * cofactor(m, 0, 0) + m.at(0, 1) * cofactor(m, 0, 1) +
           m.at(0, 2) * cofactor(m, 0, 2);
}

Mat3 mat3_adjugate(const Mat3& m) {
    Mat3 a;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            a.at(r, c) = cofactor(m, c, r);
        }
    }
    return a;
}

Mat3 mat3_point_transform(const Mat3& m) {
    Mat3 a;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            a.at(r, c) = cofactor(m, r, c);
        }
    }
    return a;
}

Mat3 mat3_transpose(const Mat3& m) {
    Mat3 t;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            t.at(r, c) = m.at(c, r);
        }
    }
    return t;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 p;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            p.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c) + a.at(r, 2) * b.at(2, c);
        }
    }
    return p;
}

std::array<UniPoly, 3> mat3_apply(const Mat3& m, const std::array<UniPoly, 3>& v) {
    std::array<UniPoly, 3> out;
    for (int r = 0; r < 3; ++r) {
        out[static_cast<std::size_t>(r)] =
            m.at(r, 0) * v[0] + m.at(r, 1) * v[1] + m.at(r, 2) * v[2];
    }
    return out;
}

}  // namespace tropnet
