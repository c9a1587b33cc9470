#include "tropnet/projective.hpp"

namespace tropnet {

void canonicalize_triple(std::array<Rational, 3>& v) {
    for (const auto& x : v) {
        if (x != 0) {
            Rational inv = Rational(1) / x;
            for (auto& y : v) {
                y *= inv;
            }
            return;
        }
    }
}

void canonicalize_triple(std::array<QuotientElem, 3>& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            QuotientElem inv = x.inverse();
            for (auto& y : v) {
                y = y * inv;
            }
            return;
        }
    }
}

namespace {

template <class P>
void canonicalize_poly_triple(std::array<P, 3>& v, const Rational& content0,
                              const Rational& content1, const Rational& content2,
                              bool lead_negative) {
    BigInt num = 0;
    BigInt den = 1;
    for (const Rational& c : {content0, content1, content2}) {
        num = gcd(num, BigInt(numerator(c)));
        den = lcm(den, BigInt(denominator(c)));
    }
    if (num == 0) {
        return;
    }
    Rational scale = Rational(den, num);
    if (lead_negative) {
        scale = -scale;
    }
    for (auto& p : v) {
        p = p * scale;
    }
}

}  // namespace

void canonicalize_triple(std::array<MultiPoly, 3>& v) {
    bool neg = false;
    for (const auto& p : v) {
        if (!p.is_zero()) {
            neg = p.leading_coeff() < 0;
            break;
        }
    }
    canonicalize_poly_triple(v, v[0].content(), v[1].content(), v[2].content(), neg);
}

namespace {

Rational unipoly_content(const UniPoly& p) {
    BigInt num = 0;
    BigInt den = 1;
    for (const auto& [e, c] : p.terms()) {
        num = gcd(num, BigInt(abs(numerator(c))));
        den = lcm(den, BigInt(denominator(c)));
    }
    if (num == 0) {
        return 0;
    }
    return Rational(num, den);
}

}  // namespace

void canonicalize_triple(std::array<UniPoly, 3>& v) {
    bool neg = false;
    for (const auto& p : v) {
        if (!p.is_zero()) {
            neg = p.leading_coeff() < 0;
            break;
        }
    }
    canonicalize_poly_triple(v, unipoly_content(v[0]), unipoly_content(v[1]),
                             unipoly_content(v[2]), neg);
}

namespace {

Rational det3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
              const std::array<Rational, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
           c[0] * (a[1] * b[2] - a[2] * b[1]);
}

Mat3 mat3_from_rationals(const std::array<std::array<Rational, 3>, 3>& rows) {
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            m.at(r, c) = UniPoly::constant(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

std::array<Rational, 3> apply_rational(const Mat3& m, const std::array<Rational, 3>& v) {
    std::array<Rational, 3> out;
    for (int r = 0; r < 3; ++r) {
        Rational s = 0;
        for (int c = 0; c < 3; ++c) {
            s += m.at(r, c).coeff(0) * v[static_cast<std::size_t>(c)];
        }
        out[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

}  // namespace

Mat3 standardize_quadrilateral(const ProjLine<Rational>& l11, const ProjLine<Rational>& l12,
                               const ProjLine<Rational>& l21, const ProjLine<Rational>& l22) {
    const std::array<ProjLine<Rational>, 4> in{l11, l12, l21, l22};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (proj_equal(in[i], in[j])) {
                throw DegenerateConfigurationError("coincident quadrilateral lines");
            }
        }
    }
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<std::array<Rational, 3>> t;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i != skip) {
                t.push_back(in[i].c);
            }
        }
        if (det3(t[0], t[1], t[2]) == 0) {
            throw DegenerateConfigurationError("three quadrilateral lines are concurrent");
        }
    }

    // Solve [d21 d22 d11] * (lambda, mu, nu)^T = d12 (Cramer), then the dual
    // frame map is the adjugate of the column matrix B = [la*d21, mu*d22, nu*d11]:
    // it sends la*d21 -> det(B)*e1 etc., and B*(1,1,1)^T = d12.
    const auto& d11 = l11.c;
    const auto& d12 = l12.c;
    const auto& d21 = l21.c;
    const auto& d22 = l22.c;
    Rational den = det3(d21, d22, d11);
    Rational la = det3(d12, d22, d11) / den;
    Rational mu = det3(d21, d12, d11) / den;
    Rational nu = det3(d21, d22, d12) / den;
    if (la == 0 || mu == 0 || nu == 0) {
        throw InternalError("vanishing frame coefficient despite general position");
    }

    std::array<std::array<Rational, 3>, 3> b_rows;
    for (std::size_t r = 0; r < 3; ++r) {
        b_rows[r] = {la * d21[r], mu * d22[r], nu * d11[r]};
    }
    Mat3 m = mat3_adjugate(mat3_from_rationals(b_rows));

    const std::array<std::array<Rational, 3>, 4> expect{{{0, 0, 1}, {1, 1, 1}, {1, 0, 0}, {0, 1, 0}}};
    for (std::size_t i = 0; i < 4; ++i) {
        auto img = apply_rational(m, in[i].c);
        auto cr = triple_cross(img, expect[i]);
        if (cr[0] != 0 || cr[1] != 0 || cr[2] != 0) {
            throw InternalError("standardization self-check failed");
        }
    }
    return m;
}

}  // namespace tropnet
