#include <doctest.h>

#include <random>

#include "tropnet/errors.hpp"
#include "tropnet/multipoly.hpp"
#include "tropnet/projective.hpp"

using namespace tropnet;

namespace {

using QLine = ProjLine<Rational>;
using QPoint = ProjPoint<Rational>;

QLine apply_const_mat(const Mat3& m, const QLine& l) {
    std::array<UniPoly, 3> v{UniPoly::constant(l.c[0]), UniPoly::constant(l.c[1]),
                             UniPoly::constant(l.c[2])};
    auto w = mat3_apply(m, v);
    return QLine::make(w[0].coeff(0), w[1].coeff(0), w[2].coeff(0));
}

Mat3 random_invertible(std::mt19937& rng) {
    std::uniform_int_distribution<int> val(-4, 4);
    for (;;) {
        Mat3 m;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                m.at(r, c) = UniPoly::constant(val(rng));
            }
        }
        if (!mat3_det(m).is_zero()) {
            return m;
        }
    }
}

}  // namespace

TEST_CASE("incidence, meet and join on concrete coordinates") {
    QPoint p = QPoint::make(1, 1, 1);
    CHECK(incident(p, QLine::make(1, 1, -2)));
    CHECK(!incident(p, QLine::make(1, 0, 0)));

    CHECK(proj_equal(meet(QLine::make(0, 0, 1), QLine::make(1, 1, 1)),
                     QPoint::make(1, -1, 0)));
    CHECK(proj_equal(join(QPoint::make(0, 1, 0), QPoint::make(0, 0, 1)),
                     QLine::make(1, 0, 0)));
    CHECK_THROWS_AS(meet(QLine::make(1, 2, 3), QLine::make(2, 4, 6)),
                    CoincidentLinesError);
    CHECK_THROWS_AS(join(QPoint::make(1, 0, -1), QPoint::make(-2, 0, 2)),
                    CoincidentPointsError);
}

TEST_CASE("meet over a polynomial ring") {
    RingPtr ring = make_ring({"k1", "k2", "k3"});
    auto cst = [&](int v) { return MultiPoly::constant(ring, v); };
    MultiPoly k2 = MultiPoly::variable(ring, 1);
    auto l21 = ProjLine<MultiPoly>{{cst(0), cst(0), cst(1)}};
    auto l43 = ProjLine<MultiPoly>{{k2, cst(1), cst(1)}};
    auto p = meet(l21, l43);
    auto expected = ProjPoint<MultiPoly>::make(cst(1), MultiPoly(ring) - k2, cst(0));
    CHECK(proj_equal(p, expected));
}

TEST_CASE("projective operations are scalar invariant") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-6, 6);
    std::uniform_int_distribution<int> num(1, 5);
    for (int i = 0; i < 200; ++i) {
        Rational a = val(rng), b = val(rng), c = val(rng);
        if (a == 0 && b == 0 && c == 0) {
            continue;
        }
        Rational s(num(rng), num(rng));
        CHECK(proj_equal(QPoint::make(a, b, c), QPoint::make(s * a, s * b, s * c)));
        CHECK(proj_equal(QLine::make(a, b, c), QLine::make(s * a, s * b, s * c)));
    }
}

TEST_CASE("join and meet are dual through shared incidences") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int i = 0; i < 200; ++i) {
        Rational a1 = val(rng), a2 = val(rng), a3 = val(rng);
        Rational b1 = val(rng), b2 = val(rng), b3 = val(rng);
        if ((a1 == 0 && a2 == 0 && a3 == 0) || (b1 == 0 && b2 == 0 && b3 == 0)) {
            continue;
        }
        QPoint p = QPoint::make(a1, a2, a3);
        QPoint q = QPoint::make(b1, b2, b3);
        if (proj_equal(p, q)) {
            continue;
        }
        QLine l = join(p, q);
        CHECK(incident(p, l));
        CHECK(incident(q, l));
    }
}

TEST_CASE("standardize_quadrilateral fixes the reference frame") {
    QLine l11 = QLine::make(0, 0, 1);
    QLine l12 = QLine::make(1, 1, 1);
    QLine l21 = QLine::make(1, 0, 0);
    QLine l22 = QLine::make(0, 1, 0);

    Mat3 id_case = standardize_quadrilateral(l11, l12, l21, l22);
    CHECK(proj_equal(apply_const_mat(id_case, l11), l11));
    CHECK(proj_equal(apply_const_mat(id_case, l12), l12));
    CHECK(proj_equal(apply_const_mat(id_case, l21), l21));
    CHECK(proj_equal(apply_const_mat(id_case, l22), l22));

    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        Mat3 m = random_invertible(rng);
        QLine a = apply_const_mat(m, l11);
        QLine b = apply_const_mat(m, l12);
        QLine c = apply_const_mat(m, l21);
        QLine d = apply_const_mat(m, l22);
        Mat3 back = standardize_quadrilateral(a, b, c, d);
        CHECK(proj_equal(apply_const_mat(back, a), l11));
        CHECK(proj_equal(apply_const_mat(back, b), l12));
        CHECK(proj_equal(apply_const_mat(back, c), l21));
        CHECK(proj_equal(apply_const_mat(back, d), l22));
    }
}

TEST_CASE("standardize_quadrilateral rejects degenerate input") {
    // three concurrent lines through (0:0:1)
    CHECK_THROWS_AS(standardize_quadrilateral(QLine::make(1, 0, 0), QLine::make(0, 1, 0),
                                              QLine::make(1, 1, 0), QLine::make(0, 0, 1)),
                    DegenerateConfigurationError);
    // two coincident lines
    CHECK_THROWS_AS(standardize_quadrilateral(QLine::make(1, 0, 0), QLine::make(2, 0, 0),
                                              QLine::make(0, 1, 0), QLine::make(0, 0, 1)),
                    DegenerateConfigurationError);
}

TEST_CASE("pencil membership of line-class products") {
    std::vector<QLine> classA{QLine::make(0, 1, -1), QLine::make(0, 1, 1)};
    std::vector<QLine> classB{QLine::make(1, 0, 1), QLine::make(1, 0, -1)};
    std::vector<QLine> classC{QLine::make(-1, 1, 0), QLine::make(1, 1, 0)};

    auto r = pencil_member(classA, classB, classC);
    REQUIRE(r.has_value());
    CHECK(r->first == Rational(1));
    CHECK(r->second == Rational(-1));

    auto same = pencil_member(classA, classB, classA);
    REQUIRE(same.has_value());
    CHECK(same->first == Rational(1));
    CHECK(same->second == Rational(0));

    std::vector<QLine> unrelated{QLine::make(1, 2, 3), QLine::make(3, 1, 2)};
    CHECK(!pencil_member(classA, classB, unrelated).has_value());
}
