// Acceptance suite: one line per criterion, exit status = number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tropnet/ideal.hpp"
#include "tropnet/latin.hpp"
#include "tropnet/mat3.hpp"
#include "tropnet/multipoly.hpp"
#include "tropnet/nets.hpp"
#include "tropnet/projective.hpp"
#include "tropnet/prover.hpp"
#include "tropnet/quotient.hpp"
#include "tropnet/rational.hpp"
#include "tropnet/tropical.hpp"
#include "tropnet/unipoly.hpp"

using namespace tropnet;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    if (ok) {
        std::printf("criterion %d: pass\n", criterion);
    } else {
        std::printf("criterion %d: FAIL (%s)\n", criterion, detail.c_str());
        ++g_failures;
    }
}

bool criterion_1(std::string& why) {
    UniPoly expected = UniPoly::from_terms(
        {{1, 1}, {2, -1}, {4, -1}, {5, -1}, {9, 2}, {10, -1}, {11, 1}, {12, 1}});
    if (mat3_det(standard_degeneration()) != expected) {
        why = "determinant of the degeneration matrix is off";
        return false;
    }
    return true;
}

bool criterion_2(std::string& why) {
    Mat3 got = mat3_point_transform(standard_degeneration());
    Mat3 want;
    want.at(0, 0) = UniPoly::from_terms({{0, 1}, {8, 1}});
    want.at(0, 1) = UniPoly::from_terms({{2, -1}, {3, -1}, {5, -1}});
    want.at(0, 2) = UniPoly::from_terms({{2, -1}, {7, 1}, {8, 1}});
    want.at(1, 0) = UniPoly::from_terms({{2, -1}, {4, 1}, {9, 1}});
    want.at(1, 1) = UniPoly::from_terms({{1, 1}, {2, -1}, {6, -1}});
    want.at(1, 2) = UniPoly::from_terms({{4, 1}, {6, -2}, {7, 1}});
    want.at(2, 0) = UniPoly::from_terms({{4, -1}, {5, -1}, {7, 1}});
    want.at(2, 1) = UniPoly::from_terms({{4, 1}, {5, -1}, {6, 1}, {7, 1}});
    want.at(2, 2) = UniPoly::from_terms({{1, 1}, {2, -1}, {4, -1}, {5, -1}, {6, 1}, {7, 1}});
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (!(got.at(r, c) == want.at(r, c))) {
                why = "point-transform entry (" + std::to_string(r) + "," + std::to_string(c) +
                      ") is off";
                return false;
            }
        }
    }
    return true;
}

bool criterion_3(std::string& why) {
    Mat3 T = standard_degeneration();
    struct LC {
        int d, e, f;
        TropPoint want;
    };
    const LC lines[] = {{0, 0, 1, {-4, -3}}, {1, 1, 1, {4, 3}}, {1, 0, 0, {0, -1}},
                        {0, 1, 0, {1, 5}},   {1, 0, 1, {-2, 0}}, {0, 1, 1, {3, 2}}};
    for (const auto& l : lines) {
        if (trop_line_center(ProjLine<Rational>::make(l.d, l.e, l.f), T) != l.want) {
            why = "line center mismatch";
            return false;
        }
    }
    struct PC {
        int a, b, c;
        TropPoint want;
    };
    const PC points[] = {{0, 1, 0, {-2, -1}}, {1, 0, 0, {1, 2}}, {0, 1, -1, {4, 3}},
                         {1, 0, -1, {1, 3}}};
    for (const auto& p : points) {
        if (trop_point_location(ProjPoint<Rational>::make(p.a, p.b, p.c), T) != p.want) {
            why = "point location mismatch";
            return false;
        }
    }
    return true;
}

bool criterion_4(std::string& why) {
    Mat3 m;
    m.at(0, 0) = UniPoly::t();
    m.at(0, 1) = UniPoly::monomial(2, 1);
    m.at(0, 2) = UniPoly::monomial(4, 1);
    m.at(1, 0) = UniPoly::monomial(3, 1);
    m.at(1, 1) = UniPoly::t();
    m.at(1, 2) = UniPoly::monomial(2, 1);
    m.at(2, 0) = UniPoly::monomial(2, 1);
    m.at(2, 1) = UniPoly::monomial(5, 1);
    m.at(2, 2) = UniPoly::constant(1);
    struct LC {
        int d, e, f;
        TropPoint want;
    };
    const LC lines[] = {{1, 0, 0, {1, -1}}, {0, 1, -1, {1, 3}}, {0, 0, 1, {-4, -2}},
                        {1, -1, 0, {3, 2}}, {0, 1, 0, {3, 4}},  {1, 0, -1, {-2, -1}}};
    for (const auto& l : lines) {
        if (trop_line_center(ProjLine<Rational>::make(l.d, l.e, l.f), m) != l.want) {
            why = "(3,2) center mismatch";
            return false;
        }
    }
    return true;
}

struct ExpectedClass {
    std::vector<std::array<int, 3>> zero;
    std::vector<std::array<int, 3>> nonzero;
    std::optional<std::array<int, 3>> rep;
};

LinearForm lf(int a, int b, int c) {
    return LinearForm{{Rational(a), Rational(b), Rational(c)}}.normalized();
}

bool class_matches(const SymbolicClass& got, const ExpectedClass& want, std::string& why) {
    std::set<LinearForm> got_zero, got_nonzero, want_zero, want_nonzero;
    for (const auto& z : got.zero) {
        got_zero.insert(z.normalized());
    }
    for (const auto& z : got.nonzero) {
        got_nonzero.insert(z.normalized());
    }
    for (const auto& z : want.zero) {
        want_zero.insert(lf(z[0], z[1], z[2]));
    }
    for (const auto& z : want.nonzero) {
        want_nonzero.insert(lf(z[0], z[1], z[2]));
    }
    if (got_zero != want_zero) {
        why = "zero-constraint set differs";
        return false;
    }
    if (got_nonzero != want_nonzero) {
        why = "nonzero-constraint set differs";
        return false;
    }
    if (want.rep.has_value()) {
        if (!got.unique || !got.representative.has_value()) {
            why = "expected a unique class with a representative";
            return false;
        }
        std::array<Rational, 3> a = *got.representative;
        std::array<Rational, 3> b{Rational((*want.rep)[0]), Rational((*want.rep)[1]),
                                  Rational((*want.rep)[2])};
        if (!triple_proportional(a, b)) {
            why = "representative differs";
            return false;
        }
    } else if (got.unique) {
        why = "class unexpectedly marked unique";
        return false;
    }
    return true;
}

bool criterion_5(std::string& why) {
    PointLineTable table = point_line_table(standard_degeneration());
    if (table.rows.size() != 12) {
        why = "expected 12 rows, got " + std::to_string(table.rows.size());
        return false;
    }
    struct ExpectedRow {
        TropPoint coord;
        std::optional<ExpectedClass> point;
        std::optional<ExpectedClass> line;
    };
    // zero / nonzero triples are coefficients of (a,b,c) for points and
    // (d,e,f) for lines
    std::vector<ExpectedRow> rows{
        {{1, 2},
         ExpectedClass{{}, {{1, 0, 1}, {1, 0, 0}, {1, 1, 1}}, std::nullopt},
         ExpectedClass{{}, {{0, 1, -1}, {1, 0, -1}, {0, 1, 0}}, std::nullopt}},
        {{1, 0}, ExpectedClass{{{1, 0, 0}}, {{0, 0, 1}, {0, 1, 1}}, std::nullopt}, std::nullopt},
        {{0, 2}, ExpectedClass{{{1, 0, 1}}, {{0, 0, 1}, {0, 1, 0}}, std::nullopt}, std::nullopt},
        {{2, 3}, ExpectedClass{{{1, 1, 1}}, {{0, 1, 0}, {0, 1, 1}}, std::nullopt}, std::nullopt},
        {{-2, -1},
         ExpectedClass{{{1, 0, 0}, {0, 0, 1}}, {}, std::array<int, 3>{0, 1, 0}},
         ExpectedClass{{{0, 1, 0}}, {{0, 0, 1}, {1, 0, -1}, {1, 0, 0}}, std::nullopt}},
        {{4, 3},
         ExpectedClass{{{1, 0, 0}, {0, 1, 1}}, {{0, 0, 1}}, std::array<int, 3>{0, 1, -1}},
         ExpectedClass{{{1, 0, -1}, {0, 1, -1}}, {}, std::array<int, 3>{1, 1, 1}}},
        {{1, 3},
         ExpectedClass{{{1, 0, 1}, {0, 1, 0}}, {{0, 0, 1}}, std::array<int, 3>{1, 0, -1}},
         ExpectedClass{{{1, 0, -1}}, {{0, 1, -1}, {0, 0, 1}, {0, 1, 0}}, std::nullopt}},
        {{3, 2},
         std::nullopt,
         ExpectedClass{{{0, 1, -1}}, {{1, 0, -1}, {0, 0, 1}}, std::nullopt}},
        {{0, -1},
         std::nullopt,
         ExpectedClass{{{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}}, std::array<int, 3>{1, 0, 0}}},
        {{-2, 0},
         std::nullopt,
         ExpectedClass{{{1, 0, -1}, {0, 1, 0}}, {{0, 0, 1}}, std::array<int, 3>{1, 0, 1}}},
        {{1, 5},
         std::nullopt,
         ExpectedClass{{{1, 0, 0}, {0, 0, 1}}, {{0, 1, 0}}, std::array<int, 3>{0, 1, 0}}},
        {{-4, -3},
         std::nullopt,
         ExpectedClass{{{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}}, std::array<int, 3>{0, 0, 1}}},
    };
    for (const auto& want : rows) {
        const TableRow* got = nullptr;
        for (const auto& row : table.rows) {
            if (row.coord == want.coord) {
                got = &row;
                break;
            }
        }
        std::string where = "(" + std::to_string(want.coord.x) + "," +
                            std::to_string(want.coord.y) + ")";
        if (got == nullptr) {
            why = "row " + where + " missing";
            return false;
        }
        if (want.point.has_value()) {
            if (got->point_classes.size() != 1 ||
                !class_matches(got->point_classes[0], *want.point, why)) {
                why = "point side of row " + where + ": " + why;
                return false;
            }
        } else if (!got->point_classes.empty()) {
            why = "row " + where + " should be NS on the point side";
            return false;
        }
        if (want.line.has_value()) {
            if (got->line_classes.size() != 1 ||
                !class_matches(got->line_classes[0], *want.line, why)) {
                why = "line side of row " + where + ": " + why;
                return false;
            }
        } else if (!got->line_classes.empty()) {
            why = "row " + where + " should be NS on the line side";
            return false;
        }
    }
    return true;
}

bool criterion_6(std::string& why) {
    const std::vector<TropPoint> coords{{1, 2},  {3, 2}, {-2, -1}, {1, 3},  {0, -1},
                                        {4, 3},  {-2, 0}, {1, 5},   {-4, -3}};
    std::vector<TropPoint> got = centers_through({-2, -1}, coords);
    std::set<TropPoint> got_set(got.begin(), got.end());
    if (got_set != std::set<TropPoint>{{-2, -1}, {-2, 0}, {0, -1}, {-4, -3}}) {
        why = "centers through (-2,-1) are off";
        return false;
    }
    return true;
}

bool criterion_7(std::string& why) {
    if (!enumerate_ols(2).empty()) {
        why = "order 2 should have no orthogonal pair";
        return false;
    }
    std::vector<OLSPair> d3 = enumerate_ols(3);
    if (d3.size() != 1 ||
        d3[0].first.rows() != std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}} ||
        d3[0].second.rows() != std::vector<std::vector<int>>{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}) {
        why = "order 3 classification is off";
        return false;
    }
    std::vector<OLSPair> d4 = enumerate_ols(4);
    if (d4.size() != 1 ||
        d4[0].first.rows() != std::vector<std::vector<int>>{{1, 2, 3, 4},
                                                            {2, 1, 4, 3},
                                                            {3, 4, 1, 2},
                                                            {4, 3, 2, 1}} ||
        d4[0].second.rows() != std::vector<std::vector<int>>{{1, 2, 3, 4},
                                                             {3, 4, 1, 2},
                                                             {4, 3, 2, 1},
                                                             {2, 1, 4, 3}}) {
        why = "order 4 classification is off";
        return false;
    }
    return true;
}

bool criterion_8(std::string& why) {
    NetSkeleton s = build_44_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    auto v = [&](const char* name) {
        return MultiPoly::variable(sys.ring, *sys.ring->index_of(name));
    };
    MultiPoly one = MultiPoly::constant(sys.ring, 1);
    MultiPoly k1 = v("k1"), k2 = v("k2"), k3 = v("k3"), t2 = v("t2"), m1 = v("m1");
    std::vector<MultiPoly> landmarks{
        k2 + m1 * k3 - one,
        k1 * k2 + k3 - one,
        (k3 - one) + t2 * k1 + k1,
        MultiPoly(sys.ring) - one - (k2 - one) * t2 * k1 + k1,
        k2 + m1 - k1 * k2 + k1 - one,
        k1 * k2 + k2 * k3 - k1 - k2,
        k1 * k2 + k1 * t2 - t2 - one,
        k1 * k2 * k3 - one,
    };
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
        bool found = false;
        for (const auto& eq : sys.equations) {
            if (eq.proportional_to(landmarks[i])) {
                found = true;
                break;
            }
        }
        if (!found) {
            why = "landmark equation " + std::to_string(i + 1) + " missing";
            return false;
        }
    }
    return true;
}

bool criterion_9(std::string& why) {
    auto start = std::chrono::steady_clock::now();
    Certificate cert = prove_nonexistence_44();
    NetSkeleton s = build_44_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    if (!verify_certificate(cert, sys).accepted) {
        why = "certificate rejected";
        return false;
    }
    if (!cert.witness.has_value() || !cert.witness->target.is_constant() ||
        cert.witness->target.constant_value() == 0) {
        why = "witness is not a nonzero rational constant";
        return false;
    }
    auto v = [&](const char* name) {
        return MultiPoly::variable(sys.ring, *sys.ring->index_of(name));
    };
    MultiPoly one = MultiPoly::constant(sys.ring, 1);
    MultiPoly k1 = v("k1"), k2 = v("k2");
    CompletionResult comp = complete_basis({sys.ring, sys.equations, {}});
    if (!membership(k2 * k2 - k2 + one, comp).has_value()) {
        why = "k2^2 - k2 + 1 is not recognized in the ideal";
        return false;
    }
    if (!membership(k1 * k1 * 3 - k1 * 3 + one, comp).has_value()) {
        why = "3k1^2 - 3k1 + 1 is not recognized in the ideal";
        return false;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - start);
    if (elapsed.count() >= 30) {
        why = "proof took " + std::to_string(elapsed.count()) + "s";
        return false;
    }
    return true;
}

bool criterion_10(std::string& why) {
    auto [cert, net] = prove_uniqueness_43();
    MultiPoly x = MultiPoly::variable(cert.ring, cert.solved_var);
    MultiPoly one = MultiPoly::constant(cert.ring, 1);
    if (!cert.minimal_poly.has_value() || !(*cert.minimal_poly == x * x - x + one)) {
        why = "minimal polynomial is not k^2 - k + 1";
        return false;
    }

    QuotientElem k = QuotientElem::generator();
    QuotientElem q1 = QuotientElem::from_rational(1);
    QuotientElem q0;
    auto L = [&](QuotientElem a, QuotientElem b, QuotientElem c) {
        return ProjLine<QuotientElem>{{a, b, c}};
    };
    auto P = [&](QuotientElem a, QuotientElem b, QuotientElem c) {
        return ProjPoint<QuotientElem>{{a, b, c}};
    };
    std::vector<std::pair<LineId, ProjLine<QuotientElem>>> lines{
        {{1, 1}, L(q0, q0, q1)},       {{1, 2}, L(q1, q1, q1)},
        {{1, 3}, L(k * k, q1, k)},     {{2, 1}, L(q1, q0, q0)},
        {{2, 2}, L(q0, q1, q0)},       {{2, 3}, L(k, q1, k + q1)},
        {{3, 1}, L(k, q0, q1)},        {{3, 2}, L(q0, q1, q1)},
        {{3, 3}, L(k, q1, k)},         {{4, 1}, L(q1, q0, q1)},
        {{4, 2}, L(q0, q1, k)},        {{4, 3}, L(k, q1, q1)},
    };
    std::vector<std::pair<PointId, ProjPoint<QuotientElem>>> points{
        {{1, 1}, P(q0, q1, q0)},        {{1, 2}, P(q1, q0, q0)},
        {{1, 3}, P(-q1, k, q0)},        {{2, 1}, P(q0, q1, -q1)},
        {{2, 2}, P(q1, q0, -q1)},       {{2, 3}, P(-q1, q1 - k, k)},
        {{3, 1}, P(q0, k, -q1)},        {{3, 2}, P(-q1, q0, k)},
        {{3, 3}, P(q1, q1, -q1)},
    };
    for (const auto& [id, want] : lines) {
        auto it = net.lines.find(id);
        if (it == net.lines.end() || !proj_equal(it->second, want)) {
            why = "line " + line_name(id) + " differs from the reference list";
            return false;
        }
    }
    for (const auto& [id, want] : points) {
        auto it = net.points.find(id);
        if (it == net.points.end() || !proj_equal(it->second, want)) {
            why = "point " + point_name(id) + " differs from the reference list";
            return false;
        }
    }
    if (!verify_realized_net(net).empty()) {
        why = "realized net fails exact verification";
        return false;
    }
    RealizedNet<QuotientElem> conj = net;
    for (auto& [id, l] : conj.lines) {
        for (auto& c : l.c) {
            c = c.conjugate();
        }
    }
    for (auto& [id, p] : conj.points) {
        for (auto& c : p.c) {
            c = c.conjugate();
        }
    }
    if (!cert.automorphism_checked || !verify_realized_net(conj).empty()) {
        why = "conjugate net fails verification";
        return false;
    }
    return true;
}

bool criterion_11(std::string& why) {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> val(-5, 5);

    // adjugate identity, 500 random matrices
    for (int i = 0; i < 500; ++i) {
        Mat3 m;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                UniPoly p;
                for (int e = 0; e <= 2; ++e) {
                    p = p + UniPoly::monomial(e, val(rng));
                }
                m.at(r, c) = p;
            }
        }
        Mat3 prod = mat3_mul(m, mat3_adjugate(m));
        UniPoly det = mat3_det(m);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                if (!(prod.at(r, c) == (r == c ? det : UniPoly()))) {
                    why = "adjugate identity failed";
                    return false;
                }
            }
        }
    }

    // tropical incidence for 1000 random incident pairs
    Mat3 T = standard_degeneration();
    int done = 0;
    while (done < 1000) {
        std::array<Rational, 3> a{val(rng), val(rng), val(rng)};
        std::array<Rational, 3> b{val(rng), val(rng), val(rng)};
        if ((a[0] == 0 && a[1] == 0 && a[2] == 0) ||
            (b[0] == 0 && b[1] == 0 && b[2] == 0)) {
            continue;
        }
        ProjPoint<Rational> p = ProjPoint<Rational>::make(a[0], a[1], a[2]);
        ProjPoint<Rational> q = ProjPoint<Rational>::make(b[0], b[1], b[2]);
        if (proj_equal(p, q)) {
            continue;
        }
        try {
            TropPoint center = trop_line_center(join(p, q), T);
            TropPoint loc = trop_point_location(p, T);
            if (!trop_contains(TropLine{center}, loc)) {
                why = "tropicalized incidence lost";
                return false;
            }
        } catch (const VanishingCoordinateError&) {
            // coordinate degenerations carry no tropical data; skip
        }
        ++done;
    }

    // canonical-form invariance under 100 random symmetries
    OLSPair pair = enumerate_ols(3).front();
    OLSPair canon = canonical_form(pair);
    std::vector<int> idx{0, 1, 2};
    for (int i = 0; i < 100; ++i) {
        std::vector<int> row = idx, col = idx, rel1 = idx, rel2 = idx;
        std::shuffle(row.begin(), row.end(), rng);
        std::shuffle(col.begin(), col.end(), rng);
        std::shuffle(rel1.begin(), rel1.end(), rng);
        std::shuffle(rel2.begin(), rel2.end(), rng);
        auto apply = [&](const LatinSquare& sq, const std::vector<int>& rel) {
            std::vector<std::vector<int>> out(3, std::vector<int>(3));
            for (int r = 0; r < 3; ++r) {
                for (int c = 0; c < 3; ++c) {
                    out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        rel[static_cast<std::size_t>(
                            sq.at(row[static_cast<std::size_t>(r)],
                                  col[static_cast<std::size_t>(c)]) -
                            1)] +
                        1;
                }
            }
            return LatinSquare::from_rows(out);
        };
        OLSPair moved{apply(pair.first, rel1), apply(pair.second, rel2)};
        if (rng() % 2 == 0) {
            std::swap(moved.first, moved.second);
        }
        if (!(canonical_form(moved) == canon)) {
            why = "canonical form not orbit invariant";
            return false;
        }
    }

    // pencil membership of the third line class
    using QLine = ProjLine<Rational>;
    auto pm = pencil_member(std::vector<QLine>{QLine::make(0, 1, -1), QLine::make(0, 1, 1)},
                            std::vector<QLine>{QLine::make(1, 0, 1), QLine::make(1, 0, -1)},
                            std::vector<QLine>{QLine::make(-1, 1, 0), QLine::make(1, 1, 0)});
    if (!pm.has_value() || pm->first != 1 || pm->second != -1) {
        why = "pencil coefficients differ from (1:-1)";
        return false;
    }
    return true;
}

bool criterion_12(std::string& why) {
    // Counting the real and complex roots of det(T) is a floating-point
    // statement and stays out of scope; the exact replacement is that the
    // determinant is not the zero polynomial, so only finitely many t are
    // degenerate.
    if (mat3_det(standard_degeneration()).is_zero()) {
        why = "determinant vanishes identically";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        bool (*run)(std::string&);
    };
    const Entry entries[] = {
        {1, criterion_1}, {2, criterion_2},   {3, criterion_3},   {4, criterion_4},
        {5, criterion_5}, {6, criterion_6},   {7, criterion_7},   {8, criterion_8},
        {9, criterion_9}, {10, criterion_10}, {11, criterion_11}, {12, criterion_12},
    };
    for (const auto& e : entries) {
        std::string why;
        bool ok = false;
        try {
            ok = e.run(why);
        } catch (const std::exception& ex) {
            why = std::string("exception: ") + ex.what();
        }
        report(e.id, ok, why);
    }
    return g_failures;
}
