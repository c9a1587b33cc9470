#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "tropnet/errors.hpp"
#include "tropnet/prover.hpp"
#include "tropnet/serialize.hpp"

using namespace tropnet;

namespace {

MultiPoly var(const RingPtr& ring, const std::string& name) {
    auto idx = ring->index_of(name);
    REQUIRE(idx.has_value());
    return MultiPoly::variable(ring, *idx);
}

bool contains_proportional(const std::vector<MultiPoly>& polys, const MultiPoly& p) {
    for (const auto& q : polys) {
        if (q.proportional_to(p)) {
            return true;
        }
    }
    return false;
}

bool line_coords_proportional(const ProjLine<MultiPoly>& l, const MultiPoly& a,
                              const MultiPoly& b, const MultiPoly& c) {
    std::array<MultiPoly, 3> other{a, b, c};
    return triple_proportional(l.c, other);
}

bool point_coords_proportional(const ProjPoint<MultiPoly>& p, const MultiPoly& a,
                               const MultiPoly& b, const MultiPoly& c) {
    std::array<MultiPoly, 3> other{a, b, c};
    return triple_proportional(p.c, other);
}

}  // namespace

TEST_CASE("skeleton of the hypothetical (4,4) configuration") {
    NetSkeleton s = build_44_skeleton();
    RingPtr ring = s.ring;
    MultiPoly one = MultiPoly::constant(ring, 1);

    CHECK(s.fixed_lines.size() == 6);
    CHECK(proj_equal(s.fixed_lines.at({1, 1}), ProjLine<Rational>::make(0, 0, 1)));
    CHECK(proj_equal(s.fixed_lines.at({1, 2}), ProjLine<Rational>::make(1, 1, 1)));
    CHECK(proj_equal(s.fixed_lines.at({2, 1}), ProjLine<Rational>::make(1, 0, 0)));
    CHECK(proj_equal(s.fixed_lines.at({2, 2}), ProjLine<Rational>::make(0, 1, 0)));
    CHECK(proj_equal(s.fixed_lines.at({3, 1}), ProjLine<Rational>::make(1, 0, 1)));
    CHECK(proj_equal(s.fixed_lines.at({3, 2}), ProjLine<Rational>::make(0, 1, 1)));

    CHECK(s.fixed_points.size() == 4);
    CHECK(proj_equal(s.fixed_points.at({1, 1}), ProjPoint<Rational>::make(0, 1, 0)));
    CHECK(proj_equal(s.fixed_points.at({2, 2}), ProjPoint<Rational>::make(1, 0, -1)));

    REQUIRE(s.parametric_lines.size() == 3);
    MultiPoly k1 = var(ring, "k1"), k2 = var(ring, "k2"), k3 = var(ring, "k3");
    CHECK(line_coords_proportional(s.parametric_lines.at({4, 1}).first, one, MultiPoly(ring),
                                   k1));
    CHECK(line_coords_proportional(s.parametric_lines.at({4, 3}).first, k2, one, one));
    CHECK(line_coords_proportional(s.parametric_lines.at({4, 4}).first, one, k3, one));

    REQUIRE(s.parametric_points.size() == 6);
    MultiPoly s1 = var(ring, "s1"), s2 = var(ring, "s2");
    MultiPoly t1 = var(ring, "t1"), t2 = var(ring, "t2");
    MultiPoly m1 = var(ring, "m1"), m2 = var(ring, "m2");
    CHECK(point_coords_proportional(s.parametric_points.at({2, 3}).first, one, s1,
                                    MultiPoly(ring) - one - s1));
    CHECK(point_coords_proportional(s.parametric_points.at({2, 4}).first, one, s2,
                                    MultiPoly(ring) - one - s2));
    CHECK(point_coords_proportional(s.parametric_points.at({3, 1}).first, MultiPoly(ring), one,
                                    t1));
    CHECK(point_coords_proportional(s.parametric_points.at({3, 3}).first, one, m1,
                                    MultiPoly(ring) - one));
    CHECK(point_coords_proportional(s.parametric_points.at({4, 1}).first, MultiPoly(ring), one,
                                    t2));
    CHECK(point_coords_proportional(s.parametric_points.at({4, 4}).first, one, m2,
                                    MultiPoly(ring) - one));

    CHECK(contains_proportional(s.nonvanishing, k1));
    CHECK(contains_proportional(s.nonvanishing, k1 - one));
    CHECK(contains_proportional(s.nonvanishing, m1 - m2));
    CHECK(contains_proportional(s.nonvanishing, s1 - s2));
}

TEST_CASE("skeleton of the (4,3) configuration") {
    NetSkeleton s = build_43_skeleton();
    RingPtr ring = s.ring;
    CHECK(ring->arity() == 3);
    MultiPoly one = MultiPoly::constant(ring, 1);
    MultiPoly k1 = var(ring, "k1"), k2 = var(ring, "k2"), k3 = var(ring, "k3");

    CHECK(s.fixed_lines.count({3, 2}) == 1);
    CHECK(s.fixed_lines.count({4, 1}) == 1);
    CHECK(proj_equal(s.fixed_points.at({3, 3}), ProjPoint<Rational>::make(1, 1, -1)));

    REQUIRE(s.parametric_lines.size() == 3);
    CHECK(line_coords_proportional(s.parametric_lines.at({3, 1}).first, one, MultiPoly(ring),
                                   k1));
    CHECK(line_coords_proportional(s.parametric_lines.at({3, 3}).first, one, k3, one));
    CHECK(line_coords_proportional(s.parametric_lines.at({4, 3}).first, k2, one, one));
    CHECK(s.parametric_points.empty());
}

TEST_CASE("constraint generation for the (4,4) system") {
    NetSkeleton s = build_44_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    RingPtr ring = sys.ring;
    MultiPoly one = MultiPoly::constant(ring, 1);
    MultiPoly k1 = var(ring, "k1"), k2 = var(ring, "k2"), k3 = var(ring, "k3");
    MultiPoly t2 = var(ring, "t2"), m1 = var(ring, "m1");

    std::vector<MultiPoly> landmarks{
        k3 * m1 + k2 - one,
        k1 * k2 + k3 - one,
        k1 * t2 + k1 + k3 - one,
        k1 * k2 * t2 - k1 * t2 - k1 + one,
        k1 * k2 - k1 - k2 - m1 + one,
        k1 * k2 + k2 * k3 - k1 - k2,
        k1 * k2 + k1 * t2 - t2 - one,
        k1 * k2 * k3 - one,
    };
    for (const auto& p : landmarks) {
        CHECK(contains_proportional(sys.equations, p));
    }
    CHECK(sys.equations.size() == sys.tags.size());
    CHECK(sys.all_lines.size() == 16);
    CHECK(sys.all_points.size() == 16);
}

TEST_CASE("constraint generation for the (4,3) system") {
    NetSkeleton s = build_43_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    RingPtr ring = sys.ring;
    MultiPoly one = MultiPoly::constant(ring, 1);
    MultiPoly k1 = var(ring, "k1"), k2 = var(ring, "k2"), k3 = var(ring, "k3");

    CHECK(contains_proportional(sys.equations, k2 * k3 - one));
    CHECK(contains_proportional(sys.equations, k1 * k3 - k3 + one));
    CHECK(contains_proportional(sys.equations, k1 * k2 - one));
    CHECK(contains_proportional(sys.equations, k1 * k3 - k1 + one));
    CHECK(sys.all_lines.size() == 12);
    CHECK(sys.all_points.size() == 9);
}

TEST_CASE("nonexistence certificate for the (4,4) system") {
    Certificate cert = prove_nonexistence_44();
    CHECK(cert.kind == CertificateKind::Nonexistence);
    CHECK(cert.used_nonvanishing.empty());
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->target.is_constant());
    CHECK(cert.witness->target.constant_value() == 2);

    NetSkeleton s = build_44_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    VerificationResult r = verify_certificate(cert, sys);
    CHECK(r.accepted);

    // determinism: a second run produces byte-identical output
    Certificate again = prove_nonexistence_44();
    CHECK(certificate_to_json(cert).dump(2) == certificate_to_json(again).dump(2));

    // tampering with any cofactor must be caught
    Certificate bad = cert;
    REQUIRE(!bad.steps.empty());
    REQUIRE(!bad.steps[0].cofactors.empty());
    bad.steps[0].cofactors[0].second =
        bad.steps[0].cofactors[0].second + MultiPoly::constant(bad.ring, 1);
    VerificationResult rejected = verify_certificate(bad, sys);
    CHECK(!rejected.accepted);
    REQUIRE(rejected.failing_step.has_value());
    CHECK(*rejected.failing_step == 0);
}

TEST_CASE("uniqueness certificate for the (4,3) system") {
    auto [cert, net] = prove_uniqueness_43();
    CHECK(cert.kind == CertificateKind::Uniqueness);
    CHECK(cert.automorphism_checked);
    REQUIRE(cert.minimal_poly.has_value());

    MultiPoly x = MultiPoly::variable(cert.ring, cert.solved_var);
    MultiPoly one = MultiPoly::constant(cert.ring, 1);
    CHECK(*cert.minimal_poly == x * x - x + one);
    CHECK(cert.ring->vars()[cert.solved_var] == "k2");
    CHECK(cert.solved.at("k1") == std::array<Rational, 2>{1, -1});
    CHECK(cert.solved.at("k3") == std::array<Rational, 2>{1, -1});

    NetSkeleton s = build_43_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    CHECK(verify_certificate(cert, sys).accepted);

    CHECK(net.lines.size() == 12);
    CHECK(net.points.size() == 9);
    CHECK(verify_realized_net(net).empty());

    QuotientElem k = QuotientElem::generator();
    QuotientElem qone = QuotientElem::from_rational(1);
    CHECK(proj_equal(net.lines.at({1, 3}), ProjLine<QuotientElem>{{k * k, qone, k}}));
    CHECK(proj_equal(net.points.at({1, 3}),
                     ProjPoint<QuotientElem>{{-qone, k, QuotientElem()}}));

    // the conjugate realization is also a net
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
    CHECK(verify_realized_net(conj).empty());
}

TEST_CASE("a tiny step budget is reported, not absorbed") {
    CHECK_THROWS_AS(prove_nonexistence_44(1), ResourceLimitError);
}
