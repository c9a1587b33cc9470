#include <doctest.h>

#include <string>

#include "tropnet/errors.hpp"
#include "tropnet/prover.hpp"
#include "tropnet/serialize.hpp"
#include "tropnet/tropical.hpp"

using namespace tropnet;

namespace {

template <class T, class ToJson, class FromJson>
void check_round_trip(const T& value, ToJson to_json, FromJson from_json) {
    Json j = to_json(value);
    std::string text = j.dump(2);
    Json parsed = Json::parse(text);
    T back = from_json(parsed);
    CHECK(to_json(back).dump(2) == text);
}

RealizedNet<Rational> grid_net_32() {
    RealizedNet<Rational> n;
    n.net.k = 3;
    n.net.d = 2;
    n.net.incidence = {{{1, 1}, {1, 1, 2}},
                       {{1, 2}, {1, 2, 1}},
                       {{2, 1}, {2, 1, 1}},
                       {{2, 2}, {2, 2, 2}}};
    n.lines = {{{1, 1}, ProjLine<Rational>::make(1, 0, 0)},
               {{1, 2}, ProjLine<Rational>::make(0, 1, -1)},
               {{2, 1}, ProjLine<Rational>::make(0, 0, 1)},
               {{2, 2}, ProjLine<Rational>::make(1, -1, 0)},
               {{3, 1}, ProjLine<Rational>::make(0, 1, 0)},
               {{3, 2}, ProjLine<Rational>::make(1, 0, -1)}};
    n.points = {{{1, 1}, ProjPoint<Rational>::make(0, 1, 0)},
                {{1, 2}, ProjPoint<Rational>::make(0, 0, 1)},
                {{2, 1}, ProjPoint<Rational>::make(1, 0, 0)},
                {{2, 2}, ProjPoint<Rational>::make(1, 1, 1)}};
    return n;
}

}  // namespace

TEST_CASE("scalar and polynomial round trips") {
    check_round_trip(Rational(-22, 7), rational_to_json, rational_from_json);
    check_round_trip(Rational(0), rational_to_json, rational_from_json);

    UniPoly p = UniPoly::from_terms({{0, Rational(1, 2)}, {3, -1}, {9, 2}});
    check_round_trip(p, unipoly_to_json, unipoly_from_json);
    check_round_trip(UniPoly(), unipoly_to_json, unipoly_from_json);

    check_round_trip(standard_degeneration(), mat3_to_json, mat3_from_json);

    RingPtr ring = make_ring({"k1", "k2", "k3"});
    MultiPoly k1 = MultiPoly::variable(ring, 0);
    MultiPoly k2 = MultiPoly::variable(ring, 1);
    MultiPoly poly = k1 * k2 * 3 - k1 + MultiPoly::constant(ring, Rational(5, 4));
    check_round_trip(poly, multipoly_to_json,
                     [](const Json& j) { return multipoly_from_json(j); });
    CHECK(multipoly_from_json(multipoly_to_json(poly), ring) == poly);

    Json terms = poly_terms_to_json(poly);
    CHECK(poly_terms_from_json(terms, ring) == poly);
    CHECK(poly_terms_to_json(poly_terms_from_json(terms, ring)).dump() == terms.dump());

    check_round_trip(QuotientElem(Rational(1, 3), -2), quotient_to_json, quotient_from_json);
}

TEST_CASE("combinatorial round trips") {
    OLSPair pair = enumerate_ols(4).front();
    check_round_trip(pair.first, square_to_json, square_from_json);
    check_round_trip(pair, ols_to_json, ols_from_json);

    AbstractNet net = net_from_ols({pair.first, pair.second});
    check_round_trip(net, [](const AbstractNet& n) { return net_to_json(n); },
                     abstract_net_from_json);
}

TEST_CASE("realized net round trips") {
    RealizedNet<Rational> n = grid_net_32();
    Json j = net_to_json(n);
    CHECK(j.at("field") == "rational");
    std::string text = j.dump(2);
    RealizedNet<Rational> back = rational_net_from_json(Json::parse(text));
    CHECK(net_to_json(back).dump(2) == text);
    CHECK(verify_realized_net(back).empty());

    auto [cert, qnet] = prove_uniqueness_43();
    Json qj = net_to_json(qnet);
    CHECK(qj.at("field") == "quotient-k2");
    std::string qtext = qj.dump(2);
    RealizedNet<QuotientElem> qback = quotient_net_from_json(Json::parse(qtext));
    CHECK(net_to_json(qback).dump(2) == qtext);
    CHECK(verify_realized_net(qback).empty());

    // a rational reader must refuse the quotient field tag
    CHECK_THROWS_AS(rational_net_from_json(qj), MalformedInputError);
}

TEST_CASE("certificate round trips") {
    Certificate non = prove_nonexistence_44();
    check_round_trip(non, certificate_to_json, certificate_from_json);

    Certificate uni = prove_uniqueness_43().first;
    check_round_trip(uni, certificate_to_json, certificate_from_json);

    // replayed certificates still verify after a serialization round trip
    Certificate back = certificate_from_json(certificate_to_json(non));
    NetSkeleton s = build_44_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    CHECK(verify_certificate(back, sys).accepted);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), MalformedInputError);
    CHECK_THROWS_AS(rational_from_json(Json("abc")), MalformedInputError);
    CHECK_THROWS_AS(unipoly_from_json(Json::parse(R"({"x":"1"})")), MalformedInputError);
    CHECK_THROWS_AS(mat3_from_json(Json::parse("[]")), MalformedInputError);
    CHECK_THROWS_AS(square_from_json(Json::parse("[[1,2],[2,2]]")), MalformedInputError);
    CHECK_THROWS_AS(abstract_net_from_json(Json::parse("{}")), MalformedInputError);

    Json net = net_to_json(grid_net_32());
    net["schema_version"] = 99;
    CHECK_THROWS_AS(rational_net_from_json(net), MalformedInputError);

    Certificate non = prove_nonexistence_44();
    Json cert = certificate_to_json(non);
    cert["schema_version"] = 99;
    CHECK_THROWS_AS(certificate_from_json(cert), MalformedInputError);
}
