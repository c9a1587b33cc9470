#include "tropnet/serialize.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "tropnet/errors.hpp"

namespace tropnet {

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) {
        throw MalformedInputError(what);
    }
}

std::string id_key(char prefix, std::pair<int, int> id) {
    return prefix + std::to_string(id.first) + std::to_string(id.second);
}

std::pair<int, int> parse_id(const std::string& key, char prefix) {
    expect(key.size() == 3 && key[0] == prefix && key[1] >= '1' && key[1] <= '9' &&
               key[2] >= '1' && key[2] <= '9',
           "bad id key: " + key);
    return {key[1] - '0', key[2] - '0'};
}

std::string join_exponents(const ExpVec& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(e[i]);
    }
    return out;
}

ExpVec split_exponents(const std::string& key, std::size_t arity) {
    ExpVec e;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            expect(used == part.size() && v >= 0, "bad exponent: " + part);
            e.push_back(v);
        } catch (const std::exception&) {
            throw MalformedInputError("bad exponent key: " + key);
        }
    }
    expect(e.size() == arity, "exponent key arity mismatch: " + key);
    return e;
}

template <class R>
Json triple_to_json(const std::array<R, 3>& c, Json (*elem)(const R&)) {
    Json out = Json::array();
    for (const auto& x : c) {
        out.push_back(elem(x));
    }
    return out;
}

Json net_header(const AbstractNet& n, const char* field) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["k"] = n.k;
    out["d"] = n.d;
    out["field"] = field;
    Json inc;
    for (const auto& [pid, classes] : n.incidence) {
        inc[id_key('p', pid)] = classes;
    }
    out["incidence"] = std::move(inc);
    return out;
}

AbstractNet net_base_from_json(const Json& j) {
    expect(j.is_object() && j.contains("schema_version") && j.contains("k") &&
               j.contains("d") && j.contains("incidence"),
           "net object missing required fields");
    expect(j["schema_version"].is_number_integer() &&
               j["schema_version"].get<int>() == kSchemaVersion,
           "unsupported net schema version");
    AbstractNet n;
    expect(j["k"].is_number_integer() && j["d"].is_number_integer(), "bad net k/d");
    n.k = j["k"].get<int>();
    n.d = j["d"].get<int>();
    expect(j["incidence"].is_object(), "net incidence must be an object");
    for (const auto& [key, val] : j["incidence"].items()) {
        PointId pid = parse_id(key, 'p');
        expect(val.is_array() && val.size() == static_cast<std::size_t>(n.k),
               "incidence entry of wrong length: " + key);
        std::vector<int> classes;
        for (const auto& x : val) {
            expect(x.is_number_integer(), "incidence entries must be integers");
            classes.push_back(x.get<int>());
        }
        n.incidence.emplace(pid, std::move(classes));
    }
    return n;
}

template <class R>
void read_coordinates(const Json& j, RealizedNet<R>& n, R (*elem)(const Json&)) {
    expect(j.contains("lines") && j["lines"].is_object() && j.contains("points") &&
               j["points"].is_object(),
           "realized net requires lines and points objects");
    for (const auto& [key, val] : j["lines"].items()) {
        LineId lid = parse_id(key, 'l');
        expect(val.is_array() && val.size() == 3, "line triple of wrong length: " + key);
        n.lines.emplace(lid, ProjLine<R>::make(elem(val[0]), elem(val[1]), elem(val[2])));
    }
    for (const auto& [key, val] : j["points"].items()) {
        PointId pid = parse_id(key, 'p');
        expect(val.is_array() && val.size() == 3, "point triple of wrong length: " + key);
        n.points.emplace(pid, ProjPoint<R>::make(elem(val[0]), elem(val[1]), elem(val[2])));
    }
}

Json step_to_json(const CertificateStep& s) {
    Json out;
    out["target"] = poly_terms_to_json(s.target);
    Json cof = Json::array();
    for (const auto& [idx, q] : s.cofactors) {
        cof.push_back(Json::array({idx, poly_terms_to_json(q)}));
    }
    out["cofactors"] = std::move(cof);
    return out;
}

CertificateStep step_from_json(const Json& j, const RingPtr& ring) {
    expect(j.is_object() && j.contains("target") && j.contains("cofactors") &&
               j["cofactors"].is_array(),
           "bad certificate step");
    CertificateStep s;
    s.target = poly_terms_from_json(j["target"], ring);
    for (const auto& c : j["cofactors"]) {
        expect(c.is_array() && c.size() == 2 && c[0].is_number_unsigned(),
               "bad step cofactor");
        s.cofactors.emplace_back(c[0].get<std::size_t>(), poly_terms_from_json(c[1], ring));
    }
    return s;
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
    expect(j.is_string(), "rational must be a string");
    return parse_rational(j.get<std::string>());
}

Json unipoly_to_json(const UniPoly& p) {
    Json out = Json::object();
    for (const auto& [exp, coeff] : p.terms()) {
        out[std::to_string(exp)] = format_rational(coeff);
    }
    return out;
}

UniPoly unipoly_from_json(const Json& j) {
    expect(j.is_object(), "unipoly must be an object");
    UniPoly p;
    for (const auto& [key, val] : j.items()) {
        long exp = 0;
        try {
            std::size_t used = 0;
            exp = std::stol(key, &used);
            expect(used == key.size(), "bad exponent: " + key);
        } catch (const std::exception&) {
            throw MalformedInputError("bad unipoly exponent: " + key);
        }
        expect(exp >= 0, "negative unipoly exponent: " + key);
        p = p + UniPoly::monomial(exp, rational_from_json(val));
    }
    return p;
}

Json mat3_to_json(const Mat3& m) {
    Json out = Json::array();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out.push_back(unipoly_to_json(m.at(r, c)));
        }
    }
    return out;
}

Mat3 mat3_from_json(const Json& j) {
    expect(j.is_array() && j.size() == 9, "matrix must be a 9-element row-major array");
    Mat3 m;
    for (int i = 0; i < 9; ++i) {
        m.at(i / 3, i % 3) = unipoly_from_json(j[static_cast<std::size_t>(i)]);
    }
    return m;
}

Json poly_terms_to_json(const MultiPoly& p) {
    Json out = Json::object();
    for (const auto& [exp, coeff] : p.terms()) {
        out[join_exponents(exp)] = format_rational(coeff);
    }
    return out;
}

MultiPoly poly_terms_from_json(const Json& j, const RingPtr& ring) {
    expect(j.is_object(), "polynomial terms must be an object");
    MultiPoly p(ring);
    for (const auto& [key, val] : j.items()) {
        p.add_term(split_exponents(key, ring->arity()), rational_from_json(val));
    }
    return p;
}

Json multipoly_to_json(const MultiPoly& p) {
    expect(p.ring() != nullptr, "cannot serialize a ringless polynomial");
    Json out;
    out["vars"] = p.ring()->vars();
    out["terms"] = poly_terms_to_json(p);
    return out;
}

MultiPoly multipoly_from_json(const Json& j, const RingPtr& ring) {
    expect(j.is_object() && j.contains("vars") && j.contains("terms"),
           "multipoly must carry vars and terms");
    expect(j["vars"].get<std::vector<std::string>>() == ring->vars(),
           "variable list does not match the expected ring");
    return poly_terms_from_json(j["terms"], ring);
}

MultiPoly multipoly_from_json(const Json& j) {
    expect(j.is_object() && j.contains("vars") && j.contains("terms"),
           "multipoly must carry vars and terms");
    return poly_terms_from_json(j["terms"],
                                make_ring(j["vars"].get<std::vector<std::string>>()));
}

Json square_to_json(const LatinSquare& s) {
    Json out = Json::array();
    for (const auto& row : s.rows()) {
        out.push_back(row);
    }
    return out;
}

LatinSquare square_from_json(const Json& j) {
    expect(j.is_array(), "square must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        expect(r.is_array(), "square rows must be arrays");
        std::vector<int> row;
        for (const auto& x : r) {
            expect(x.is_number_integer(), "square entries must be integers");
            row.push_back(x.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return LatinSquare::from_rows(rows);
}

Json ols_to_json(const OLSPair& p) {
    Json out;
    out["first"] = square_to_json(p.first);
    out["second"] = square_to_json(p.second);
    return out;
}

OLSPair ols_from_json(const Json& j) {
    expect(j.is_object() && j.contains("first") && j.contains("second"),
           "pair must carry first and second squares");
    return {square_from_json(j["first"]), square_from_json(j["second"])};
}

Json quotient_to_json(const QuotientElem& q) {
    return Json::array({format_rational(q.c0()), format_rational(q.c1())});
}

QuotientElem quotient_from_json(const Json& j) {
    expect(j.is_array() && j.size() == 2, "quotient element must be a 2-element array");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json net_to_json(const AbstractNet& n) { return net_header(n, "abstract"); }

Json net_to_json(const RealizedNet<Rational>& n) {
    Json out = net_header(n.net, "rational");
    Json lines = Json::object();
    for (const auto& [lid, l] : n.lines) {
        lines[id_key('l', lid)] = triple_to_json<Rational>(l.c, rational_to_json);
    }
    Json points = Json::object();
    for (const auto& [pid, p] : n.points) {
        points[id_key('p', pid)] = triple_to_json<Rational>(p.c, rational_to_json);
    }
    out["lines"] = std::move(lines);
    out["points"] = std::move(points);
    return out;
}

Json net_to_json(const RealizedNet<QuotientElem>& n) {
    Json out = net_header(n.net, "quotient-k2");
    Json lines = Json::object();
    for (const auto& [lid, l] : n.lines) {
        lines[id_key('l', lid)] = triple_to_json<QuotientElem>(l.c, quotient_to_json);
    }
    Json points = Json::object();
    for (const auto& [pid, p] : n.points) {
        points[id_key('p', pid)] = triple_to_json<QuotientElem>(p.c, quotient_to_json);
    }
    out["lines"] = std::move(lines);
    out["points"] = std::move(points);
    return out;
}

AbstractNet abstract_net_from_json(const Json& j) { return net_base_from_json(j); }

RealizedNet<Rational> rational_net_from_json(const Json& j) {
    expect(j.contains("field") && j["field"] == "rational",
           "expected a net over the rational field");
    RealizedNet<Rational> n;
    n.net = net_base_from_json(j);
    read_coordinates<Rational>(j, n, rational_from_json);
    return n;
}

RealizedNet<QuotientElem> quotient_net_from_json(const Json& j) {
    expect(j.contains("field") && j["field"] == "quotient-k2",
           "expected a net over the quotient field");
    RealizedNet<QuotientElem> n;
    n.net = net_base_from_json(j);
    read_coordinates<QuotientElem>(j, n, quotient_from_json);
    return n;
}

Json certificate_to_json(const Certificate& c) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = c.kind == CertificateKind::Nonexistence ? "nonexistence" : "uniqueness";
    out["params"] = c.ring->vars();
    Json gens = Json::array();
    for (const auto& g : c.generators) {
        gens.push_back(poly_terms_to_json(g));
    }
    out["generators"] = std::move(gens);
    out["used_nonvanishing"] = c.used_nonvanishing;
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        steps.push_back(step_to_json(s));
    }
    out["steps"] = std::move(steps);
    out["witness"] = c.witness ? step_to_json(*c.witness) : Json(nullptr);
    out["minimal_poly"] = c.minimal_poly ? poly_terms_to_json(*c.minimal_poly) : Json(nullptr);
    out["solved_var"] = c.solved_var;
    Json solved = Json::object();
    for (const auto& [name, ab] : c.solved) {
        solved[name] = Json::array({format_rational(ab[0]), format_rational(ab[1])});
    }
    out["solved"] = std::move(solved);
    out["automorphism_checked"] = c.automorphism_checked;
    return out;
}

Certificate certificate_from_json(const Json& j) {
    expect(j.is_object() && j.contains("schema_version") && j.contains("kind") &&
               j.contains("params") && j.contains("generators") && j.contains("steps"),
           "certificate missing required fields");
    expect(j["schema_version"].is_number_integer() &&
               j["schema_version"].get<int>() == kSchemaVersion,
           "unsupported certificate schema version");
    Certificate c;
    std::string kind = j["kind"].get<std::string>();
    if (kind == "nonexistence") {
        c.kind = CertificateKind::Nonexistence;
    } else if (kind == "uniqueness") {
        c.kind = CertificateKind::Uniqueness;
    } else {
        throw MalformedInputError("unknown certificate kind: " + kind);
    }
    c.ring = make_ring(j["params"].get<std::vector<std::string>>());
    for (const auto& g : j["generators"]) {
        c.generators.push_back(poly_terms_from_json(g, c.ring));
    }
    if (j.contains("used_nonvanishing")) {
        c.used_nonvanishing = j["used_nonvanishing"].get<std::vector<std::size_t>>();
    }
    for (const auto& s : j["steps"]) {
        c.steps.push_back(step_from_json(s, c.ring));
    }
    if (j.contains("witness") && !j["witness"].is_null()) {
        c.witness = step_from_json(j["witness"], c.ring);
    }
    if (j.contains("minimal_poly") && !j["minimal_poly"].is_null()) {
        c.minimal_poly = poly_terms_from_json(j["minimal_poly"], c.ring);
    }
    if (j.contains("solved_var")) {
        expect(j["solved_var"].is_number_unsigned(), "bad solved_var");
        c.solved_var = j["solved_var"].get<std::size_t>();
    }
    if (j.contains("solved")) {
        for (const auto& [name, ab] : j["solved"].items()) {
            expect(ab.is_array() && ab.size() == 2, "bad solved entry: " + name);
            c.solved[name] = {rational_from_json(ab[0]), rational_from_json(ab[1])};
        }
    }
    if (j.contains("automorphism_checked")) {
        c.automorphism_checked = j["automorphism_checked"].get<bool>();
    }
    return c;
}

}  // namespace tropnet
