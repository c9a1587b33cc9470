// Command-line front end: enumeration, net construction and verification,
// tropicalization tables, certified proofs, certificate replay, and figure
// output. Exit codes: 0 success, 1 a checked property fails, 2 input error,
// 3 internal error or exhausted step budget.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropnet/errors.hpp"
#include "tropnet/ideal.hpp"
#include "tropnet/latin.hpp"
#include "tropnet/nets.hpp"
#include "tropnet/prover.hpp"
#include "tropnet/serialize.hpp"
#include "tropnet/svg.hpp"
#include "tropnet/tropical.hpp"

namespace {

using namespace tropnet;

long step_budget() {
    if (const char* env = std::getenv("TROPNET_STEP_BUDGET")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw MalformedInputError("TROPNET_STEP_BUDGET must be a positive integer");
    }
    return 100000;
}

/// Accumulated over every input the command consumed (FNV-1a 64).
struct Digest {
    std::uint64_t h = 1469598103934665603ULL;

    void feed(const std::string& bytes) {
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    }
    std::string hex() const {
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

struct Report {
    std::string command;
    Digest digest;
    std::string outcome = "pass";
    std::vector<std::string> artifacts;
    Json payload = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double wall_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
    Json to_json() const {
        Json out;
        out["command"] = command;
        out["inputs_digest"] = digest.hex();
        out["outcome"] = outcome;
        out["artifacts"] = artifacts;
        out["wall_time_ms"] = wall_ms();
        for (const auto& [key, val] : payload.items()) {
            out[key] = val;
        }
        return out;
    }
};

std::string read_file(Report& rep, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MalformedInputError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    rep.digest.feed(path);
    rep.digest.feed(bytes);
    return bytes;
}

Json load_json(Report& rep, const std::string& path) {
    std::string bytes = read_file(rep, path);
    Json j = Json::parse(bytes, nullptr, false);
    if (j.is_discarded()) {
        throw MalformedInputError("invalid JSON in " + path);
    }
    return j;
}

void write_file(Report& rep, const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MalformedInputError("cannot write " + path);
    }
    out << content;
    rep.artifacts.push_back(path);
}

void emit(const Report& rep, bool as_json, const std::string& human) {
    if (as_json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string square_str(const LatinSquare& s) {
    std::ostringstream out;
    for (const auto& row : s.rows()) {
        out << "  ";
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? " " : "") << row[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string trop_str(const TropPoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Json trop_json(const TropPoint& p) { return Json::array({p.x, p.y}); }

int cmd_ols(Report& rep, int order, bool as_json) {
    rep.digest.feed("order=" + std::to_string(order));
    if (order == 6) {
        throw UnsupportedOrderError(
            "order 6 is out of scope: no orthogonal pair of 6x6 squares exists");
    }
    std::vector<OLSPair> classes = enumerate_ols(order);
    Json list = Json::array();
    std::ostringstream human;
    human << classes.size() << " canonical orthogonal class"
          << (classes.size() == 1 ? "" : "es") << " of order " << order << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        list.push_back(ols_to_json(classes[i]));
        human << "class " << (i + 1) << ", first square:\n" << square_str(classes[i].first)
              << "second square:\n" << square_str(classes[i].second);
    }
    rep.payload["classes"] = std::move(list);
    emit(rep, as_json, human.str());
    return 0;
}

std::vector<LatinSquare> squares_from_input(const Json& j) {
    if (j.is_object()) {
        OLSPair p = ols_from_json(j);
        return {p.first, p.second};
    }
    if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
        std::vector<LatinSquare> out;
        for (const auto& s : j) {
            out.push_back(square_from_json(s));
        }
        return out;
    }
    // a single square given as an array of rows
    if (j.is_array()) {
        return {square_from_json(j)};
    }
    throw MalformedInputError("squares input must be a pair object or an array of squares");
}

int cmd_net_build(Report& rep, int order, const std::string& squares_path,
                  const std::string& out_path, bool as_json) {
    std::vector<LatinSquare> squares;
    if (!squares_path.empty()) {
        squares = squares_from_input(load_json(rep, squares_path));
    } else {
        rep.digest.feed("order=" + std::to_string(order));
        std::vector<OLSPair> classes = enumerate_ols(order);
        if (classes.empty()) {
            throw MalformedInputError("no orthogonal pair exists at order " +
                                      std::to_string(order));
        }
        squares = {classes.front().first, classes.front().second};
    }
    AbstractNet net = net_from_ols(squares);
    Json j = net_to_json(net);
    std::string text = j.dump(2) + "\n";
    std::ostringstream human;
    human << "(" << net.k << "," << net.d << ")-net with " << net.incidence.size()
          << " points\n";
    if (!out_path.empty()) {
        write_file(rep, out_path, text);
        human << "wrote " << out_path << "\n";
    } else if (!as_json) {
        human << text;
    }
    rep.payload["net"] = std::move(j);
    emit(rep, as_json, human.str());
    return 0;
}

int cmd_net_verify(Report& rep, const std::string& net_path, bool as_json) {
    Json j = load_json(rep, net_path);
    std::string field = j.value("field", "abstract");
    std::vector<NetViolation> violations;
    if (field == "abstract") {
        violations = verify_abstract_net(abstract_net_from_json(j));
    } else if (field == "rational") {
        RealizedNet<Rational> n = rational_net_from_json(j);
        violations = verify_abstract_net(n.net);
        auto more = verify_realized_net(n);
        violations.insert(violations.end(), more.begin(), more.end());
    } else if (field == "quotient-k2") {
        RealizedNet<QuotientElem> n = quotient_net_from_json(j);
        violations = verify_abstract_net(n.net);
        auto more = verify_realized_net(n);
        violations.insert(violations.end(), more.begin(), more.end());
    } else {
        throw MalformedInputError("unknown net field tag: " + field);
    }
    Json vj = Json::array();
    std::ostringstream human;
    for (const auto& v : violations) {
        vj.push_back(Json{{"condition", v.condition}, {"detail", v.detail}});
        human << "violation [" << v.condition << "] " << v.detail << "\n";
    }
    rep.payload["violations"] = std::move(vj);
    rep.outcome = violations.empty() ? "pass" : "fail";
    human << (violations.empty() ? "net verified\n" : "net verification failed\n");
    emit(rep, as_json, human.str());
    return violations.empty() ? 0 : 1;
}

int cmd_tropicalize(Report& rep, const std::string& net_path, const std::string& matrix_path,
                    const std::string& svg_path, bool as_json) {
    Json nj = load_json(rep, net_path);
    Mat3 m = matrix_path.empty() ? standard_degeneration()
                                 : mat3_from_json(load_json(rep, matrix_path));
    std::vector<LabeledTropLine> centers;
    std::vector<LabeledTropPoint> locations;
    if (nj.value("field", "abstract") == "rational") {
        RealizedNet<Rational> n = rational_net_from_json(nj);
        for (const auto& [lid, l] : n.lines) {
            try {
                centers.push_back({TropLine{trop_line_center(l, m)}, line_name(lid)});
            } catch (const VanishingCoordinateError& e) {
                throw VanishingCoordinateError(line_name(lid) + ": " + e.what());
            }
        }
        for (const auto& [pid, p] : n.points) {
            try {
                locations.push_back({trop_point_location(p, m), point_name(pid)});
            } catch (const VanishingCoordinateError& e) {
                throw VanishingCoordinateError(point_name(pid) + ": " + e.what());
            }
        }
    }
    Json lines_json = Json::object();
    Json points_json = Json::object();
    std::ostringstream human;
    human << "line centers:\n";
    for (const auto& c : centers) {
        lines_json[c.label] = trop_json(c.line.center);
        human << "  " << c.label << " -> " << trop_str(c.line.center) << "\n";
    }
    human << "point locations:\n";
    for (const auto& p : locations) {
        points_json[p.label] = trop_json(p.point);
        human << "  " << p.label << " -> " << trop_str(p.point) << "\n";
    }
    if (!svg_path.empty()) {
        write_file(rep, svg_path, render_tropical_svg(centers, locations));
        human << "wrote " << svg_path << "\n";
    }
    rep.payload["centers"] = std::move(lines_json);
    rep.payload["locations"] = std::move(points_json);
    emit(rep, as_json, human.str());
    return 0;
}

Json class_json(const SymbolicClass& cls, const std::array<std::string, 3>& vars) {
    Json out;
    Json zero = Json::array();
    for (const auto& f : cls.zero) {
        zero.push_back(f.str(vars));
    }
    Json nonzero = Json::array();
    for (const auto& f : cls.nonzero) {
        nonzero.push_back(f.str(vars));
    }
    out["zero"] = std::move(zero);
    out["nonzero"] = std::move(nonzero);
    out["unique"] = cls.unique;
    if (cls.representative) {
        Json rep = Json::array();
        for (const auto& q : *cls.representative) {
            rep.push_back(format_rational(q));
        }
        out["representative"] = std::move(rep);
    }
    return out;
}

std::string class_str(const SymbolicClass& cls, const std::array<std::string, 3>& vars) {
    std::ostringstream out;
    bool first = true;
    for (const auto& f : cls.zero) {
        out << (first ? "" : ", ") << f.str(vars) << "=0";
        first = false;
    }
    for (const auto& f : cls.nonzero) {
        out << (first ? "" : ", ") << f.str(vars) << "!=0";
        first = false;
    }
    return out.str();
}

int cmd_table(Report& rep, const std::string& matrix_path, bool as_json) {
    Mat3 m = matrix_path.empty() ? standard_degeneration()
                                 : mat3_from_json(load_json(rep, matrix_path));
    PointLineTable table = point_line_table(m);
    const std::array<std::string, 3> pvars{"a", "b", "c"};
    const std::array<std::string, 3> lvars{"d", "e", "f"};
    Json rows = Json::array();
    std::ostringstream human;
    for (const auto& row : table.rows) {
        Json rj;
        rj["coord"] = trop_json(row.coord);
        Json pc = Json::array();
        for (const auto& cls : row.point_classes) {
            pc.push_back(class_json(cls, pvars));
        }
        Json lc = Json::array();
        for (const auto& cls : row.line_classes) {
            lc.push_back(class_json(cls, lvars));
        }
        rj["points"] = std::move(pc);
        rj["lines"] = std::move(lc);
        rows.push_back(std::move(rj));

        human << trop_str(row.coord) << "\n  points: ";
        if (row.point_classes.empty()) {
            human << "NS";
        }
        for (std::size_t i = 0; i < row.point_classes.size(); ++i) {
            human << (i ? " | " : "") << class_str(row.point_classes[i], pvars);
        }
        human << "\n  lines:  ";
        if (row.line_classes.empty()) {
            human << "NS";
        }
        for (std::size_t i = 0; i < row.line_classes.size(); ++i) {
            human << (i ? " | " : "") << class_str(row.line_classes[i], lvars);
        }
        human << "\n";
    }
    rep.payload["rows"] = std::move(rows);
    emit(rep, as_json, human.str());
    return 0;
}

int cmd_prove(Report& rep, const std::string& target, const std::string& out_path,
              const std::string& net_out_path, bool as_json) {
    rep.digest.feed("target=" + target);
    long budget = step_budget();
    std::ostringstream human;
    Certificate cert;
    if (target == "44-nonexistence") {
        cert = prove_nonexistence_44(budget);
        rep.outcome = "trivial";
        human << "no (4,4)-net exists: the incidence ideal contains the constant "
              << cert.witness->target.str() << "\n";
        human << "side conditions adjoined: " << cert.used_nonvanishing.size() << "\n";
        human << "landmark ideal members:\n";
        for (const auto& step : cert.steps) {
            human << "  " << step.target.str() << "\n";
        }
    } else if (target == "43-uniqueness") {
        auto [c, net] = prove_uniqueness_43(budget);
        cert = std::move(c);
        rep.outcome = "proper";
        human << "the (4,3)-net is unique: minimal polynomial "
              << cert.minimal_poly->str() << "\n";
        for (const auto& [name, ab] : cert.solved) {
            human << "  " << name << " = " << format_rational(ab[0]) << " + ("
                  << format_rational(ab[1]) << ")*" << cert.ring->vars()[cert.solved_var]
                  << "\n";
        }
        human << "conjugate net verified: " << (cert.automorphism_checked ? "yes" : "no")
              << "\n";
        if (!net_out_path.empty()) {
            write_file(rep, net_out_path, net_to_json(net).dump(2) + "\n");
            human << "wrote " << net_out_path << "\n";
        }
        rep.payload["net_points"] = static_cast<int>(net.points.size());
    } else {
        throw MalformedInputError("unknown prove target: " + target +
                                  " (use 44-nonexistence or 43-uniqueness)");
    }
    Json cj = certificate_to_json(cert);
    if (!out_path.empty()) {
        write_file(rep, out_path, cj.dump(2) + "\n");
        human << "wrote " << out_path << "\n";
    }
    rep.payload["certificate"] = std::move(cj);
    emit(rep, as_json, human.str());
    return 0;
}

int cmd_verify(Report& rep, const std::string& cert_path, bool as_json) {
    Certificate cert = certificate_from_json(load_json(rep, cert_path));
    NetSkeleton s = cert.kind == CertificateKind::Nonexistence ? build_44_skeleton()
                                                               : build_43_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    VerificationResult result = verify_certificate(cert, sys);
    rep.outcome = result.accepted ? "pass" : "fail";
    rep.payload["accepted"] = result.accepted;
    rep.payload["reason"] = result.reason;
    if (result.failing_step) {
        rep.payload["failing_step"] = *result.failing_step;
    }
    std::ostringstream human;
    human << (result.accepted ? "certificate accepted: " : "certificate rejected: ")
          << result.reason << "\n";
    if (result.failing_step) {
        human << "failing step: " << *result.failing_step << "\n";
    }
    emit(rep, as_json, human.str());
    return result.accepted ? 0 : 1;
}

int cmd_amoeba(Report& rep, const std::string& t_text, const std::string& base_text,
               bool scaled, double x_min, double x_max, int count,
               const std::string& out_path, bool as_json) {
    rep.digest.feed("t=" + t_text + " base=" + base_text + (scaled ? " scaled" : ""));
    Rational t = parse_rational(t_text);
    AmoebaBase base;
    if (base_text == "natural") {
        base = AmoebaBase::Natural;
    } else if (base_text == "t") {
        base = AmoebaBase::BaseT;
    } else {
        throw MalformedInputError("base must be 'natural' or 't'");
    }
    AmoebaKind kind = scaled ? AmoebaKind::Scaled : AmoebaKind::LineThroughMinusOne;
    auto branches = amoeba_boundary_samples(kind, base, t, x_min, x_max, count);
    std::string csv = amoeba_csv(branches);
    std::ostringstream human;
    if (!out_path.empty()) {
        bool svg = out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".svg";
        write_file(rep, out_path, svg ? render_amoeba_svg(branches) : csv);
        human << "wrote " << out_path << "\n";
    } else {
        human << csv;
    }
    Json bj = Json::object();
    for (const auto& b : branches) {
        Json pts = Json::array();
        for (const auto& [x, y] : b.samples) {
            pts.push_back(Json::array({x, y}));
        }
        bj[b.name] = std::move(pts);
    }
    rep.payload["branches"] = std::move(bj);
    emit(rep, as_json, human.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical-geometry toolkit for (k,d)-net existence"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    int ols_order = 0;
    auto* ols = app.add_subcommand("ols", "enumerate canonical orthogonal Latin square pairs");
    ols->add_option("--order", ols_order, "square order")->required();

    auto* net = app.add_subcommand("net", "build or verify nets");
    net->require_subcommand(1);
    int build_order = 0;
    std::string build_squares, build_out;
    auto* net_build = net->add_subcommand("build", "abstract net from orthogonal squares");
    net_build->add_option("--order", build_order, "use the canonical pair of this order");
    net_build->add_option("--squares", build_squares, "JSON file with the squares");
    net_build->add_option("--out", build_out, "output net file");
    std::string verify_net_path;
    auto* net_verify = net->add_subcommand("verify", "check net axioms / coordinates");
    net_verify->add_option("--net", verify_net_path, "net JSON file")->required();

    std::string trop_net, trop_matrix, trop_svg;
    auto* trop = app.add_subcommand("tropicalize", "centers and locations under a degeneration");
    trop->add_option("--net", trop_net, "realized net JSON file")->required();
    trop->add_option("--matrix", trop_matrix, "degeneration matrix JSON (default: built-in)");
    trop->add_option("--svg", trop_svg, "schematic figure output path");

    std::string table_matrix;
    auto* table = app.add_subcommand("table", "symbolic point/line classification table");
    table->add_option("--matrix", table_matrix, "degeneration matrix JSON (default: built-in)");

    std::string prove_target, prove_out, prove_net_out;
    auto* prove = app.add_subcommand("prove", "produce a replayable certificate");
    prove->add_option("target", prove_target, "44-nonexistence or 43-uniqueness")->required();
    prove->add_option("--out", prove_out, "certificate output path");
    prove->add_option("--net-out", prove_net_out, "solved net output path (43 only)");

    std::string verify_cert;
    auto* verify = app.add_subcommand("verify", "replay a certificate");
    verify->add_option("--cert", verify_cert, "certificate JSON file")->required();

    std::string am_t = "100", am_base = "natural", am_out;
    bool am_scaled = false;
    double am_xmin = -3.0, am_xmax = 3.0;
    int am_count = 100;
    auto* amoeba = app.add_subcommand("amoeba", "sample amoeba boundary branches");
    amoeba->add_option("--t", am_t, "degeneration parameter (rational, > 1)");
    amoeba->add_option("--base", am_base, "log base: natural or t");
    amoeba->add_flag("--scaled", am_scaled, "use the line x + y + t instead of x + y + 1");
    amoeba->add_option("--x-min", am_xmin, "sample range start");
    amoeba->add_option("--x-max", am_xmax, "sample range end");
    amoeba->add_option("--count", am_count, "samples per branch");
    amoeba->add_option("--out", am_out, "output path (.csv or .svg)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    try {
        if (app.got_subcommand(ols)) {
            rep.command = "ols";
            return cmd_ols(rep, ols_order, as_json);
        }
        if (app.got_subcommand(net)) {
            if (net->got_subcommand(net_build)) {
                rep.command = "net build";
                if (build_squares.empty() && build_order == 0) {
                    throw MalformedInputError("net build needs --order or --squares");
                }
                return cmd_net_build(rep, build_order, build_squares, build_out, as_json);
            }
            rep.command = "net verify";
            return cmd_net_verify(rep, verify_net_path, as_json);
        }
        if (app.got_subcommand(trop)) {
            rep.command = "tropicalize";
            return cmd_tropicalize(rep, trop_net, trop_matrix, trop_svg, as_json);
        }
        if (app.got_subcommand(table)) {
            rep.command = "table";
            return cmd_table(rep, table_matrix, as_json);
        }
        if (app.got_subcommand(prove)) {
            rep.command = "prove";
            return cmd_prove(rep, prove_target, prove_out, prove_net_out, as_json);
        }
        if (app.got_subcommand(verify)) {
            rep.command = "verify";
            return cmd_verify(rep, verify_cert, as_json);
        }
        if (app.got_subcommand(amoeba)) {
            rep.command = "amoeba";
            return cmd_amoeba(rep, am_t, am_base, am_scaled, am_xmin, am_xmax, am_count,
                              am_out, as_json);
        }
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error (inconclusive): " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        // remaining library errors indicate unusable input
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
