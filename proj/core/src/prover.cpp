#include "tropnet/prover.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "tropnet/errors.hpp"
#include "tropnet/latin.hpp"

namespace tropnet {

namespace {

using Triple = std::array<Rational, 3>;

/// base + param * dir sweeps a rank-1 symbolic class.
struct FamilySpec {
    Triple base;
    Triple dir;
};

/// Classes pinned to one zero linear form admit this fixed parametrization;
/// keyed by the normalized form.
std::map<LinearForm, FamilySpec> line_family_specs() {
    return {
        {LinearForm{{0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}}},    // e = 0:    [1 : 0 : k]
        {LinearForm{{0, 1, -1}}, {{0, 1, 1}, {1, 0, 0}}},   // e = f:    [k : 1 : 1]
        {LinearForm{{1, 0, -1}}, {{1, 0, 1}, {0, 1, 0}}},   // d = f:    [1 : k : 1]
    };
}

std::map<LinearForm, FamilySpec> point_family_specs() {
    return {
        {LinearForm{{1, 0, 1}}, {{1, 0, -1}, {0, 1, 0}}},    // a = -c: (1 : m : -1)
        {LinearForm{{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}}},     // a = 0:  (0 : 1 : t)
        {LinearForm{{1, 1, 1}}, {{1, 0, -1}, {0, 1, -1}}},   // a+b+c=0: (1 : s : -1-s)
    };
}

/// Parameter names drawn per candidate class, in the order families appear.
struct ParamPools {
    std::map<TropPoint, std::vector<std::string>> names;
    std::map<TropPoint, std::size_t> used;

    std::string draw(const TropPoint& coord) {
        auto it = names.find(coord);
        if (it == names.end()) {
            throw InternalError("no parameter pool for a family class");
        }
        std::size_t& n = used[coord];
        if (n >= it->second.size()) {
            throw InternalError("parameter pool exhausted");
        }
        return it->second[n++];
    }

    /// The previously drawn name from the same pool, if any.
    std::optional<std::string> previous(const TropPoint& coord) const {
        auto u = used.find(coord);
        if (u == used.end() || u->second < 2) {
            return std::nullopt;
        }
        return names.at(coord)[u->second - 2];
    }
};

Triple cross_q(const Triple& a, const Triple& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero_q(const Triple& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

/// Parameter value x with v proportional to base + x * dir, if one exists.
std::optional<Rational> family_member_parameter(const Triple& v, const FamilySpec& f) {
    Triple cb = cross_q(v, f.base);
    Triple cd = cross_q(v, f.dir);
    if (is_zero_q(cd)) {
        return std::nullopt;  // v is the direction itself, not a member
    }
    std::size_t i = 0;
    while (cd[i] == 0) {
        ++i;
    }
    Rational x = -cb[i] / cd[i];
    for (std::size_t j = 0; j < 3; ++j) {
        if (cb[j] + x * cd[j] != 0) {
            return std::nullopt;
        }
    }
    return x;
}

void push_condition(std::vector<MultiPoly>& conditions, const MultiPoly& q) {
    if (q.is_zero()) {
        throw InternalError("vanishing polynomial asserted nonzero");
    }
    if (q.is_constant()) {
        return;  // nonzero constants carry no information
    }
    MultiPoly n = q.normalized();
    for (const auto& existing : conditions) {
        if (existing.proportional_to(n)) {
            return;
        }
    }
    conditions.push_back(n);
}

std::array<MultiPoly, 3> family_coords(const RingPtr& ring, const FamilySpec& spec,
                                       std::size_t param_index) {
    MultiPoly p = MultiPoly::variable(ring, param_index);
    std::array<MultiPoly, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = MultiPoly::constant(ring, spec.base[i]) + p * spec.dir[i];
    }
    return out;
}

/// Side conditions contributed by one new family member: the class's nonzero
/// forms evaluated along the family, exclusion of every already placed item
/// that happens to lie on the family, and distinctness from the previous
/// member of the same parameter pool.
void family_conditions(NetSkeleton& s, const SymbolicClass& cls, const FamilySpec& spec,
                       std::size_t param_index, const std::vector<Triple>& placed,
                       const std::optional<std::string>& pool_previous) {
    MultiPoly param = MultiPoly::variable(s.ring, param_index);
    for (const auto& form : cls.nonzero) {
        MultiPoly v(s.ring);
        for (std::size_t i = 0; i < 3; ++i) {
            v = v + (MultiPoly::constant(s.ring, spec.base[i]) + param * spec.dir[i]) *
                        form.c[i];
        }
        push_condition(s.nonvanishing, v);
    }
    for (const auto& item : placed) {
        if (auto x = family_member_parameter(item, spec)) {
            push_condition(s.nonvanishing, param - MultiPoly::constant(s.ring, *x));
        }
    }
    if (pool_previous) {
        push_condition(s.nonvanishing,
                       param - MultiPoly::variable(s.ring, *pool_previous));
    }
}

/// Fixed part of the skeleton: the normalized quadrilateral plus everything
/// reachable from it by meets and joins alone.
void derive_fixed_closure(NetSkeleton& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int cls = 1; cls <= s.net.k; ++cls) {
            for (int idx = 1; idx <= s.net.d; ++idx) {
                LineId lid{cls, idx};
                if (s.fixed_lines.count(lid)) {
                    continue;
                }
                std::vector<PointId> known;
                for (PointId pid : s.net.points_on(lid)) {
                    if (s.fixed_points.count(pid)) {
                        known.push_back(pid);
                    }
                }
                if (known.size() >= 2) {
                    s.fixed_lines.emplace(
                        lid, join(s.fixed_points.at(known[0]), s.fixed_points.at(known[1])));
                    s.notes[line_name(lid)] = "join of " + point_name(known[0]) + " and " +
                                              point_name(known[1]);
                    changed = true;
                }
            }
        }
        for (const auto& [pid, classes] : s.net.incidence) {
            if (s.fixed_points.count(pid)) {
                continue;
            }
            std::vector<LineId> known;
            for (int cls = 1; cls <= s.net.k; ++cls) {
                LineId lid{cls, classes[static_cast<std::size_t>(cls - 1)]};
                if (s.fixed_lines.count(lid)) {
                    known.push_back(lid);
                }
            }
            if (known.size() >= 2) {
                s.fixed_points.emplace(
                    pid, meet(s.fixed_lines.at(known[0]), s.fixed_lines.at(known[1])));
                s.notes[point_name(pid)] =
                    "meet of " + line_name(known[0]) + " and " + line_name(known[1]);
                changed = true;
            }
        }
    }
}

/// Tropical candidate filter shared by point and line families: classes whose
/// coordinate is compatible with the anchor, minus classes whose unique
/// representative is an already placed item.
std::vector<SymbolicClass> filter_candidates(const std::vector<SymbolicClass>& classes,
                                             const TropPoint& anchor_coord, bool anchor_is_line,
                                             const std::vector<Triple>& placed) {
    std::vector<SymbolicClass> out;
    for (const auto& cls : classes) {
        // A point class survives when the anchor line's tropicalization covers
        // its coordinate; a line class when it covers the anchor point's.
        bool compatible = anchor_is_line ? trop_contains(TropLine{anchor_coord}, cls.coord)
                                         : trop_contains(TropLine{cls.coord}, anchor_coord);
        if (!compatible) {
            continue;
        }
        if (cls.unique) {
            bool taken = false;
            for (const auto& item : placed) {
                if (is_zero_q(cross_q(item, *cls.representative))) {
                    taken = true;
                    break;
                }
            }
            if (taken) {
                continue;
            }
        }
        out.push_back(cls);
    }
    return out;
}

NetSkeleton build_skeleton(int d, bool with_point_families, std::vector<std::string> vars,
                           ParamPools point_pools, ParamPools line_pools,
                           std::map<LineId, std::pair<PointId, PointId>> join_plan) {
    NetSkeleton s;
    s.ring = make_ring(std::move(vars));
    OLSPair pair = enumerate_ols(d).front();
    s.net = net_from_ols({pair.first, pair.second});
    s.join_plan = std::move(join_plan);

    // Normalized quadrilateral: the first two lines of classes 1 and 2.
    s.fixed_lines.emplace(LineId{1, 1}, ProjLine<Rational>::make(0, 0, 1));
    s.fixed_lines.emplace(LineId{1, 2}, ProjLine<Rational>::make(1, 1, 1));
    s.fixed_lines.emplace(LineId{2, 1}, ProjLine<Rational>::make(1, 0, 0));
    s.fixed_lines.emplace(LineId{2, 2}, ProjLine<Rational>::make(0, 1, 0));
    for (LineId lid : {LineId{1, 1}, LineId{1, 2}, LineId{2, 1}, LineId{2, 2}}) {
        s.notes[line_name(lid)] = "normalized quadrilateral line";
    }
    derive_fixed_closure(s);

    Mat3 T = standard_degeneration();
    std::vector<SymbolicClass> point_classes = classify_point_symbolic(T);
    std::vector<SymbolicClass> line_classes = classify_line_symbolic(T);
    std::map<LinearForm, FamilySpec> point_specs = point_family_specs();
    std::map<LinearForm, FamilySpec> line_specs = line_family_specs();

    auto placed_points = [&] {
        std::vector<Triple> v;
        for (const auto& [pid, p] : s.fixed_points) {
            v.push_back(p.c);
        }
        return v;
    };
    auto placed_lines = [&] {
        std::vector<Triple> v;
        for (const auto& [lid, l] : s.fixed_lines) {
            v.push_back(l.c);
        }
        return v;
    };

    if (with_point_families) {
        for (const auto& [pid, classes] : s.net.incidence) {
            if (s.fixed_points.count(pid)) {
                continue;
            }
            std::optional<LineId> anchor;
            for (int cls = 1; cls <= s.net.k; ++cls) {
                LineId lid{cls, classes[static_cast<std::size_t>(cls - 1)]};
                if (s.fixed_lines.count(lid)) {
                    anchor = lid;
                    break;
                }
            }
            if (!anchor) {
                continue;
            }
            TropPoint center = trop_line_center(s.fixed_lines.at(*anchor), T);
            std::vector<SymbolicClass> cands =
                filter_candidates(point_classes, center, true, placed_points());
            if (cands.empty()) {
                throw InconsistencyError("no tropical class can hold " + point_name(pid));
            }
            if (cands.size() != 1) {
                continue;  // several classes remain; left to incidence derivation
            }
            const SymbolicClass& cls = cands.front();
            if (cls.unique) {
                s.fixed_points.emplace(pid,
                                       ProjPoint<Rational>::make((*cls.representative)[0],
                                                                 (*cls.representative)[1],
                                                                 (*cls.representative)[2]));
                s.notes[point_name(pid)] = "forced to the unique class representative";
                continue;
            }
            const FamilySpec& spec = point_specs.at(cls.zero.front());
            std::string pname = point_pools.draw(cls.coord);
            std::size_t pidx = *s.ring->index_of(pname);
            auto coords = family_coords(s.ring, spec, pidx);
            s.parametric_points.emplace(
                pid, std::make_pair(
                         ProjPoint<MultiPoly>::make(coords[0], coords[1], coords[2]), pidx));
            family_conditions(s, cls, spec, pidx, placed_points(),
                              point_pools.previous(cls.coord));
            s.notes[point_name(pid)] = "one-parameter family (" + pname + ") on " +
                                       line_name(*anchor) + ", tropical class (" +
                                       std::to_string(cls.coord.x) + "," +
                                       std::to_string(cls.coord.y) + ")";
        }
    }

    for (int cls_no = 1; cls_no <= s.net.k; ++cls_no) {
        for (int idx = 1; idx <= s.net.d; ++idx) {
            LineId lid{cls_no, idx};
            if (s.fixed_lines.count(lid)) {
                continue;
            }
            std::optional<PointId> anchor;
            for (PointId pid : s.net.points_on(lid)) {
                if (s.fixed_points.count(pid)) {
                    anchor = pid;
                    break;
                }
            }
            if (!anchor) {
                continue;
            }
            TropPoint loc = trop_point_location(s.fixed_points.at(*anchor), T);
            std::vector<SymbolicClass> cands =
                filter_candidates(line_classes, loc, false, placed_lines());
            if (cands.empty()) {
                throw InconsistencyError("no tropical class can hold " + line_name(lid));
            }
            if (cands.size() != 1) {
                continue;
            }
            const SymbolicClass& cls = cands.front();
            if (cls.unique) {
                s.fixed_lines.emplace(lid,
                                      ProjLine<Rational>::make((*cls.representative)[0],
                                                               (*cls.representative)[1],
                                                               (*cls.representative)[2]));
                s.notes[line_name(lid)] = "forced to the unique class representative";
                continue;
            }
            const FamilySpec& spec = line_specs.at(cls.zero.front());
            std::string pname = line_pools.draw(cls.coord);
            std::size_t pidx = *s.ring->index_of(pname);
            auto coords = family_coords(s.ring, spec, pidx);
            s.parametric_lines.emplace(
                lid, std::make_pair(
                         ProjLine<MultiPoly>::make(coords[0], coords[1], coords[2]), pidx));
            family_conditions(s, cls, spec, pidx, placed_lines(),
                              line_pools.previous(cls.coord));
            s.notes[line_name(lid)] = "one-parameter family (" + pname + ") through " +
                                      point_name(*anchor) + ", tropical class (" +
                                      std::to_string(cls.coord.x) + "," +
                                      std::to_string(cls.coord.y) + ")";
        }
    }
    return s;
}

ParamPools standard_line_pools() {
    ParamPools p;
    p.names[{-2, -1}] = {"k1"};
    p.names[{3, 2}] = {"k2"};
    p.names[{1, 3}] = {"k3"};
    return p;
}

ParamPools standard_point_pools() {
    ParamPools p;
    p.names[{0, 2}] = {"m1", "m2"};
    p.names[{1, 0}] = {"t1", "t2"};
    p.names[{2, 3}] = {"s1", "s2"};
    return p;
}

MultiPoly incidence_dot(const ProjPoint<MultiPoly>& p, const ProjLine<MultiPoly>& l) {
    return p.c[0] * l.c[0] + p.c[1] * l.c[1] + p.c[2] * l.c[2];
}

/// Cofactor expansion of every completion member over the original working
/// generators (each step substitutes the expansions of earlier members).
std::vector<std::vector<MultiPoly>> expand_over_generators(const CompletionResult& comp) {
    const std::size_t g = comp.generator_count;
    std::vector<std::vector<MultiPoly>> out;
    for (std::size_t i = 0; i < g; ++i) {
        std::vector<MultiPoly> row(g, MultiPoly(comp.ring));
        row[i] = MultiPoly::constant(comp.ring, 1);
        out.push_back(std::move(row));
    }
    for (const auto& step : comp.steps) {
        std::vector<MultiPoly> row(g, MultiPoly(comp.ring));
        for (std::size_t j = 0; j < step.cofactors.size(); ++j) {
            if (step.cofactors[j].is_zero()) {
                continue;
            }
            for (std::size_t t = 0; t < g; ++t) {
                if (!out[j][t].is_zero()) {
                    row[t] = row[t] + step.cofactors[j] * out[j][t];
                }
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

/// Step expressing `target` over the working generators alone.
CertificateStep generator_step(const MultiPoly& target_in_sys_ring,
                               const CompletionResult& comp,
                               const std::vector<std::vector<MultiPoly>>& expansion,
                               long step_budget) {
    MultiPoly target = lift(target_in_sys_ring, comp.ring);
    auto cof = membership(target, comp, step_budget);
    if (!cof) {
        throw InternalError("landmark polynomial is not an ideal member");
    }
    const std::size_t g = comp.generator_count;
    std::vector<MultiPoly> gen_cof(g, MultiPoly(comp.ring));
    for (std::size_t j = 0; j < cof->size(); ++j) {
        if ((*cof)[j].is_zero()) {
            continue;
        }
        for (std::size_t t = 0; t < g; ++t) {
            if (!expansion[j][t].is_zero()) {
                gen_cof[t] = gen_cof[t] + (*cof)[j] * expansion[j][t];
            }
        }
    }
    CertificateStep step;
    step.target = target;
    for (std::size_t t = 0; t < g; ++t) {
        if (!gen_cof[t].is_zero()) {
            step.cofactors.emplace_back(t, std::move(gen_cof[t]));
        }
    }
    return step;
}

std::vector<QuotientElem> solved_values(const Certificate& c, const RingPtr& ring) {
    std::vector<QuotientElem> values;
    for (const auto& name : ring->vars()) {
        const auto& ab = c.solved.at(name);
        values.push_back(QuotientElem(ab[0], 0) + QuotientElem(0, ab[1]));
    }
    return values;
}

}  // namespace

NetSkeleton build_44_skeleton() {
    // The spanning pair of the two remaining square-class joins is not the
    // first one in point-id order; pin the pairs down explicitly.
    std::map<LineId, std::pair<PointId, PointId>> plan{
        {{3, 3}, {{1, 3}, {4, 2}}},
        {{3, 4}, {{3, 2}, {4, 1}}},
    };
    return build_skeleton(4, true,
                          {"k1", "k2", "k3", "m1", "m2", "s1", "s2", "t1", "t2"},
                          standard_point_pools(), standard_line_pools(), std::move(plan));
}

NetSkeleton build_43_skeleton() {
    return build_skeleton(3, false, {"k1", "k2", "k3"}, ParamPools{}, standard_line_pools(),
                          {});
}

ConstraintSystem generate_constraints(const NetSkeleton& s, const AbstractNet& net) {
    ConstraintSystem sys;
    sys.ring = s.ring;
    sys.nonvanishing = s.nonvanishing;

    for (const auto& [lid, l] : s.fixed_lines) {
        sys.all_lines.emplace(lid, ProjLine<MultiPoly>::make(
                                       MultiPoly::constant(s.ring, l.c[0]),
                                       MultiPoly::constant(s.ring, l.c[1]),
                                       MultiPoly::constant(s.ring, l.c[2])));
    }
    for (const auto& [lid, pl] : s.parametric_lines) {
        sys.all_lines.emplace(lid, pl.first);
    }
    for (const auto& [pid, p] : s.fixed_points) {
        sys.all_points.emplace(pid, ProjPoint<MultiPoly>::make(
                                        MultiPoly::constant(s.ring, p.c[0]),
                                        MultiPoly::constant(s.ring, p.c[1]),
                                        MultiPoly::constant(s.ring, p.c[2])));
    }

    // Pass 1: every point with two known lines is their meet; this supersedes
    // a one-parameter family when the families of its lines pin it down.
    for (const auto& [pid, classes] : net.incidence) {
        if (s.fixed_points.count(pid)) {
            continue;
        }
        std::vector<LineId> known;
        for (int cls = 1; cls <= net.k; ++cls) {
            LineId lid{cls, classes[static_cast<std::size_t>(cls - 1)]};
            if (sys.all_lines.count(lid)) {
                known.push_back(lid);
            }
        }
        if (known.size() >= 2) {
            sys.all_points.emplace(pid,
                                   meet(sys.all_lines.at(known[0]), sys.all_lines.at(known[1])));
        } else if (auto it = s.parametric_points.find(pid); it != s.parametric_points.end()) {
            sys.all_points.emplace(pid, it->second.first);
        } else {
            throw InconsistencyError("point " + point_name(pid) + " is underdetermined");
        }
    }

    // Pass 2: remaining lines are joins of two of their (now known) points.
    for (int cls = 1; cls <= net.k; ++cls) {
        for (int idx = 1; idx <= net.d; ++idx) {
            LineId lid{cls, idx};
            if (sys.all_lines.count(lid)) {
                continue;
            }
            std::vector<PointId> on = net.points_on(lid);
            PointId a, b;
            if (auto it = s.join_plan.find(lid); it != s.join_plan.end()) {
                a = it->second.first;
                b = it->second.second;
            } else {
                if (on.size() < 2) {
                    throw InconsistencyError("line " + line_name(lid) + " is underdetermined");
                }
                a = on[0];
                b = on[1];
            }
            sys.all_lines.emplace(lid, join(sys.all_points.at(a), sys.all_points.at(b)));
        }
    }

    // One equation per incidence that does not hold identically,
    // deduplicated up to scalar multiples.
    for (const auto& [pid, classes] : net.incidence) {
        for (int cls = 1; cls <= net.k; ++cls) {
            LineId lid{cls, classes[static_cast<std::size_t>(cls - 1)]};
            MultiPoly dot = incidence_dot(sys.all_points.at(pid), sys.all_lines.at(lid));
            if (dot.is_zero()) {
                continue;
            }
            MultiPoly n = dot.normalized();
            bool seen = false;
            for (const auto& eq : sys.equations) {
                if (eq.proportional_to(n)) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                sys.equations.push_back(std::move(n));
                sys.tags.push_back(point_name(pid) + " on " + line_name(lid));
            }
        }
    }
    return sys;
}

Certificate prove_nonexistence_44(long step_budget) {
    NetSkeleton s = build_44_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);

    // Smallest prefix of side conditions whose saturation kills the system.
    CompletionResult comp;
    std::size_t used = 0;
    bool trivial = false;
    for (; used <= sys.nonvanishing.size(); ++used) {
        IdealBasis basis{sys.ring, sys.equations,
                         {sys.nonvanishing.begin(),
                          sys.nonvanishing.begin() + static_cast<std::ptrdiff_t>(used)}};
        comp = complete_basis(basis, step_budget);
        if (comp.decision == IdealDecision::Trivial) {
            trivial = true;
            break;
        }
    }
    if (!trivial) {
        throw InternalError("the incidence system is unexpectedly consistent");
    }

    Certificate cert;
    cert.kind = CertificateKind::Nonexistence;
    cert.ring = comp.ring;
    cert.generators.assign(comp.members.begin(),
                           comp.members.begin() +
                               static_cast<std::ptrdiff_t>(comp.generator_count));
    for (std::size_t i = 0; i < used; ++i) {
        cert.used_nonvanishing.push_back(i);
    }

    // Landmark members of the ideal, then a combination of the last two that
    // is a plain nonzero constant.
    auto expansion = expand_over_generators(comp);
    auto poly = [&](std::vector<std::pair<ExpVec, Rational>> terms) {
        return MultiPoly::from_terms(sys.ring, terms);
    };
    std::size_t k1 = *sys.ring->index_of("k1");
    std::size_t k2 = *sys.ring->index_of("k2");
    ExpVec e0(sys.ring->arity(), 0);
    ExpVec ek1 = e0, ek1sq = e0, ek2 = e0, ek2sq = e0;
    ek1[k1] = 1;
    ek1sq[k1] = 2;
    ek2[k2] = 1;
    ek2sq[k2] = 2;
    std::vector<MultiPoly> landmarks{
        poly({{ek2sq, 1}, {ek2, -1}, {e0, 1}}),   // k2^2 - k2 + 1
        poly({{ek1sq, 3}, {ek1, -3}, {e0, 1}}),   // 3*k1^2 - 3*k1 + 1
        poly({{ek1sq, 1}, {ek1, -1}, {e0, 1}}),   // k1^2 - k1 + 1
    };
    for (const auto& l : landmarks) {
        cert.steps.push_back(generator_step(l, comp, expansion, step_budget));
    }
    // 3*(k1^2 - k1 + 1) - (3*k1^2 - 3*k1 + 1) == 2.
    CertificateStep witness;
    witness.target = MultiPoly::constant(comp.ring, 2);
    witness.cofactors.emplace_back(comp.generator_count + 2,
                                   MultiPoly::constant(comp.ring, 3));
    witness.cofactors.emplace_back(comp.generator_count + 1,
                                   MultiPoly::constant(comp.ring, -1));
    cert.witness = std::move(witness);

    VerificationResult check = verify_certificate(cert, sys);
    if (!check.accepted) {
        throw InternalError("self-check of the nonexistence certificate failed: " +
                            check.reason);
    }
    return cert;
}

std::pair<Certificate, RealizedNet<QuotientElem>> prove_uniqueness_43(long step_budget) {
    NetSkeleton s = build_43_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);

    CompletionResult comp = complete_basis({sys.ring, sys.equations, {}}, step_budget);
    if (comp.decision != IdealDecision::Proper) {
        throw InternalError("the incidence system is unexpectedly inconsistent");
    }

    Certificate cert;
    cert.kind = CertificateKind::Uniqueness;
    cert.ring = comp.ring;
    cert.generators.assign(comp.members.begin(),
                           comp.members.begin() +
                               static_cast<std::ptrdiff_t>(comp.generator_count));
    cert.solved_var = *sys.ring->index_of("k2");

    std::optional<MultiPoly> mp = minimal_polynomial(comp, cert.solved_var);
    if (!mp) {
        throw InternalError("no univariate relation for the solved parameter");
    }
    ExpVec e0(sys.ring->arity(), 0), e1 = e0, e2 = e0;
    e1[cert.solved_var] = 1;
    e2[cert.solved_var] = 2;
    MultiPoly expected_mp =
        MultiPoly::from_terms(sys.ring, {{e2, 1}, {e1, -1}, {e0, 1}});
    if (!(*mp == expected_mp)) {
        throw InternalError("unexpected minimal polynomial for the solved parameter");
    }
    cert.minimal_poly = expected_mp;

    auto expansion = expand_over_generators(comp);
    cert.steps.push_back(generator_step(expected_mp, comp, expansion, step_budget));
    for (std::size_t v = 0; v < sys.ring->arity(); ++v) {
        if (v == cert.solved_var) {
            cert.solved[sys.ring->vars()[v]] = {Rational(0), Rational(1)};
            continue;
        }
        auto ab = linear_in(comp, v, cert.solved_var);
        if (!ab) {
            throw InternalError("parameter " + sys.ring->vars()[v] +
                                " is not linear in the solved one");
        }
        cert.solved[sys.ring->vars()[v]] = *ab;
        // var - alpha - beta * solved_var lies in the ideal.
        ExpVec ev = e0;
        ev[v] = 1;
        MultiPoly rel = MultiPoly::from_terms(
            sys.ring, {{ev, 1}, {e1, -(*ab)[1]}, {e0, -(*ab)[0]}});
        cert.steps.push_back(generator_step(rel, comp, expansion, step_budget));
    }

    // Realize the net over Q[k]/(k^2-k+1) and check it coordinate by
    // coordinate, together with its image under k -> 1-k.
    std::vector<QuotientElem> values = solved_values(cert, sys.ring);
    auto embed = [](const Rational& q) { return QuotientElem::from_rational(q); };
    RealizedNet<QuotientElem> net;
    net.net = s.net;
    RealizedNet<QuotientElem> conj;
    conj.net = s.net;
    for (const auto& [lid, l] : sys.all_lines) {
        std::array<QuotientElem, 3> c;
        for (std::size_t i = 0; i < 3; ++i) {
            c[i] = l.c[i].eval(values, embed);
        }
        net.lines.emplace(lid, ProjLine<QuotientElem>::make(c[0], c[1], c[2]));
        conj.lines.emplace(lid, ProjLine<QuotientElem>::make(c[0].conjugate(), c[1].conjugate(),
                                                             c[2].conjugate()));
    }
    for (const auto& [pid, p] : sys.all_points) {
        std::array<QuotientElem, 3> c;
        for (std::size_t i = 0; i < 3; ++i) {
            c[i] = p.c[i].eval(values, embed);
        }
        net.points.emplace(pid, ProjPoint<QuotientElem>::make(c[0], c[1], c[2]));
        conj.points.emplace(pid, ProjPoint<QuotientElem>::make(
                                     c[0].conjugate(), c[1].conjugate(), c[2].conjugate()));
    }
    if (!verify_realized_net(net).empty()) {
        throw InternalError("the solved net fails coordinate verification");
    }
    if (!verify_realized_net(conj).empty()) {
        throw InternalError("the conjugate net fails coordinate verification");
    }
    cert.automorphism_checked = true;

    VerificationResult check = verify_certificate(cert, sys);
    if (!check.accepted) {
        throw InternalError("self-check of the uniqueness certificate failed: " + check.reason);
    }
    return {std::move(cert), std::move(net)};
}

VerificationResult verify_certificate(const Certificate& c, const ConstraintSystem& sys) {
    auto reject = [](std::string reason,
                     std::optional<std::size_t> step = std::nullopt) {
        return VerificationResult{false, std::move(reason), step};
    };
    if (!c.ring || !sys.ring) {
        return reject("missing ring");
    }

    // The generators must be exactly the system's equations plus one inverse
    // relation per claimed nonvanishing condition.
    const std::size_t base = sys.ring->arity();
    if (c.ring->arity() != base + c.used_nonvanishing.size()) {
        return reject("ring arity does not match the adjoined inverse variables");
    }
    for (std::size_t i = 0; i < base; ++i) {
        if (c.ring->vars()[i] != sys.ring->vars()[i]) {
            return reject("certificate ring does not extend the system ring");
        }
    }
    std::vector<MultiPoly> expected;
    for (const auto& eq : sys.equations) {
        expected.push_back(lift(eq, c.ring));
    }
    for (std::size_t i = 0; i < c.used_nonvanishing.size(); ++i) {
        std::size_t idx = c.used_nonvanishing[i];
        if (idx >= sys.nonvanishing.size()) {
            return reject("nonvanishing index out of range");
        }
        expected.push_back(lift(sys.nonvanishing[idx], c.ring) *
                               MultiPoly::variable(c.ring, base + i) -
                           MultiPoly::constant(c.ring, 1));
    }
    if (c.generators.size() != expected.size()) {
        return reject("generator count does not match the constraint system");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(c.generators[i] == expected[i])) {
            return reject("generator " + std::to_string(i) +
                          " does not match the constraint system");
        }
    }

    // Replay every step as a pure polynomial identity.
    std::vector<MultiPoly> members = c.generators;
    auto replay = [&](const CertificateStep& step) {
        MultiPoly acc(c.ring);
        for (const auto& [idx, cof] : step.cofactors) {
            if (idx >= members.size()) {
                return false;
            }
            acc = acc + cof * members[idx];
        }
        return acc == step.target;
    };
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        if (!replay(c.steps[i])) {
            return reject("step does not replay", i);
        }
        members.push_back(c.steps[i].target);
    }

    if (c.kind == CertificateKind::Nonexistence) {
        if (!c.witness) {
            return reject("nonexistence certificate without a witness");
        }
        if (!replay(*c.witness)) {
            return reject("witness does not replay", c.steps.size());
        }
        if (c.witness->target.is_zero() || !c.witness->target.is_constant()) {
            return reject("witness is not a nonzero constant");
        }
        return {true, "a nonzero constant lies in the incidence ideal", std::nullopt};
    }

    // Uniqueness: the solved assignment must be certified (all relations
    // appear among the replayed targets) and must satisfy the whole system.
    if (!c.minimal_poly) {
        return reject("uniqueness certificate without a minimal polynomial");
    }
    if (c.solved_var >= base) {
        return reject("solved variable out of range");
    }
    auto is_step_target = [&](const MultiPoly& p) {
        for (const auto& step : c.steps) {
            if (step.target == p) {
                return true;
            }
        }
        return false;
    };
    ExpVec e0(base, 0), e1 = e0, e2 = e0;
    e1[c.solved_var] = 1;
    e2[c.solved_var] = 2;
    MultiPoly expected_mp = MultiPoly::from_terms(sys.ring, {{e2, 1}, {e1, -1}, {e0, 1}});
    if (!(*c.minimal_poly == expected_mp)) {
        return reject("minimal polynomial is not the quadratic k^2 - k + 1 pattern");
    }
    if (!is_step_target(lift(expected_mp, c.ring))) {
        return reject("minimal polynomial is not certified by any step");
    }
    for (std::size_t v = 0; v < base; ++v) {
        const std::string& name = sys.ring->vars()[v];
        auto it = c.solved.find(name);
        if (it == c.solved.end()) {
            return reject("no solved expression for parameter " + name);
        }
        if (v == c.solved_var) {
            if (it->second[0] != 0 || it->second[1] != 1) {
                return reject("solved variable must map to itself");
            }
            continue;
        }
        ExpVec ev = e0;
        ev[v] = 1;
        MultiPoly rel = MultiPoly::from_terms(
            sys.ring, {{ev, 1}, {e1, -it->second[1]}, {e0, -it->second[0]}});
        if (!is_step_target(lift(rel, c.ring))) {
            return reject("solved expression for " + name + " is not certified by any step");
        }
    }
    std::vector<QuotientElem> values = solved_values(c, sys.ring);
    auto embed = [](const Rational& q) { return QuotientElem::from_rational(q); };
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        if (!sys.equations[i].eval(values, embed).is_zero()) {
            return reject("equation " + std::to_string(i) +
                          " does not vanish at the solved assignment");
        }
    }
    for (std::size_t i = 0; i < sys.nonvanishing.size(); ++i) {
        if (sys.nonvanishing[i].eval(values, embed).is_zero()) {
            return reject("side condition " + std::to_string(i) +
                          " vanishes at the solved assignment");
        }
    }
    if (c.automorphism_checked) {
        std::vector<QuotientElem> conj;
        for (const auto& v : values) {
            conj.push_back(v.conjugate());
        }
        for (std::size_t i = 0; i < sys.equations.size(); ++i) {
            if (!sys.equations[i].eval(conj, embed).is_zero()) {
                return reject("equation " + std::to_string(i) +
                              " does not vanish at the conjugate assignment");
            }
        }
    }
    return {true, "the solved assignment is certified and satisfies the system", std::nullopt};
}

}  // namespace tropnet
