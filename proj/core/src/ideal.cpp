#include "tropnet/ideal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "tropnet/errors.hpp"

namespace tropnet {

namespace {

bool is_nonzero_constant(const MultiPoly& p) { return !p.is_zero() && p.is_constant(); }

// Reduction against a member list that may contain zero entries; quotients
// come back aligned with the full list.
MultiPoly reduce_members(const MultiPoly& p, const std::vector<MultiPoly>& members,
                         std::vector<MultiPoly>* quotients, long* steps, long budget) {
    std::vector<MultiPoly> compact;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!members[i].is_zero()) {
            compact.push_back(members[i]);
            where.push_back(i);
        }
    }
    std::vector<MultiPoly> q;
    MultiPoly r = reduce(p, compact, quotients ? &q : nullptr, steps, budget);
    if (quotients) {
        quotients->assign(members.size(), MultiPoly(p.ring()));
        for (std::size_t i = 0; i < where.size(); ++i) {
            (*quotients)[where[i]] = q[i];
        }
    }
    return r;
}

struct PairKey {
    int lcm_degree;
    ExpVec lcm;
    std::size_t i;
    std::size_t j;

    bool operator<(const PairKey& o) const {
        if (lcm_degree != o.lcm_degree) {
            return lcm_degree < o.lcm_degree;
        }
        if (lcm != o.lcm) {
            return grlex_less(lcm, o.lcm);
        }
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

}  // namespace

CompletionResult complete_basis(const IdealBasis& input, long step_budget) {
    CompletionResult out;
    if (!input.ring) {
        throw MalformedInputError("ideal basis without a ring");
    }

    // Working ring: one fresh inverse variable per nonvanishing condition.
    std::vector<std::string> vars = input.ring->vars();
    for (std::size_t i = 0; i < input.nonvanishing.size(); ++i) {
        std::string name = "y" + std::to_string(i + 1);
        if (input.ring->index_of(name)) {
            throw MalformedInputError("parameter name collides with inverse variable " + name);
        }
        vars.push_back(name);
    }
    out.ring = input.nonvanishing.empty() ? input.ring : make_ring(std::move(vars));

    for (const auto& g : input.generators) {
        out.members.push_back(lift(g, out.ring));
    }
    for (std::size_t i = 0; i < input.nonvanishing.size(); ++i) {
        MultiPoly inv = MultiPoly::variable(out.ring, input.ring->arity() + i);
        out.members.push_back(lift(input.nonvanishing[i], out.ring) * inv -
                              MultiPoly::constant(out.ring, 1));
    }
    out.generator_count = out.members.size();

    auto finish_trivial = [&](std::size_t member_index) {
        const MultiPoly& c = out.members[member_index];
        std::vector<MultiPoly> cof(out.members.size(), MultiPoly(out.ring));
        cof[member_index] = MultiPoly::constant(out.ring, Rational(1) / c.constant_value());
        out.decision = IdealDecision::Trivial;
        out.unit = TrackedPoly{MultiPoly::constant(out.ring, 1), std::move(cof)};
    };

    for (std::size_t i = 0; i < out.members.size(); ++i) {
        if (is_nonzero_constant(out.members[i])) {
            finish_trivial(i);
            return out;
        }
    }

    std::set<PairKey> queue;
    auto push_pairs_with = [&](std::size_t j) {
        if (out.members[j].is_zero()) {
            return;
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (out.members[i].is_zero()) {
                continue;
            }
            ExpVec l = monomial_lcm(out.members[i].leading_monomial(),
                                    out.members[j].leading_monomial());
            queue.insert(PairKey{total_degree(l), std::move(l), i, j});
        }
    };
    for (std::size_t j = 0; j < out.members.size(); ++j) {
        push_pairs_with(j);
    }

    while (!queue.empty()) {
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        const MultiPoly& fi = out.members[key.i];
        const MultiPoly& fj = out.members[key.j];
        const ExpVec& li = fi.leading_monomial();
        const ExpVec& lj = fj.leading_monomial();
        // Product criterion: coprime leading monomials give an S-polynomial
        // that always reduces to zero.
        ExpVec sum(li.size());
        for (std::size_t v = 0; v < li.size(); ++v) {
            sum[v] = li[v] + lj[v];
        }
        if (key.lcm == sum) {
            continue;
        }
        MultiPoly u = MultiPoly::from_terms(
            out.ring, {{monomial_quotient(key.lcm, li), Rational(1) / fi.leading_coeff()}});
        MultiPoly v = MultiPoly::from_terms(
            out.ring, {{monomial_quotient(key.lcm, lj), Rational(1) / fj.leading_coeff()}});
        MultiPoly s = u * fi - v * fj;

        std::vector<MultiPoly> q;
        MultiPoly r = reduce_members(s, out.members, &q, &out.reduction_steps, step_budget);
        if (r.is_zero()) {
            continue;
        }
        // Cofactors of the raw remainder over current members, then rescaled
        // along with the remainder's normalization.
        MultiPoly rn = r.normalized();
        Rational scale = rn.leading_coeff() / r.leading_coeff();
        std::vector<MultiPoly> cof(out.members.size(), MultiPoly(out.ring));
        cof[key.i] = u;
        cof[key.j] = MultiPoly(out.ring) - v;
        for (std::size_t k = 0; k < cof.size(); ++k) {
            cof[k] = (cof[k] - q[k]) * scale;
        }
        out.members.push_back(rn);
        out.steps.push_back(TrackedPoly{rn, std::move(cof)});
        if (is_nonzero_constant(rn)) {
            finish_trivial(out.members.size() - 1);
            return out;
        }
        push_pairs_with(out.members.size() - 1);
    }
    out.decision = IdealDecision::Proper;
    return out;
}

IdealDecision ideal_contains_one(const IdealBasis& input, long step_budget) {
    return complete_basis(input, step_budget).decision;
}

std::optional<std::vector<MultiPoly>> membership(const MultiPoly& p,
                                                 const CompletionResult& completion,
                                                 long step_budget) {
    MultiPoly lifted = lift(p, completion.ring);
    long steps = 0;
    std::vector<MultiPoly> q;
    MultiPoly r = reduce_members(lifted, completion.members, &q, &steps, step_budget);
    if (r.is_zero()) {
        return q;
    }
    if (completion.unit) {
        // In the trivial case every polynomial is a member: write the
        // remainder as r * (the unit combination).
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = q[i] + r * completion.unit->cofactors[i];
        }
        return q;
    }
    return std::nullopt;
}

namespace {

using NormalForm = std::map<ExpVec, Rational, GrlexLess>;

// Coefficients expressing `target` in the span of `vectors`, if any.
std::optional<std::vector<Rational>> solve_combination(const std::vector<NormalForm>& vectors,
                                                       const NormalForm& target) {
    std::set<ExpVec, GrlexLess> monos;
    for (const auto& v : vectors) {
        for (const auto& [m, c] : v) {
            monos.insert(m);
        }
    }
    for (const auto& [m, c] : target) {
        monos.insert(m);
    }
    const std::size_t n = vectors.size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& m : monos) {
        std::vector<Rational> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            auto it = vectors[j].find(m);
            if (it != vectors[j].end()) {
                row[j] = it->second;
            }
        }
        auto it = target.find(m);
        if (it != target.end()) {
            row[n] = it->second;
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::optional<std::size_t>> pivot_row(n);
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        Rational inv = Rational(1) / rows[next][col];
        for (auto& x : rows[next]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) {
                continue;
            }
            Rational f = rows[r][col];
            for (std::size_t cidx = 0; cidx <= n; ++cidx) {
                rows[r][cidx] -= f * rows[next][cidx];
            }
        }
        pivot_row[col] = next;
        ++next;
    }
    for (std::size_t r = next; r < rows.size(); ++r) {
        if (rows[r][n] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> sol(n);
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row[col]) {
            sol[col] = rows[*pivot_row[col]][n];
        }
    }
    return sol;
}

NormalForm normal_form_of(const MultiPoly& p, const CompletionResult& completion) {
    long steps = 0;
    MultiPoly r = reduce_members(p, completion.members, nullptr, &steps, 1000000);
    return r.terms();
}

}  // namespace

std::optional<MultiPoly> minimal_polynomial(const CompletionResult& completion,
                                            std::size_t var_index, int max_degree) {
    MultiPoly x = MultiPoly::variable(completion.ring, var_index);
    MultiPoly power = MultiPoly::constant(completion.ring, 1);
    std::vector<NormalForm> seen;
    for (int n = 0; n <= max_degree; ++n) {
        NormalForm nf = normal_form_of(power, completion);
        if (auto combo = solve_combination(seen, nf)) {
            MultiPoly result(completion.ring);
            ExpVec e(completion.ring->arity(), 0);
            e[var_index] = n;
            result.add_term(e, 1);
            MultiPoly lower = MultiPoly::constant(completion.ring, 1);
            for (int i = 0; i < n; ++i) {
                result = result - lower * (*combo)[static_cast<std::size_t>(i)];
                lower = lower * x;
            }
            return result;
        }
        seen.push_back(std::move(nf));
        power = power * x;
    }
    return std::nullopt;
}

std::optional<std::array<Rational, 2>> linear_in(const CompletionResult& completion,
                                                 std::size_t var_index,
                                                 std::size_t basis_var_index) {
    std::vector<NormalForm> basis;
    basis.push_back(normal_form_of(MultiPoly::constant(completion.ring, 1), completion));
    basis.push_back(
        normal_form_of(MultiPoly::variable(completion.ring, basis_var_index), completion));
    NormalForm target =
        normal_form_of(MultiPoly::variable(completion.ring, var_index), completion);
    auto combo = solve_combination(basis, target);
    if (!combo) {
        return std::nullopt;
    }
    return std::array<Rational, 2>{(*combo)[0], (*combo)[1]};
}

}  // namespace tropnet
