#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tropnet/multipoly.hpp"

namespace tropnet {

/// Generators of an ideal plus polynomials asserted nonzero. Triviality is
/// decided after adjoining one fresh inverse variable per nonvanishing entry
/// (generator q * y - 1), which turns each side condition into membership.
struct IdealBasis {
    RingPtr ring;
    std::vector<MultiPoly> generators;
    std::vector<MultiPoly> nonvanishing;
};

enum class IdealDecision {
    Trivial,  ///< 1 lies in the (saturated) ideal
    Proper,   ///< completed basis contains no unit
};

/// Polynomial together with its cofactor representation over a member list:
/// poly == sum(cofactors[i] * members[i]).
struct TrackedPoly {
    MultiPoly poly;
    std::vector<MultiPoly> cofactors;
};

/// Replayable trace of a basis completion. `members` starts with the working
/// generators (input generators lifted to `ring`, then the adjoined inverse
/// relations) and grows by one entry per step; step i expresses members
/// [generator_count + i] over the members before it.
struct CompletionResult {
    IdealDecision decision = IdealDecision::Proper;
    RingPtr ring;
    std::size_t generator_count = 0;
    std::vector<MultiPoly> members;
    std::vector<TrackedPoly> steps;
    /// Set when trivial: a nonzero constant as a combination of members.
    std::optional<TrackedPoly> unit;
    long reduction_steps = 0;
};

/// Buchberger completion with cofactor tracking; deterministic pair order
/// (smallest lcm total degree, then term order on the lcm, then indices).
/// Stops early once a nonzero constant enters the basis. Throws
/// ResourceLimitError when elementary reductions exceed `step_budget`.
CompletionResult complete_basis(const IdealBasis& input, long step_budget = 100000);

/// Convenience wrapper: just the decision.
IdealDecision ideal_contains_one(const IdealBasis& input, long step_budget = 100000);

/// Cofactors of p over completion.members when p lies in the ideal
/// (p == sum cof[i] * members[i]), nullopt otherwise. p may live in the
/// original (smaller) ring; it is lifted first.
std::optional<std::vector<MultiPoly>> membership(const MultiPoly& p,
                                                 const CompletionResult& completion,
                                                 long step_budget = 100000);

/// Monic univariate relation of smallest degree satisfied by the given
/// variable modulo the completed ideal: finds the least n with
/// NF(x^n) in span(NF(x^0), ..., NF(x^(n-1))) and returns
/// x^n - sum(a_i x^i) as an element of completion.ring. Returns the constant 1
/// for the trivial ideal and nullopt if no relation exists up to max_degree.
std::optional<MultiPoly> minimal_polynomial(const CompletionResult& completion,
                                            std::size_t var_index, int max_degree = 8);

/// Rationals (alpha, beta) with var == alpha + beta * basis_var modulo the
/// ideal, when the normal form of var is such a combination.
std::optional<std::array<Rational, 2>> linear_in(const CompletionResult& completion,
                                                 std::size_t var_index,
                                                 std::size_t basis_var_index);

}  // namespace tropnet
