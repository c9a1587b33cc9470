#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropnet/rational.hpp"

namespace tropnet {

/// Immutable ordered parameter list shared by the polynomials of one system.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> vars);

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const PolyRing& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);

using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);

/// Graded lexicographic order: compare total degree first, then the exponent
/// vectors lexicographically (earlier variables weigh more).
bool grlex_less(const ExpVec& a, const ExpVec& b);

struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_less(a, b); }
};

bool monomial_divides(const ExpVec& a, const ExpVec& b);
ExpVec monomial_quotient(const ExpVec& b, const ExpVec& a);
ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b);

/// Sparse exact multivariate polynomial over Q under graded-lex term order.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexLess>;

    MultiPoly() = default;  // ringless zero; usable only as a placeholder
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, const Rational& c);
    static MultiPoly variable(const RingPtr& ring, std::size_t index);
    static MultiPoly variable(const RingPtr& ring, std::string_view name);
    static MultiPoly from_terms(RingPtr ring,
                                const std::vector<std::pair<ExpVec, Rational>>& terms);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Requires is_constant(); the zero polynomial yields 0.
    Rational constant_value() const;

    /// Total degree; throws ZeroDegreeError on the zero polynomial.
    int degree() const;
    const ExpVec& leading_monomial() const;
    const Rational& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const;

    void add_term(const ExpVec& exp, const Rational& coeff);

    /// gcd of coefficient numerators / lcm of denominators (positive; 0 for 0).
    Rational content() const;
    /// Divided by content, leading coefficient made positive. Zero stays zero.
    MultiPoly normalized() const;
    /// Scalar multiple test (q * other == *this for some nonzero rational q).
    bool proportional_to(const MultiPoly& o) const;

    /// Evaluation into any commutative ring K: `values` per ring variable,
    /// `from_rational` embeds Q into K. K needs +, * and a default zero.
    template <class K, class FromQ>
    K eval(const std::vector<K>& values, FromQ from_rational) const;

    std::string str() const;

private:
    RingPtr ring_;
    TermMap terms_;
    void check_compatible(const MultiPoly& o) const;
};

/// Multivariate division remainder of p by the basis list (full reduction:
/// no remainder term is divisible by any basis leading term). If `quotients`
/// is given it receives one cofactor per basis element with
/// p == sum(quotients[i] * basis[i]) + remainder.
/// Each elementary reduction bumps *steps (when given); exceeding
/// `step_budget` (if >= 0) throws ResourceLimitError.
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                 std::vector<MultiPoly>* quotients = nullptr, long* steps = nullptr,
                 long step_budget = -1);

/// Maps p into `target` (which must contain all of p's variables by name).
MultiPoly lift(const MultiPoly& p, const RingPtr& target);

template <class K, class FromQ>
K MultiPoly::eval(const std::vector<K>& values, FromQ from_rational) const {
    K acc{};
    for (const auto& [exp, coeff] : terms_) {
        K term = from_rational(coeff);
        for (std::size_t i = 0; i < exp.size(); ++i) {
            for (int k = 0; k < exp[i]; ++k) {
                term = term * values[i];
            }
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace tropnet
