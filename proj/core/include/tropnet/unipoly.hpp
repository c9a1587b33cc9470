#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tropnet/rational.hpp"

namespace tropnet {

/// Sparse exact polynomial in the degeneration variable t over Q.
///
/// The degree of the zero polynomial is a distinguished "minus infinity"
/// marker (an empty optional); degree_checked() refuses to hand it out as an
/// integer, so downstream degree arithmetic can never see a phantom zero.
class UniPoly {
public:
    using TermMap = std::map<long, Rational>;

    UniPoly() = default;  // zero polynomial

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(long exp, const Rational& coeff);
    /// t^1
    static UniPoly t();
    /// Sum of coeff * t^exp over the given (exp, coeff) pairs.
    static UniPoly from_terms(std::initializer_list<std::pair<long, Rational>> terms);

    bool is_zero() const { return terms_.empty(); }
    /// Empty optional for the zero polynomial.
    std::optional<long> degree() const;
    /// Throws ZeroDegreeError on the zero polynomial.
    long degree_checked() const;
    Rational coeff(long exp) const;
    /// Coefficient of the highest power; throws ZeroDegreeError on zero.
    const Rational& leading_coeff() const;
    const TermMap& terms() const { return terms_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return terms_ == o.terms_; }

    /// Human-readable form, ascending powers: "t - t^2 + 2*t^9".
    std::string str() const;

private:
    TermMap terms_;  // exponent -> nonzero coefficient
    void insert_term(long exp, const Rational& coeff);
};

}  // namespace tropnet
