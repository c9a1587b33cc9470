#pragma once

#include <string>

#include "tropnet/rational.hpp"

namespace tropnet {

/// Element of Q[k]/(k^2 - k + 1), stored as c0 + c1*k with the representative
/// already reduced modulo the modulus. This is the coefficient field of the
/// solved (4,3) net; k |-> 1 - k is its nontrivial field automorphism
/// (complex conjugation on the two roots (1 -+ sqrt(-3))/2).
class QuotientElem {
public:
    QuotientElem() = default;  // zero
    QuotientElem(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    static QuotientElem from_rational(const Rational& q) { return {q, 0}; }
    /// The residue class of k itself.
    static QuotientElem generator() { return {0, 1}; }

    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }
    bool is_zero() const { return c0_ == 0 && c1_ == 0; }

    QuotientElem operator-() const { return {-c0_, -c1_}; }
    QuotientElem operator+(const QuotientElem& o) const { return {c0_ + o.c0_, c1_ + o.c1_}; }
    QuotientElem operator-(const QuotientElem& o) const { return {c0_ - o.c0_, c1_ - o.c1_}; }
    QuotientElem operator*(const QuotientElem& o) const;
    bool operator==(const QuotientElem& o) const { return c0_ == o.c0_ && c1_ == o.c1_; }

    /// Throws DomainError on zero.
    QuotientElem inverse() const;
    /// The field automorphism k |-> 1 - k.
    QuotientElem conjugate() const { return {c0_ + c1_, -c1_}; }

    /// "c0 + c1*k" style display.
    std::string str() const;

private:
    Rational c0_, c1_;
};

}  // namespace tropnet
