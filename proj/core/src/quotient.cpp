#include "tropnet/quotient.hpp"

#include "tropnet/errors.hpp"

namespace tropnet {

QuotientElem QuotientElem::operator*(const QuotientElem& o) const {
    // (a0 + a1 k)(b0 + b1 k) with k^2 = k - 1.
    Rational k2 = c1_ * o.c1_;
    return {c0_ * o.c0_ - k2, c0_ * o.c1_ + c1_ * o.c0_ + k2};
}

QuotientElem QuotientElem::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero in Q[k]/(k^2-k+1)");
    }
    // Norm = x * conj(x) = c0^2 + c0*c1 + c1^2, always a positive rational.
    Rational norm = c0_ * c0_ + c0_ * c1_ + c1_ * c1_;
    QuotientElem conj = conjugate();
    return {conj.c0() / norm, conj.c1() / norm};
}

std::string QuotientElem::str() const {
    if (c1_ == 0) {
        return format_rational(c0_);
    }
    std::string kpart;
    if (c1_ == 1) {
        kpart = "k";
    } else if (c1_ == -1) {
        kpart = "-k";
    } else {
        kpart = format_rational(c1_) + "*k";
    }
    if (c0_ == 0) {
        return kpart;
    }
    if (c1_ > 0) {
        return format_rational(c0_) + " + " + (c1_ == 1 ? "k" : format_rational(c1_) + "*k");
    }
    Rational m = -c1_;
    return format_rational(c0_) + " - " + (m == 1 ? "k" : format_rational(m) + "*k");
}

}  // namespace tropnet
