#include "tropnet/unipoly.hpp"

#include "tropnet/errors.hpp"

namespace tropnet {

void UniPoly::insert_term(long exp, const Rational& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, fresh] = terms_.try_emplace(exp, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    p.insert_term(0, c);
    return p;
}

UniPoly UniPoly::monomial(long exp, const Rational& coeff) {
    UniPoly p;
    p.insert_term(exp, coeff);
    return p;
}

UniPoly UniPoly::t() { return monomial(1, 1); }

UniPoly UniPoly::from_terms(std::initializer_list<std::pair<long, Rational>> terms) {
    UniPoly p;
    for (const auto& [e, c] : terms) {
        p.insert_term(e, c);
    }
    return p;
}

std::optional<long> UniPoly::degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

long UniPoly::degree_checked() const {
    if (terms_.empty()) {
        throw ZeroDegreeError("degree of the zero polynomial requested");
    }
    return terms_.rbegin()->first;
}

Rational UniPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& UniPoly::leading_coeff() const {
    if (terms_.empty()) {
        throw ZeroDegreeError("leading coefficient of the zero polynomial requested");
    }
    return terms_.rbegin()->second;
}

UniPoly UniPoly::operator-() const {
    UniPoly p;
    for (const auto& [e, c] : terms_) {
        p.terms_.emplace(e, -c);
    }
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly p = *this;
    for (const auto& [e, c] : o.terms_) {
        p.insert_term(e, c);
    }
    return p;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly p = *this;
    for (const auto& [e, c] : o.terms_) {
        p.insert_term(e, -c);
    }
    return p;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly p;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            p.insert_term(e1 + e2, c1 * c2);
        }
    }
    return p;
}

UniPoly UniPoly::operator*(const Rational& c) const {
    UniPoly p;
    if (c == 0) {
        return p;
    }
    for (const auto& [e, k] : terms_) {
        p.terms_.emplace(e, k * c);
    }
    return p;
}

std::string UniPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) {
                a = -a;
            }
        }
        std::string mag = format_rational(a);
        if (e == 0) {
            out += mag;
        } else {
            if (mag != "1") {
                out += mag + "*";
            }
            out += (e == 1) ? "t" : "t^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

}  // namespace tropnet
