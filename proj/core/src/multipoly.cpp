#include "tropnet/multipoly.hpp"

#include <algorithm>

#include "tropnet/errors.hpp"

namespace tropnet {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = i + 1; j < vars_.size(); ++j) {
            if (vars_[i] == vars_[j]) {
                throw MalformedInputError("duplicate ring variable: " + vars_[i]);
            }
        }
    }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
}

int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) {
        d += x;
    }
    return d;
}

bool grlex_less(const ExpVec& a, const ExpVec& b) {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

bool monomial_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

ExpVec monomial_quotient(const ExpVec& b, const ExpVec& a) {
    ExpVec q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        q[i] = b[i] - a[i];
    }
    return q;
}

ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        l[i] = std::max(a[i], b[i]);
    }
    return l;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (ring_ == o.ring_) {
        return;
    }
    if (ring_ && o.ring_ && *ring_ == *o.ring_) {
        return;
    }
    throw MalformedInputError("polynomials from different rings combined");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
    MultiPoly p(std::move(ring));
    p.add_term(ExpVec(p.ring_->arity(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::size_t index) {
    if (index >= ring->arity()) {
        throw MalformedInputError("variable index out of range");
    }
    MultiPoly p(ring);
    ExpVec e(ring->arity(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) {
        throw MalformedInputError("no such ring variable: " + std::string(name));
    }
    return variable(ring, *idx);
}

MultiPoly MultiPoly::from_terms(RingPtr ring,
                                const std::vector<std::pair<ExpVec, Rational>>& terms) {
    MultiPoly p(std::move(ring));
    for (const auto& [e, c] : terms) {
        p.add_term(e, c);
    }
    return p;
}

void MultiPoly::add_term(const ExpVec& exp, const Rational& coeff) {
    if (!ring_) {
        throw MalformedInputError("ringless polynomial mutated");
    }
    if (exp.size() != ring_->arity()) {
        throw MalformedInputError("exponent vector arity mismatch");
    }
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

bool MultiPoly::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) {
        return 0;
    }
    if (!is_constant()) {
        throw MalformedInputError("constant_value of a nonconstant polynomial");
    }
    return terms_.begin()->second;
}

int MultiPoly::degree() const {
    if (terms_.empty()) {
        throw ZeroDegreeError("degree of the zero polynomial requested");
    }
    return total_degree(terms_.rbegin()->first);
}

const ExpVec& MultiPoly::leading_monomial() const {
    if (terms_.empty()) {
        throw ZeroDegreeError("leading monomial of the zero polynomial requested");
    }
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) {
        throw ZeroDegreeError("leading coefficient of the zero polynomial requested");
    }
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(ring_);
    for (const auto& [e, c] : terms_) {
        p.terms_.emplace(e, -c);
    }
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly p = *this;
    if (!p.ring_) {
        p.ring_ = o.ring_;
    }
    for (const auto& [e, c] : o.terms_) {
        p.add_term(e, c);
    }
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly p = *this;
    if (!p.ring_) {
        p.ring_ = o.ring_;
    }
    for (const auto& [e, c] : o.terms_) {
        p.add_term(e, -c);
    }
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly p(ring_ ? ring_ : o.ring_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = e1[i] + e2[i];
            }
            p.add_term(e, c1 * c2);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly p(ring_);
    if (c == 0) {
        return p;
    }
    for (const auto& [e, k] : terms_) {
        p.terms_.emplace(e, k * c);
    }
    return p;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (ring_ && o.ring_ && !(*ring_ == *o.ring_)) {
        return false;
    }
    return terms_ == o.terms_;
}

Rational MultiPoly::content() const {
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
        den_lcm = lcm(den_lcm, BigInt(denominator(c)));
    }
    if (num_gcd == 0) {
        return 0;
    }
    return Rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) {
        return *this;
    }
    Rational c = content();
    if (leading_coeff() < 0) {
        c = -c;
    }
    return *this * (Rational(1) / c);
}

bool MultiPoly::proportional_to(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) {
        return is_zero() && o.is_zero();
    }
    if (terms_.size() != o.terms_.size()) {
        return false;
    }
    Rational q = leading_coeff() / o.leading_coeff();
    return *this == o * q;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // Print leading term first (descending order reads naturally).
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational a = it->second;
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
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += ring_->vars()[i];
            if (e > 1) {
                mono += "^" + std::to_string(e);
            }
        }
        std::string mag = format_rational(a);
        if (mono.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
        first = false;
    }
    return out;
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                 std::vector<MultiPoly>* quotients, long* steps, long step_budget) {
    if (quotients) {
        quotients->assign(basis.size(), MultiPoly(p.ring()));
    }
    MultiPoly rem(p.ring());
    MultiPoly h = p;
    while (!h.is_zero()) {
        const ExpVec& lm = h.leading_monomial();
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const MultiPoly& b = basis[i];
            if (b.is_zero() || !monomial_divides(b.leading_monomial(), lm)) {
                continue;
            }
            ExpVec q = monomial_quotient(lm, b.leading_monomial());
            Rational qc = h.leading_coeff() / b.leading_coeff();
            MultiPoly mono = MultiPoly::from_terms(p.ring(), {{q, qc}});
            h = h - mono * b;
            if (quotients) {
                (*quotients)[i] = (*quotients)[i] + mono;
            }
            if (steps) {
                ++*steps;
                if (step_budget >= 0 && *steps > step_budget) {
                    throw ResourceLimitError("reduction step budget exhausted");
                }
            }
            divided = true;
            break;
        }
        if (!divided) {
            // Move the leading term into the remainder.
            rem.add_term(lm, h.leading_coeff());
            MultiPoly lead = MultiPoly::from_terms(p.ring(), {{lm, h.leading_coeff()}});
            h = h - lead;
        }
    }
    return rem;
}

MultiPoly lift(const MultiPoly& p, const RingPtr& target) {
    if (!p.ring()) {
        return MultiPoly(target);
    }
    std::vector<std::size_t> map(p.ring()->arity());
    for (std::size_t i = 0; i < map.size(); ++i) {
        auto idx = target->index_of(p.ring()->vars()[i]);
        if (!idx) {
            throw MalformedInputError("lift target lacks variable " + p.ring()->vars()[i]);
        }
        map[i] = *idx;
    }
    MultiPoly out(target);
    for (const auto& [e, c] : p.terms()) {
        ExpVec e2(target->arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e2[map[i]] = e[i];
        }
        out.add_term(e2, c);
    }
    return out;
}

}  // namespace tropnet
