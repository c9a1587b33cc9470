#include "tropnet/rational.hpp"

#include "tropnet/errors.hpp"

namespace tropnet {

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw MalformedInputError("empty rational literal");
    }
    auto check_int = [&](const std::string& s) {
        if (s.empty()) {
            throw MalformedInputError("bad rational literal: " + text);
        }
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw MalformedInputError("bad rational literal: " + text);
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw MalformedInputError("bad rational literal: " + text);
            }
        }
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) {
        throw MalformedInputError("zero denominator: " + text);
    }
    return Rational(BigInt(num), d);
}

std::string format_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += "/" + denominator(q).str();
    }
    return out;
}

}  // namespace tropnet
