#include "uifs/rational.hpp"

#include "uifs/errors.hpp"

namespace uifs {

Rational rational_pow(unsigned base, int exponent) {
    BigInt n = 1;
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
        n *= base;
    }
    if (exponent >= 0) {
        return Rational(n);
    }
    return Rational(1, n);
}

Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return ConfigError("invalid rational: \"" + std::string(text) + "\""); };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty() || (part.size() == 1 && (part[0] == '-' || part[0] == '+'))) {
            throw bad();
        }
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw bad();
            }
        }
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw bad();
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace uifs
