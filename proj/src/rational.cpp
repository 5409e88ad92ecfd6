#include "sipoly/rational.hpp"

namespace sipoly {

namespace {

Integer parse_integer_token(std::string_view s, std::string_view whole) {
    bool negative = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw ParseError("malformed rational token '" + std::string(whole) + "'");
    Integer value = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("malformed rational token '" + std::string(whole) + "'");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    if (token.empty()) throw ParseError("empty rational token");
    const std::size_t slash = token.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer_token(token, token));
    if (token.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("malformed rational token '" + std::string(token) + "'");
    Integer num = parse_integer_token(token.substr(0, slash), token);
    Integer den = parse_integer_token(token.substr(slash + 1), token);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(token) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& x) { return x.str(); }

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace sipoly
