#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sipoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when rational or polynomial text cannot be parsed.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Integer& x) { return x.sign(); }

/// Parses "p" or "p/q" with an optional leading sign on either part.
/// Throws ParseError on malformed tokens or a zero denominator.
Rational parse_rational(std::string_view token);

/// Canonical text form: reduced, denominator positive and omitted when 1.
std::string to_string(const Rational& x);

double to_double(const Rational& x);

}  // namespace sipoly
