#pragma once

#include "sipoly/polynomial.hpp"
#include "sipoly/roots.hpp"

#include <random>

namespace sipoly {

/// Polynomial together with the construction data it came from.
struct GeneratedPoly {
    Polynomial poly;
    std::vector<Rational> roots;  // empty when roots are not constructed
};

/// Positive rational with numerator 1..(8*denominator_cap) and denominator
/// 1..denominator_cap.
Rational random_positive_rational(std::mt19937_64& rng, int denominator_cap = 6);

/// Distinct positive magnitudes in descending order with alternating signs:
/// kind I starts positive, kind II negative. Expanded from its roots.
GeneratedPoly random_si_poly(std::mt19937_64& rng, int degree,
                             SiKind kind = SiKind::kind_i);

/// Product of (z + a) and (z^2 + b z + c) factors with positive rational
/// parameters; every root lies in the open left half-plane.
GeneratedPoly random_stable_poly(std::mt19937_64& rng, int degree);

/// Dense random coefficients with numerators in [-bound, bound] and a nonzero
/// leading coefficient.
Polynomial random_poly(std::mt19937_64& rng, int degree, int bound = 12);

/// Random data for the tridiagonal generator: b_1 of the requested sign,
/// b_2..b_n positive.
TridiagonalSpec random_tridiagonal(std::mt19937_64& rng, int n, bool positive_b1);

struct BinomialDual {
    Polynomial poly;                    // dual of (z + a)^n
    std::vector<double> expected_roots; // (-1)^(n-1) a tan(pi (4k+1) / (4n)), k = 1..n
    int n = 0;
    Rational a;
};

/// The closed-form root family: dual((z + a)^n) has n distinct real roots at
/// the tangent values above.
BinomialDual binomial_dual(int n, const Rational& a);

}  // namespace sipoly
