#pragma once

#include "sipoly/polynomial.hpp"
#include "sipoly/roots.hpp"

namespace sipoly {

/// Quotient of two polynomials; the denominator is nonzero and kept with a
/// positive leading coefficient (both parts are flipped together).
struct RationalFunction {
    Polynomial num;
    Polynomial den;

    RationalFunction() = default;
    RationalFunction(Polynomial numerator, Polynomial denominator);

    /// Lowest terms with a monic denominator.
    RationalFunction canonical() const;

    /// Equality as functions: cross-multiplied comparison.
    bool same_function(const RationalFunction& other) const;
};

/// The function Phi with z Phi(z^2) = (p(z) - (-1)^n p(-z)) / (p(z) + (-1)^n p(-z)).
/// Through the even/odd parts: P_o/P_e for even n, P_e/(u P_o) for odd n
/// (odd degree puts a pole at zero).
RationalFunction associated_phi(const Polynomial& p);

/// R(z) = (-1)^n p(-z) / p(z), kept uncancelled: common factors of the two
/// parts are a degeneracy the callers must be able to see.
RationalFunction r_function(const Polynomial& p);

/// Laurent expansion at infinity: f = constant + s_0/z + s_1/z^2 + ...
struct LaurentCoeffs {
    Rational constant;
    std::vector<Rational> s;  // s_0..s_m
};

/// First m+1 coefficients s_0..s_m; requires deg num <= deg den.
LaurentCoeffs laurent_coeffs(const RationalFunction& f, int m);

/// j x j Hankel determinant with top-left s_0.
Rational hankel_D(const LaurentCoeffs& coeffs, int j);

/// j x j Hankel determinant with top-left s_1.
Rational hankel_Dhat(const LaurentCoeffs& coeffs, int j);

struct HankelData {
    LaurentCoeffs s;
    std::vector<Rational> D;     // D_1..D_J
    std::vector<Rational> Dhat;  // Dhat_1..Dhat_J
};

/// Coefficients plus both determinant sequences up to order J.
HankelData hankel_data(const RationalFunction& f, int J);

struct IdentityEntry {
    int j = 0;
    Rational lhs;
    Rational rhs;
    bool ok = false;
};

struct IdentityReport {
    std::vector<IdentityEntry> entries;
    bool pass = false;
};

/// Hurwitz determinant formula tying the Hankel minors of Phi to the Hurwitz
/// minors of p:
///   D_j(Phi)    = Delta_(2j-1)(p) / a_0^(2j-1),   j = 1..[(n+1)/2]
///   Dhat_j(Phi) = (-1)^j Delta_(2j)(p) / a_0^(2j), j = 1..[n/2]
/// An exact identity for every real polynomial.
IdentityReport hurwitz_formula_check(const Polynomial& p);

/// Product identity for the Hankel minors of R:
///   a_0^(2j) D_j(R) = (-1)^(j(j+1)/2) 2^j a_0 Delta_(j-1)(p) Delta_j(p),
/// for j = 1..n with Delta_0 = 1. An exact identity for every real polynomial.
IdentityReport r_hankel_product_check(const Polynomial& p);

struct PoleSignReport {
    bool denominator_square_free = false;
    bool all_poles_real = false;
    bool zero_pole = false;        // pole at u = 0
    bool signs_ok = false;         // > 0 (even n) or >= 0 with one at 0 (odd n)
    bool pass = false;
    std::vector<IsolatingInterval> poles;
};

/// Locates the real poles of Phi and checks the positivity pattern required
/// of a kind-I self-interlacing source (necessary, not sufficient).
PoleSignReport phi_pole_signs(const Polynomial& p);

}  // namespace sipoly
