#pragma once

#include "sipoly/laurent.hpp"
#include "sipoly/polynomial.hpp"

namespace sipoly {

enum class CfTerminal {
    finite,        // ladder ends on an odd (c*u) rung
    infinite_last  // ladder ends on an even rung; the trailing odd rung is absent
};

/// Coefficients of the alternating ladder
///   Phi = 1/(c_1 u + 1/(c_2 + 1/(c_3 u + ... ))).
struct ContinuedFraction {
    std::vector<Rational> c;
    CfTerminal terminal = CfTerminal::finite;

    bool operator==(const ContinuedFraction& rhs) const {
        return c == rhs.c && terminal == rhs.terminal;
    }
};

/// Raised when the ladder's degree pattern breaks, i.e. a leading coefficient
/// that the expansion needs turns out to be zero.
class NoExpansionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Euclidean-type expansion alternating extraction of c*u and c rungs.
/// Requires a strictly proper input; throws NoExpansionError on pattern break.
ContinuedFraction cf_expand(const RationalFunction& phi);

/// Closed form from the Hurwitz minors:
///   c_i = Delta_(i-1)^2 / (Delta_(i-2) Delta_i),  i = 1..n,
/// with Delta_(-1) = Delta_0 = 1. Throws NoExpansionError when a required
/// minor vanishes.
ContinuedFraction cf_coeffs_from_minors(const Polynomial& p);

/// Folds the ladder back; result is in lowest terms with a monic denominator.
RationalFunction cf_reconstruct(const ContinuedFraction& cf);

/// Sign/terminal pattern of a kind-I self-interlacing source of the given
/// degree: (-1)^i c_i > 0 for i = 1..2[n/2], then c_n < 0 for odd n or a
/// missing trailing rung for even n.
bool cf_sign_check(const ContinuedFraction& cf, int degree);

const char* to_string(CfTerminal terminal);

}  // namespace sipoly
