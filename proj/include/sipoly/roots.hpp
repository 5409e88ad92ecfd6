#pragma once

#include "sipoly/polynomial.hpp"

namespace sipoly {

/// Half-open isolating interval: exactly one root of the target polynomial
/// lies in (lo, hi]. sign_at_lo is the sign of p(lo) and is never zero.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int sign_at_lo = 0;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// Standard signed-remainder chain p, p', -rem(...), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sign variations of the chain evaluated at x, zeros skipped.
int sturm_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Number of real roots in the open interval (lo, hi). Requires a square-free
/// p with p(lo) != 0 and p(hi) != 0; a root at an endpoint is an error.
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// 1 + max_k |a_k / a_0|: every complex root lies strictly inside this radius.
Rational cauchy_root_bound(const Polynomial& p);

/// Disjoint isolating intervals, one per real root, sorted ascending.
/// Requires p square-free (throws std::domain_error otherwise).
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

/// Bisects iv until its width is at most the requested one. The same root
/// stays inside; an exact hit on the root pins the interval around it.
IsolatingInterval refine(const Polynomial& p, IsolatingInterval iv,
                         const Rational& width);

enum class SiKind { kind_i, kind_ii, not_si };

enum class SiFailure {
    none,
    non_real_roots,
    repeated_roots,
    wrong_sign_pattern,
    magnitude_order,
};

struct SiVerdict {
    SiKind kind = SiKind::not_si;
    SiFailure reason = SiFailure::none;
    bool indeterminate = false;  // separation cap reached before a decision
    /// Root intervals; magnitude-descending for SI verdicts, ascending otherwise.
    std::vector<IsolatingInterval> witnesses;
};

/// Definitional check: isolates the roots, separates their magnitudes with
/// exact interval arithmetic, and matches the alternating sign patterns of
/// the two self-interlacing classes.
SiVerdict si_oracle(const Polynomial& p);

enum class Stability { stable, not_stable, indeterminate };

/// Numeric verdict from a simultaneous root iteration carried out in
/// extended-precision floating point. The verdict margin is
/// 1e-9 * cauchy_root_bound(p); roots inside the margin strip around the
/// imaginary axis (and iteration failures) give `indeterminate`.
Stability stability_oracle(const Polynomial& p);

const char* to_string(SiKind kind);
const char* to_string(SiFailure reason);
const char* to_string(Stability verdict);

}  // namespace sipoly
