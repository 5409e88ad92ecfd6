#pragma once

#include "sipoly/hurwitz.hpp"
#include "sipoly/laurent.hpp"
#include "sipoly/polynomial.hpp"
#include "sipoly/roots.hpp"
#include "sipoly/stieltjes.hpp"

#include <complex>
#include <optional>

namespace sipoly {

/// p itself when the leading coefficient is positive, otherwise -p.
/// Negation moves no root, so every classification below is unchanged.
Polynomial normalize_leading(const Polynomial& p, bool* flipped = nullptr);

struct CriterionResult {
    bool verdict = false;
    bool boundary = false;  // a value that must be strictly signed is zero
    std::vector<std::string> witness;
};

/// Necessary coefficient signs for kind-I self-interlacing:
/// (-1)^(j(j+1)/2) a_j > 0 for j = 0..n.
CriterionResult stodola_detail(const Polynomial& p);

/// Hurwitz-minor test for kind-I self-interlacing:
/// (-1)^j Delta_(2j-1) > 0 (j = 1..[(n+1)/2]) and Delta_(2j) > 0 (j = 1..[n/2]).
CriterionResult si_hurwitz_detail(const Polynomial& p);

/// Mixed minor/coefficient test for kind-I self-interlacing:
/// (-1)^j Delta_(2j-1) > 0 (j = 1..[(n+1)/2]) and (-1)^j a_(2j) > 0 (j = 1..[n/2]).
CriterionResult si_lienard_chipart_detail(const Polynomial& p);

/// Classical stability test: Delta_j > 0 for j = 1..n.
CriterionResult hurwitz_classic_detail(const Polynomial& p);

/// Hankel stability test: (-1)^(j(j+1)/2) D_j(R) > 0 for j = 1..n.
CriterionResult stability_hankel_detail(const Polynomial& p);

inline bool stodola_check(const Polynomial& p) { return stodola_detail(p).verdict; }
inline bool si_hurwitz_criterion(const Polynomial& p) { return si_hurwitz_detail(p).verdict; }
inline bool si_lienard_chipart(const Polynomial& p) { return si_lienard_chipart_detail(p).verdict; }
inline bool hurwitz_classic(const Polynomial& p) { return hurwitz_classic_detail(p).verdict; }
inline bool stability_hankel_criterion(const Polynomial& p) { return stability_hankel_detail(p).verdict; }

std::complex<double> evaluate_complex(const Polynomial& p, std::complex<double> z);

struct UnitDiscProbe {
    double max_abs = 0.0;
    int points = 0;
    bool pass = false;  // advisory: max |R| < 1 on the sampled grid
};

/// Samples |R(z)| on a deterministic grid in the open right half-plane.
/// Requires an input that passes the classical minor test.
UnitDiscProbe rhp_unit_disc_probe(const Polynomial& p, int samples);

struct DualityResidualEntry {
    IsolatingInterval interval;  // refined root interval of p
    Rational midpoint;
    Rational residual;  // min(|Re - Im|, |Re + Im|) of dual(p) at i*midpoint
    bool ok = false;    // residual <= scale_bound * width
};

struct DualityArgumentReport {
    Rational scale_bound;  // derivative bound for the rotated dual on the root range
    Rational width;
    std::vector<DualityResidualEntry> entries;
    bool pass = false;
};

/// At every root of a kind-I self-interlacing p, the dual polynomial
/// evaluated on the imaginary axis lands on |Re| = |Im|. Evaluates the dual
/// at i * midpoint of each refined root interval, in exact arithmetic, and
/// bounds the residual linearly in the interval width.
DualityArgumentReport duality_argument_check(const Polynomial& p, const Rational& width);

struct CriteriaSet {
    CriterionResult stodola;
    CriterionResult si_hurwitz;
    CriterionResult si_lienard_chipart;
    CriterionResult hurwitz_classic;
    CriterionResult stability_hankel;

    bool any_boundary() const {
        return stodola.boundary || si_hurwitz.boundary || si_lienard_chipart.boundary ||
               hurwitz_classic.boundary || stability_hankel.boundary;
    }
};

CriteriaSet run_criteria(const Polynomial& p);

struct ClassificationReport {
    std::string input_text;
    bool normalized = false;

    CriteriaSet criteria;            // on the normalized input
    CriteriaSet dual_criteria;       // on its dual
    CriteriaSet reflected_criteria;  // on the normalized reflection
    std::string dual_text;
    std::string reflected_text;
    bool duality_consistency = false;  // si_hurwitz(p) == hurwitz_classic(dual p)

    SiVerdict si;                // oracle on the input
    Stability stability;         // oracle on the input
    SiVerdict dual_si;           // oracle on the dual
    Stability dual_stability;    // oracle on the dual

    bool consistent = false;
    bool boundary = false;
    std::vector<std::string> flags;
};

/// Runs every criterion on p, its dual and its reflection, both oracles on p
/// and the dual, and the cross-consistency checks. Requires deg p >= 1.
ClassificationReport classify(const Polynomial& p);

}  // namespace sipoly
