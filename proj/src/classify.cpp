#include "sipoly/classify.hpp"

#include <cmath>

namespace sipoly {

namespace {

void require_degree(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::domain_error("classification requires degree >= 1");
}

int triangular_sign(int j) { return (j * (j + 1) / 2) % 2 == 0 ? 1 : -1; }

void record(CriterionResult& result, const Rational& value) {
    result.witness.push_back(to_string(value));
    if (value == 0) result.boundary = true;
    if (value <= 0) result.verdict = false;
}

}  // namespace

Polynomial normalize_leading(const Polynomial& p, bool* flipped) {
    require_degree(p);
    const bool flip = p.leading() < 0;
    if (flipped != nullptr) *flipped = flip;
    return flip ? -p : p;
}

CriterionResult stodola_detail(const Polynomial& p) {
    const Polynomial q = normalize_leading(p);
    CriterionResult result;
    result.verdict = true;
    for (int j = 0; j <= q.degree(); ++j)
        record(result, q.coeff(j) * triangular_sign(j));
    return result;
}

CriterionResult si_hurwitz_detail(const Polynomial& p) {
    const Polynomial q = normalize_leading(p);
    const std::vector<Rational> delta = leading_minors(q);
    CriterionResult result;
    result.verdict = true;
    for (int j = 1; j <= q.half_up(); ++j) {
        const Rational& d = delta[static_cast<std::size_t>(2 * j - 2)];
        record(result, j % 2 == 0 ? d : Rational(-d));
    }
    for (int j = 1; j <= q.half_down(); ++j)
        record(result, delta[static_cast<std::size_t>(2 * j - 1)]);
    return result;
}

CriterionResult si_lienard_chipart_detail(const Polynomial& p) {
    const Polynomial q = normalize_leading(p);
    const std::vector<Rational> delta = leading_minors(q);
    CriterionResult result;
    result.verdict = true;
    for (int j = 1; j <= q.half_up(); ++j) {
        const Rational& d = delta[static_cast<std::size_t>(2 * j - 2)];
        record(result, j % 2 == 0 ? d : Rational(-d));
    }
    for (int j = 1; j <= q.half_down(); ++j) {
        const Rational a = q.coeff(2 * j);
        record(result, j % 2 == 0 ? a : Rational(-a));
    }
    return result;
}

CriterionResult hurwitz_classic_detail(const Polynomial& p) {
    const Polynomial q = normalize_leading(p);
    CriterionResult result;
    result.verdict = true;
    for (const Rational& d : leading_minors(q)) record(result, d);
    return result;
}

CriterionResult stability_hankel_detail(const Polynomial& p) {
    const Polynomial q = normalize_leading(p);
    const int n = q.degree();
    const LaurentCoeffs s = laurent_coeffs(r_function(q), 2 * n - 2);
    CriterionResult result;
    result.verdict = true;
    for (int j = 1; j <= n; ++j)
        record(result, hankel_D(s, j) * triangular_sign(j));
    return result;
}

std::complex<double> evaluate_complex(const Polynomial& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k <= p.degree(); ++k) acc = acc * z + to_double(p.coeff(k));
    return acc;
}

UnitDiscProbe rhp_unit_disc_probe(const Polynomial& p, int samples) {
    require_degree(p);
    if (samples < 1) throw std::domain_error("sample count must be positive");
    const Polynomial q = normalize_leading(p);
    if (!hurwitz_classic(q))
        throw std::domain_error("unit-disc probe expects a polynomial with positive Hurwitz minors");
    const double bound = to_double(cauchy_root_bound(q));
    const int n_radii = std::max(1, static_cast<int>(std::lround(std::sqrt(samples))));
    const int n_angles = (samples + n_radii - 1) / n_radii;
    const bool negate = q.degree() % 2 != 0;

    UnitDiscProbe probe;
    for (int i = 0; i < n_radii && probe.points < samples; ++i) {
        // log-spaced radii across 1/16..8 times the root bound
        const double t = n_radii == 1 ? 0.5 : static_cast<double>(i) / (n_radii - 1);
        const double radius = bound * std::pow(2.0, -4.0 + 7.0 * t);
        for (int j = 0; j < n_angles && probe.points < samples; ++j) {
            const double angle = -M_PI / 2 + M_PI * (j + 0.5) / n_angles;
            const std::complex<double> z = std::polar(radius, angle);
            const std::complex<double> den = evaluate_complex(q, z);
            if (std::abs(den) == 0.0) continue;  // pole: cannot occur for stable q
            std::complex<double> num = evaluate_complex(q.reflect(), z);
            if (negate) num = -num;
            probe.max_abs = std::max(probe.max_abs, std::abs(num / den));
            ++probe.points;
        }
    }
    probe.pass = probe.max_abs < 1.0;
    return probe;
}

DualityArgumentReport duality_argument_check(const Polynomial& p, const Rational& width) {
    require_degree(p);
    if (width <= 0) throw std::domain_error("refinement width must be positive");
    const SiVerdict verdict = si_oracle(p);
    if (verdict.kind != SiKind::kind_i)
        throw std::domain_error("duality argument check expects a kind-I self-interlacing input");

    const Polynomial q = p.dual();
    const EvenOddParts parts = q.even_odd_split();
    const Rational bound = cauchy_root_bound(p);

    // sup |d/dt (Re - Im)| and |d/dt (Re + Im)| over |t| <= bound is at most
    // sum (n-j) |q_j| bound^(n-j-1): both combinations select q's coefficients
    // with unit signs.
    DualityArgumentReport report;
    report.width = width;
    Rational scale(0);
    Rational power(1);
    const int n = q.degree();
    for (int e = 1; e <= n; ++e) {
        scale += Rational(e) * abs(q.coeff(n - e)) * power;
        power *= bound;
    }
    report.scale_bound = scale;
    report.pass = true;

    for (const IsolatingInterval& root_iv : verdict.witnesses) {
        DualityResidualEntry entry;
        entry.interval = refine(p, root_iv, width);
        entry.midpoint = entry.interval.midpoint();
        const Rational t = entry.midpoint;
        const Rational re = parts.even_part(Rational(-t * t));
        const Rational im = t * parts.odd_part(Rational(-t * t));
        const Rational diff = abs(Rational(re - im));
        const Rational sum = abs(Rational(re + im));
        entry.residual = diff < sum ? diff : sum;
        entry.ok = entry.residual <= report.scale_bound * width;
        if (!entry.ok) report.pass = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

CriteriaSet run_criteria(const Polynomial& p) {
    CriteriaSet set;
    set.stodola = stodola_detail(p);
    set.si_hurwitz = si_hurwitz_detail(p);
    set.si_lienard_chipart = si_lienard_chipart_detail(p);
    set.hurwitz_classic = hurwitz_classic_detail(p);
    set.stability_hankel = stability_hankel_detail(p);
    return set;
}

ClassificationReport classify(const Polynomial& p) {
    require_degree(p);
    ClassificationReport report;
    report.input_text = p.to_text();
    const Polynomial base = normalize_leading(p, &report.normalized);
    const Polynomial dual_poly = base.dual();
    const Polynomial reflected = normalize_leading(base.reflect());
    report.dual_text = dual_poly.to_text();
    report.reflected_text = reflected.to_text();

    report.criteria = run_criteria(base);
    report.dual_criteria = run_criteria(dual_poly);
    report.reflected_criteria = run_criteria(reflected);
    report.duality_consistency =
        report.criteria.si_hurwitz.verdict == report.dual_criteria.hurwitz_classic.verdict;

    report.si = si_oracle(base);
    report.stability = stability_oracle(base);
    report.dual_si = si_oracle(dual_poly);
    report.dual_stability = stability_oracle(dual_poly);

    report.boundary = report.criteria.any_boundary() || report.dual_criteria.any_boundary();
    if (report.normalized) report.flags.push_back("normalized leading coefficient");
    if (report.boundary) report.flags.push_back("boundary: zero value in a strict sign test");
    if (gcd(base, base.reflect()).degree() >= 1)
        report.flags.push_back("degenerate: p and p(-z) share roots");
    if (report.stability == Stability::indeterminate ||
        report.dual_stability == Stability::indeterminate)
        report.flags.push_back("oracle indeterminate");
    if (report.si.indeterminate || report.dual_si.indeterminate)
        report.flags.push_back("oracle separation cap reached");

    bool consistent = report.duality_consistency;
    const CriteriaSet& c = report.criteria;
    if (!report.boundary) {
        const bool oracle_si = report.si.kind == SiKind::kind_i;
        consistent = consistent && c.si_hurwitz.verdict == c.si_lienard_chipart.verdict;
        consistent = consistent && c.si_hurwitz.verdict == oracle_si;
        consistent = consistent && c.hurwitz_classic.verdict == c.stability_hankel.verdict;
        consistent = consistent && report.dual_criteria.hurwitz_classic.verdict ==
                                       report.dual_criteria.stability_hankel.verdict;
        if (oracle_si) consistent = consistent && c.stodola.verdict;
        if (report.stability != Stability::indeterminate)
            consistent = consistent &&
                         (report.stability == Stability::stable) == c.hurwitz_classic.verdict;
        if (report.dual_stability != Stability::indeterminate)
            consistent = consistent && (report.dual_stability == Stability::stable) ==
                                           c.si_hurwitz.verdict;
        if (!report.reflected_criteria.any_boundary())
            consistent = consistent && report.reflected_criteria.si_hurwitz.verdict ==
                                           (report.si.kind == SiKind::kind_ii);
    }
    report.consistent = consistent;
    return report;
}

}  // namespace sipoly
