#include "sipoly/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace sipoly {

Rational random_positive_rational(std::mt19937_64& rng, int denominator_cap) {
    std::uniform_int_distribution<int> den_dist(1, denominator_cap);
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(1, 8 * denominator_cap);
    return {num_dist(rng), den};
}

GeneratedPoly random_si_poly(std::mt19937_64& rng, int degree, SiKind kind) {
    if (degree < 1) throw std::domain_error("degree must be positive");
    if (kind == SiKind::not_si) throw std::domain_error("kind must be I or II");
    std::set<Rational> magnitudes;
    while (static_cast<int>(magnitudes.size()) < degree)
        magnitudes.insert(random_positive_rational(rng));
    std::vector<Rational> descending(magnitudes.rbegin(), magnitudes.rend());
    GeneratedPoly out;
    for (int k = 0; k < degree; ++k) {
        const bool positive = (k % 2 == 0) == (kind == SiKind::kind_i);
        out.roots.push_back(positive ? descending[static_cast<std::size_t>(k)]
                                     : Rational(-descending[static_cast<std::size_t>(k)]));
    }
    out.poly = Polynomial::from_roots(out.roots, Rational(1));
    return out;
}

GeneratedPoly random_stable_poly(std::mt19937_64& rng, int degree) {
    if (degree < 1) throw std::domain_error("degree must be positive");
    GeneratedPoly out;
    out.poly = Polynomial{Rational(1)};
    int remaining = degree;
    std::uniform_int_distribution<int> coin(0, 1);
    while (remaining > 0) {
        if (remaining >= 2 && coin(rng) == 1) {
            const Rational b = random_positive_rational(rng);
            const Rational c = random_positive_rational(rng);
            out.poly = out.poly * Polynomial{Rational(1), b, c};
            remaining -= 2;
        } else {
            const Rational a = random_positive_rational(rng);
            out.poly = out.poly * Polynomial{Rational(1), a};
            out.roots.push_back(-a);
            remaining -= 1;
        }
    }
    return out;
}

Polynomial random_poly(std::mt19937_64& rng, int degree, int bound) {
    if (degree < 0) throw std::domain_error("degree must be nonnegative");
    std::uniform_int_distribution<int> num_dist(-bound, bound);
    std::uniform_int_distribution<int> den_dist(1, 4);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= degree; ++k) {
        int num = num_dist(rng);
        while (k == 0 && num == 0) num = num_dist(rng);
        coeffs.emplace_back(num, den_dist(rng));
    }
    return Polynomial(std::move(coeffs));
}

TridiagonalSpec random_tridiagonal(std::mt19937_64& rng, int n, bool positive_b1) {
    if (n < 1) throw std::domain_error("size must be positive");
    TridiagonalSpec spec;
    Rational b1 = random_positive_rational(rng);
    spec.b.push_back(positive_b1 ? b1 : Rational(-b1));
    for (int k = 2; k <= n; ++k) spec.b.push_back(random_positive_rational(rng));
    return spec;
}

BinomialDual binomial_dual(int n, const Rational& a) {
    if (n < 1) throw std::domain_error("degree must be positive");
    if (a == 0) throw std::domain_error("parameter a must be nonzero");
    BinomialDual out;
    out.n = n;
    out.a = a;
    std::vector<Rational> roots(static_cast<std::size_t>(n), Rational(-a));
    out.poly = Polynomial::from_roots(roots, Rational(1)).dual();
    const double sign = n % 2 != 0 ? 1.0 : -1.0;
    for (int k = 1; k <= n; ++k)
        out.expected_roots.push_back(
            sign * to_double(a) *
            std::tan(std::numbers::pi * (4.0 * k + 1.0) / (4.0 * n)));
    std::sort(out.expected_roots.begin(), out.expected_roots.end());
    return out;
}

}  // namespace sipoly
