#include "sipoly/laurent.hpp"

#include "sipoly/hurwitz.hpp"

namespace sipoly {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (den.is_zero())
        throw std::domain_error("rational function needs a nonzero denominator");
    if (den.leading() < 0) {
        num = -num;
        den = -den;
    }
}

RationalFunction RationalFunction::canonical() const {
    if (num.is_zero()) return {Polynomial{}, Polynomial{Rational(1)}};
    const Polynomial g = gcd(num, den);
    Polynomial n = num.divmod(g).first;
    Polynomial d = den.divmod(g).first;
    const Rational lead = d.leading();
    return {n * (Rational(1) / lead), d * (Rational(1) / lead)};
}

bool RationalFunction::same_function(const RationalFunction& other) const {
    return num * other.den == other.num * den;
}

RationalFunction associated_phi(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::domain_error("associated function requires degree >= 1");
    const EvenOddParts parts = p.even_odd_split();
    if (parts.parity == 0) {
        if (parts.even_part.is_zero())
            throw std::domain_error("degenerate input: even part vanishes");
        return {parts.odd_part, parts.even_part};
    }
    if (parts.odd_part.is_zero())
        throw std::domain_error("degenerate input: odd part vanishes");
    const Polynomial u{Rational(1), Rational(0)};
    return {parts.even_part, u * parts.odd_part};
}

RationalFunction r_function(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::domain_error("associated function requires degree >= 1");
    Polynomial reflected = p.reflect();
    if (p.degree() % 2 != 0) reflected = -reflected;
    return {std::move(reflected), p};
}

LaurentCoeffs laurent_coeffs(const RationalFunction& f, int m) {
    if (m < 0) throw std::domain_error("coefficient count must be nonnegative");
    const int dn = f.num.degree();
    const int dd = f.den.degree();
    if (dn > dd)
        throw std::domain_error("laurent expansion at infinity needs deg num <= deg den");
    LaurentCoeffs out;
    out.constant = dn == dd ? f.num.leading() / f.den.leading() : Rational(0);

    // N = num - constant * den has degree <= dd - 1; with N_t the coefficient
    // of u^(dd-1-t) and d_i of u^(dd-i), match powers in N = den * sum s_j u^(-j-1):
    //   d_0 s_t = N_t - sum_(i=1..t) d_i s_(t-i).
    const Polynomial n_poly = f.num - f.den * out.constant;
    auto shifted_coeff = [&](int t) {
        // coefficient of u^(dd-1-t)
        const int k = n_poly.degree() - (dd - 1 - t);
        return n_poly.coeff(k);
    };
    out.s.resize(static_cast<std::size_t>(m) + 1);
    for (int t = 0; t <= m; ++t) {
        Rational acc = shifted_coeff(t);
        for (int i = 1; i <= t && i <= dd; ++i)
            acc -= f.den.coeff(i) * out.s[static_cast<std::size_t>(t - i)];
        out.s[static_cast<std::size_t>(t)] = acc / f.den.leading();
    }
    return out;
}

namespace {

Rational hankel_determinant(const LaurentCoeffs& coeffs, int j, int start) {
    if (j < 1) throw std::domain_error("hankel order must be positive");
    const int needed = start + 2 * j - 2;
    if (needed >= static_cast<int>(coeffs.s.size()))
        throw std::domain_error("insufficient laurent coefficients for this order");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(j));
    for (int row = 0; row < j; ++row)
        for (int col = 0; col < j; ++col)
            m[static_cast<std::size_t>(row)].push_back(
                coeffs.s[static_cast<std::size_t>(start + row + col)]);
    return determinant(m);
}

}  // namespace

Rational hankel_D(const LaurentCoeffs& coeffs, int j) {
    return hankel_determinant(coeffs, j, 0);
}

Rational hankel_Dhat(const LaurentCoeffs& coeffs, int j) {
    return hankel_determinant(coeffs, j, 1);
}

HankelData hankel_data(const RationalFunction& f, int J) {
    if (J < 1) throw std::domain_error("hankel order must be positive");
    HankelData data;
    data.s = laurent_coeffs(f, 2 * J);
    for (int j = 1; j <= J; ++j) {
        data.D.push_back(hankel_D(data.s, j));
        data.Dhat.push_back(hankel_Dhat(data.s, j));
    }
    return data;
}

IdentityReport hurwitz_formula_check(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("identity check requires degree >= 1");
    const int l = p.half_up();
    const int r = p.half_down();
    const Rational a0 = p.leading();
    const LaurentCoeffs s = laurent_coeffs(associated_phi(p), std::max(2 * l, 2 * r + 1));
    const std::vector<Rational> delta = leading_minors(p);

    IdentityReport report;
    report.pass = true;
    auto push = [&report](int j, Rational lhs, Rational rhs) {
        IdentityEntry e{j, std::move(lhs), std::move(rhs), false};
        e.ok = e.lhs == e.rhs;
        if (!e.ok) report.pass = false;
        report.entries.push_back(std::move(e));
    };
    Rational a0_power = a0;  // a_0^(2j-1)
    for (int j = 1; j <= l; ++j) {
        push(j, hankel_D(s, j), delta[static_cast<std::size_t>(2 * j - 2)] / a0_power);
        a0_power *= a0 * a0;
    }
    a0_power = a0 * a0;  // a_0^(2j)
    for (int j = 1; j <= r; ++j) {
        const Rational rhs = delta[static_cast<std::size_t>(2 * j - 1)] / a0_power;
        push(j, hankel_Dhat(s, j), j % 2 == 0 ? rhs : Rational(-rhs));
        a0_power *= a0 * a0;
    }
    return report;
}

IdentityReport r_hankel_product_check(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("identity check requires degree >= 1");
    const int n = p.degree();
    const Rational a0 = p.leading();
    const LaurentCoeffs s = laurent_coeffs(r_function(p), 2 * n - 2);
    const std::vector<Rational> delta = leading_minors(p);

    IdentityReport report;
    report.pass = true;
    Rational a0_even = a0 * a0;  // a_0^(2j)
    Rational two_pow = 2;        // 2^j
    Rational delta_prev = 1;     // Delta_0
    for (int j = 1; j <= n; ++j) {
        const Rational& delta_j = delta[static_cast<std::size_t>(j - 1)];
        Rational rhs = two_pow * a0 * delta_prev * delta_j;
        if ((j * (j + 1) / 2) % 2 != 0) rhs = -rhs;
        IdentityEntry e{j, a0_even * hankel_D(s, j), std::move(rhs), false};
        e.ok = e.lhs == e.rhs;
        if (!e.ok) report.pass = false;
        report.entries.push_back(std::move(e));
        a0_even *= a0 * a0;
        two_pow *= 2;
        delta_prev = delta_j;
    }
    return report;
}

PoleSignReport phi_pole_signs(const Polynomial& p) {
    const RationalFunction phi = associated_phi(p);
    PoleSignReport report;
    report.denominator_square_free = square_free(phi.den);
    const Polynomial den =
        report.denominator_square_free
            ? phi.den
            : phi.den.divmod(gcd(phi.den, phi.den.derivative())).first;
    report.poles = isolate_real_roots(den);
    report.all_poles_real = static_cast<int>(report.poles.size()) == den.degree();

    const bool zero_root = den(Rational(0)) == 0;
    bool others_positive = true;
    for (auto iv : report.poles) {
        if (zero_root && iv.lo < 0 && iv.hi >= 0) {
            // The unique interval around the point 0 holds the zero pole.
            report.zero_pole = true;
            continue;
        }
        while (iv.lo < 0 && iv.hi > 0) iv = refine(den, iv, iv.width() / 2);
        if (iv.hi <= 0) others_positive = false;
    }
    if (p.degree() % 2 == 0)
        report.signs_ok = others_positive && !report.zero_pole;
    else
        report.signs_ok = others_positive && report.zero_pole;
    report.pass = report.denominator_square_free && report.all_poles_real &&
                  report.signs_ok;
    return report;
}

}  // namespace sipoly
