#include "sipoly/stieltjes.hpp"

#include "sipoly/hurwitz.hpp"

namespace sipoly {

ContinuedFraction cf_expand(const RationalFunction& phi) {
    if (phi.num.is_zero())
        throw NoExpansionError("no expansion: the function is identically zero");
    if (phi.num.degree() >= phi.den.degree())
        throw NoExpansionError("no expansion: input must be strictly proper");

    ContinuedFraction cf;
    Polynomial top = phi.den;  // current tail is top/bottom
    Polynomial bottom = phi.num;
    for (int i = 1;; ++i) {
        const bool odd_rung = i % 2 != 0;
        const int gap = top.degree() - bottom.degree();
        if (gap != (odd_rung ? 1 : 0))
            throw NoExpansionError("no expansion: degree pattern break at rung " +
                                   std::to_string(i));
        const Rational c = top.leading() / bottom.leading();
        Polynomial reducer = odd_rung
                                 ? bottom * Polynomial{c, Rational(0)}
                                 : bottom * c;
        Polynomial rest = top - reducer;
        cf.c.push_back(c);
        if (rest.is_zero()) {
            cf.terminal = odd_rung ? CfTerminal::finite : CfTerminal::infinite_last;
            return cf;
        }
        top = std::move(bottom);
        bottom = std::move(rest);
    }
}

ContinuedFraction cf_coeffs_from_minors(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::domain_error("minor formula requires degree >= 1");
    const int n = p.degree();
    const std::vector<Rational> delta = leading_minors(p);
    // The anchor below the classical Delta_0 = 1 must be 1/a_0: the first
    // rung is c_1 = a_0 / Delta_1, which the Hankel-to-minor substitution
    // gives directly. With a monic input this reduces to the usual 1.
    auto delta_at = [&delta, &p](int i) {
        if (i == -1) return Rational(1) / p.leading();
        return i == 0 ? Rational(1) : delta[static_cast<std::size_t>(i - 1)];
    };
    for (int i = 1; i <= n; ++i)
        if (delta_at(i) == 0)
            throw NoExpansionError("minor formula undefined: a Hurwitz minor vanishes");
    ContinuedFraction cf;
    for (int i = 1; i <= n; ++i) {
        const Rational prev = delta_at(i - 1);
        cf.c.push_back(prev * prev / (delta_at(i - 2) * delta_at(i)));
    }
    cf.terminal = n % 2 != 0 ? CfTerminal::finite : CfTerminal::infinite_last;
    return cf;
}

RationalFunction cf_reconstruct(const ContinuedFraction& cf) {
    if (cf.c.empty()) throw std::domain_error("empty continued fraction");
    for (const Rational& c : cf.c)
        if (c == 0) throw std::domain_error("continued fraction has a zero coefficient");
    const int m = static_cast<int>(cf.c.size());
    const bool last_odd = m % 2 != 0;
    if (last_odd && cf.terminal != CfTerminal::finite)
        throw std::domain_error("odd-length ladder must terminate on its last rung");
    if (!last_odd && cf.terminal != CfTerminal::infinite_last)
        throw std::domain_error("even-length ladder must drop the trailing rung");

    // Fold from the innermost rung outwards; the tail is num/den.
    Polynomial num, den;
    if (last_odd) {
        num = Polynomial{cf.c.back(), Rational(0)};
        den = Polynomial{Rational(1)};
    } else {
        num = Polynomial{cf.c.back()};
        den = Polynomial{Rational(1)};
    }
    for (int i = m - 1; i >= 1; --i) {
        // new tail = c_i * u + den/num (odd rung) or c_i + den/num (even rung)
        const Rational& c = cf.c[static_cast<std::size_t>(i - 1)];
        const Polynomial rung = i % 2 != 0 ? Polynomial{c, Rational(0)} : Polynomial{c};
        Polynomial new_num = rung * num + den;
        den = std::move(num);
        num = std::move(new_num);
    }
    // The assembled tail is 1/Phi.
    return RationalFunction(std::move(den), std::move(num)).canonical();
}

bool cf_sign_check(const ContinuedFraction& cf, int degree) {
    if (degree < 1) return false;
    const int r = degree / 2;
    const bool odd = degree % 2 != 0;
    const int expected = odd ? 2 * r + 1 : 2 * r;
    if (static_cast<int>(cf.c.size()) != expected) return false;
    if (cf.terminal != (odd ? CfTerminal::finite : CfTerminal::infinite_last))
        return false;
    for (int i = 1; i <= 2 * r; ++i) {
        const Rational& c = cf.c[static_cast<std::size_t>(i - 1)];
        if (i % 2 != 0 ? c >= 0 : c <= 0) return false;
    }
    if (odd && cf.c.back() >= 0) return false;
    return true;
}

const char* to_string(CfTerminal terminal) {
    return terminal == CfTerminal::finite ? "finite" : "infinite-last";
}

}  // namespace sipoly
