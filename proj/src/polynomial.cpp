#include "sipoly/polynomial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sipoly {

namespace {

// (-1)^(k(k+1)/2): + - - + + - - + ...
int dual_sign(int k) { return (k % 4 == 0 || k % 4 == 3) ? 1 : -1; }

// q(-z^2) for q given in u, expanded in z.
Polynomial substitute_negated_square(const Polynomial& q) {
    if (q.is_zero()) return {};
    const int m = q.degree();
    std::vector<Rational> out(2 * m + 1, Rational(0));
    for (int i = 0; i <= m; ++i) {
        // q.coeff(i) multiplies u^(m-i) -> (-1)^(m-i) z^(2(m-i))
        const int e = m - i;
        out[2 * m - 2 * e] = (e % 2 == 0) ? q.coeff(i) : Rational(-q.coeff(i));
    }
    return Polynomial(std::move(out));
}

// z * q(z)
Polynomial shift_up(const Polynomial& q) {
    if (q.is_zero()) return {};
    std::vector<Rational> out = q.coeffs();
    out.push_back(Rational(0));
    return Polynomial(std::move(out));
}

}  // namespace

Polynomial EvenOddParts::recombine() const {
    Polynomial even_in_z;
    if (!even_part.is_zero()) {
        const int m = even_part.degree();
        std::vector<Rational> out(2 * m + 1, Rational(0));
        for (int i = 0; i <= m; ++i) out[2 * i] = even_part.coeff(i);
        even_in_z = Polynomial(std::move(out));
    }
    Polynomial odd_in_z;
    if (!odd_part.is_zero()) {
        const int m = odd_part.degree();
        std::vector<Rational> out(2 * m + 2, Rational(0));
        for (int i = 0; i <= m; ++i) out[2 * i] = odd_part.coeff(i);
        odd_in_z = Polynomial(std::move(out));
    }
    return even_in_z + odd_in_z;
}

void TridiagonalSpec::validate() const {
    if (b.empty()) throw std::domain_error("tridiagonal data must be nonempty");
    if (b[0] == 0) throw std::domain_error("tridiagonal data requires b_1 != 0");
    for (std::size_t k = 1; k < b.size(); ++k)
        if (b[k] <= 0)
            throw std::domain_error("tridiagonal data requires b_k > 0 for k >= 2");
}

Polynomial::Polynomial(std::vector<Rational> descending) : c_(std::move(descending)) {
    strip();
}

Polynomial::Polynomial(std::initializer_list<Rational> descending)
    : c_(descending) {
    strip();
}

void Polynomial::strip() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
}

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            coeffs.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
            flush();
        else
            token.push_back(ch);
    }
    flush();
    if (coeffs.empty()) throw ParseError("empty polynomial input");
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots,
                                  const Rational& leading) {
    if (leading == 0) throw std::domain_error("leading coefficient must be nonzero");
    std::vector<Rational> c{leading};
    for (const Rational& root : roots) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= c[i] * root;
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.front();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (const Rational& a : c_) acc = acc * x + a;
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const Rational& a : c_) out.push_back(-a);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    const std::size_t n = std::max(c_.size(), rhs.c_.size());
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[n - c_.size() + i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        out[n - rhs.c_.size() + i] += rhs.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] += c_[i] * rhs.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s == 0) return {};
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const Rational& a : c_) out.push_back(a * s);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative(int k) const {
    if (k < 0) throw std::domain_error("derivative order must be nonnegative");
    Polynomial cur = *this;
    for (int round = 0; round < k && !cur.is_zero(); ++round) {
        const int n = cur.degree();
        if (n == 0) return {};
        std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = cur.coeff(i) * Rational(n - i);
        cur = Polynomial(std::move(out));
    }
    return cur;
}

Polynomial Polynomial::reflect() const {
    const int n = degree();
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (int k = 0; k <= n; ++k) {
        // coefficient of z^(n-k) picks up (-1)^(n-k)
        const Rational& a = c_[static_cast<std::size_t>(k)];
        out.push_back((n - k) % 2 == 0 ? a : Rational(-a));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::dual() const {
    const int n = degree();
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (int k = 0; k <= n; ++k)
        out.push_back(dual_sign(k) > 0 ? c_[static_cast<std::size_t>(k)]
                                       : Rational(-c_[static_cast<std::size_t>(k)]));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::dual_via_rotation() const {
    if (is_zero()) return {};
    const EvenOddParts parts = even_odd_split();
    const int r = half_down();
    const Polynomial even_piece = substitute_negated_square(parts.even_part);
    const Polynomial odd_piece = shift_up(substitute_negated_square(parts.odd_part));
    Polynomial combined = parts.parity == 0 ? even_piece + odd_piece
                                            : even_piece - odd_piece;
    const int exponent = parts.parity == 0 ? r : r + 1;
    return exponent % 2 == 0 ? combined : -combined;
}

EvenOddParts Polynomial::even_odd_split() const {
    EvenOddParts parts;
    if (is_zero()) return parts;
    const int n = degree();
    parts.parity = n % 2;
    std::vector<Rational> even_asc, odd_asc;  // ascending in u
    for (int k = 0; k <= n; ++k) {
        const int e = n - k;  // power of z carried by a_k
        if (e % 2 == 0) {
            const std::size_t slot = static_cast<std::size_t>(e / 2);
            if (even_asc.size() <= slot) even_asc.resize(slot + 1, Rational(0));
            even_asc[slot] = c_[static_cast<std::size_t>(k)];
        } else {
            const std::size_t slot = static_cast<std::size_t>((e - 1) / 2);
            if (odd_asc.size() <= slot) odd_asc.resize(slot + 1, Rational(0));
            odd_asc[slot] = c_[static_cast<std::size_t>(k)];
        }
    }
    std::vector<Rational> even_desc(even_asc.rbegin(), even_asc.rend());
    std::vector<Rational> odd_desc(odd_asc.rbegin(), odd_asc.rend());
    parts.even_part = Polynomial(std::move(even_desc));
    parts.odd_part = Polynomial(std::move(odd_desc));
    return parts;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero() || degree() < rhs.degree()) return {Polynomial{}, *this};
    std::vector<Rational> rem = c_;
    const int qn = degree() - rhs.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(qn) + 1, Rational(0));
    for (int i = 0; i <= qn; ++i) {
        const Rational factor = rem[static_cast<std::size_t>(i)] / rhs.leading();
        quo[static_cast<std::size_t>(i)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= rhs.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= factor * rhs.coeff(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const Rational& a : c_)
        den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(a)));
    Integer num_gcd = 0;
    for (const Rational& a : c_) {
        Rational scaled = a * Rational(den_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(numerator(scaled)));
    }
    if (num_gcd == 0) num_gcd = 1;
    return *this * Rational(den_lcm, num_gcd);
}

std::string Polynomial::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out << ' ';
        out << to_string(c_[i]);
    }
    return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a.primitive();
    Polynomial v = b.primitive();
    while (!v.is_zero()) {
        Polynomial r = u.divmod(v).second.primitive();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return u;
    return u.leading() > 0 ? u : -u;
}

bool square_free(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("square-free test requires degree >= 1");
    return gcd(p, p.derivative()).degree() == 0;
}

Polynomial tridiagonal_char_poly(const TridiagonalSpec& spec) {
    spec.validate();
    const Polynomial z{Rational(1), Rational(0)};
    Polynomial prev{Rational(1)};                       // d_0
    Polynomial cur = z - Polynomial{spec.b[0]};         // d_1 = z - b_1
    for (std::size_t k = 1; k < spec.b.size(); ++k) {
        Polynomial next = z * cur - prev * (spec.b[k] * spec.b[k]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial markov_family(const Polynomial& p, int j) {
    if (p.degree() < 2) throw std::domain_error("markov_family requires degree >= 2");
    const int r = p.half_down();
    if (j < 1 || j > r - 1)
        throw std::domain_error("markov_family index out of range 1..[n/2]-1");
    EvenOddParts parts = p.even_odd_split();
    parts.even_part = parts.even_part.derivative(j);
    parts.odd_part = parts.odd_part.derivative(j);
    return parts.recombine();
}

Rational elementary_symmetric(const std::vector<Rational>& xs, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > xs.size())
        throw std::domain_error("elementary symmetric index out of range");
    // e[j] after processing a prefix holds e_j of that prefix
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (const Rational& x : xs)
        for (std::size_t j = e.size() - 1; j >= 1; --j)
            e[j] += e[j - 1] * x;
    return e[static_cast<std::size_t>(k)];
}

TanSumCheck tan_sum_identity_check(const std::vector<Rational>& xs, double pole_margin) {
    TanSumCheck result;
    const int n = static_cast<int>(xs.size());
    Rational num(0), den(0);
    for (int k = 1; k <= n; k += 2) {
        const Rational e = elementary_symmetric(xs, k);
        num += ((k - 1) / 2) % 2 == 0 ? e : Rational(-e);
    }
    den += 1;
    for (int k = 2; k <= n; k += 2) {
        const Rational e = elementary_symmetric(xs, k);
        den += (k / 2) % 2 == 0 ? e : Rational(-e);
    }
    double theta = 0.0;
    for (const Rational& x : xs) theta += std::atan(to_double(x));
    const double pole_distance =
        std::abs(theta / std::numbers::pi - 0.5 -
                 std::round(theta / std::numbers::pi - 0.5)) *
        std::numbers::pi;
    if (den == 0 || pole_distance < pole_margin) {
        result.indeterminate = true;
        return result;
    }
    result.lhs = std::tan(theta);
    result.rhs = to_double(num / den);
    return result;
}

}  // namespace sipoly
