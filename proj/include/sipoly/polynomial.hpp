#pragma once

#include "sipoly/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sipoly {

struct EvenOddParts;

/// Data for the symmetric matrix with diagonal (b_1, 0, ..., 0) and
/// off-diagonal entries b_2, ..., b_n.
struct TridiagonalSpec {
    std::vector<Rational> b;

    /// Enforces b_1 != 0 and b_k > 0 for k >= 2; throws std::domain_error.
    void validate() const;
};

/// Dense univariate polynomial with exact rational coefficients stored by
/// descending power: coeff(k) multiplies z^(n-k). The zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> descending);
    Polynomial(std::initializer_list<Rational> descending);

    /// Parses whitespace/comma separated rationals in descending powers.
    /// Leading zero coefficients are stripped.
    static Polynomial parse(std::string_view text);

    /// leading * prod(z - root_k), expanded exactly.
    static Polynomial from_roots(const std::vector<Rational>& roots,
                                 const Rational& leading);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int half_up() const { return (degree() + 1) / 2; }   // [(n+1)/2]
    int half_down() const { return degree() / 2; }       // [n/2]

    /// a_k, the coefficient of z^(n-k); zero outside 0..n.
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const Polynomial& rhs) const { return c_ != rhs.c_; }

    /// Exact k-th derivative; the zero polynomial once k exceeds the degree.
    Polynomial derivative(int k = 1) const;

    /// Coefficients of p(-z), no sign normalization.
    Polynomial reflect() const;

    /// Sign transform: coefficient of z^(n-k) becomes (-1)^(k(k+1)/2) a_k.
    Polynomial dual() const;

    /// Same map computed through the even/odd parts:
    ///   n = 2r:   (-1)^r     [P_e(-z^2) + z P_o(-z^2)]
    ///   n = 2r+1: (-1)^(r+1) [P_e(-z^2) - z P_o(-z^2)]
    Polynomial dual_via_rotation() const;

    EvenOddParts even_odd_split() const;

    /// Euclidean division; throws std::domain_error when rhs is zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& rhs) const;

    /// Positive-scalar multiple with coprime integer coefficients.
    Polynomial primitive() const;

    /// Canonical text: descending coefficients separated by single spaces.
    std::string to_text() const;

  private:
    std::vector<Rational> c_;
    void strip();
};

/// Decomposition p(z) = even_part(z^2) + z * odd_part(z^2).
struct EvenOddParts {
    Polynomial even_part;
    Polynomial odd_part;
    int parity = 0;  // deg p mod 2

    /// Expands even_part(z^2) + z * odd_part(z^2) back into one polynomial.
    Polynomial recombine() const;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// True iff gcd(p, p') is constant. Requires deg p >= 1.
bool square_free(const Polynomial& p);

/// Characteristic polynomial det(zI - J) of the tridiagonal matrix described
/// by spec, via the three-term recurrence d_k = z d_(k-1) - b_k^2 d_(k-2).
Polynomial tridiagonal_char_poly(const TridiagonalSpec& spec);

/// j-th part-derivative polynomial P_e^(j)(z^2) + z P_o^(j)(z^2).
/// Requires deg p >= 2 and 1 <= j <= [n/2] - 1.
Polynomial markov_family(const Polynomial& p, int j);

/// e_k(xs); throws std::domain_error when k > xs.size().
Rational elementary_symmetric(const std::vector<Rational>& xs, int k);

struct TanSumCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool indeterminate = false;
};

/// Compares tan(sum arctan x_k) in floating point against the exact
/// alternating elementary-symmetric quotient
/// (e1 - e3 + e5 - ...) / (1 - e2 + e4 - ...).
/// Signals indeterminate when the exact denominator vanishes or the tangent
/// argument comes within pole_margin of pi/2 + pi*Z.
TanSumCheck tan_sum_identity_check(const std::vector<Rational>& xs,
                                   double pole_margin = 1e-6);

}  // namespace sipoly
