#include "sipoly/stieltjes.hpp"

#include "sipoly/generators.hpp"
#include "sipoly/hurwitz.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace sipoly;
using namespace sipoly::testfix;

namespace {

std::vector<Rational> rationals(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("ladder expansion of the fixtures") {
    const ContinuedFraction cf2 = cf_expand(associated_phi(f2()));
    CHECK(cf2.c == rationals({q(-1), q(1, 2)}));
    CHECK(cf2.terminal == CfTerminal::infinite_last);

    const ContinuedFraction cf3 = cf_expand(associated_phi(f3()));
    CHECK(cf3.c == rationals({q(-1, 2), q(1), q(-1, 3)}));
    CHECK(cf3.terminal == CfTerminal::finite);

    const ContinuedFraction cf1 = cf_expand(associated_phi(f1()));
    CHECK(cf1.c == rationals({q(-1)}));
    CHECK(cf1.terminal == CfTerminal::finite);
}

TEST_CASE("expansion requires a strictly proper nonzero input") {
    CHECK_THROWS_AS(cf_expand(associated_phi(f5())), NoExpansionError);
    CHECK_THROWS_AS(
        cf_expand(RationalFunction(Polynomial::parse("1 0"), Polynomial::parse("1 1"))),
        NoExpansionError);
}

TEST_CASE("coefficients from the minor quotients") {
    const ContinuedFraction cf2 = cf_coeffs_from_minors(f2());
    CHECK(cf2.c == rationals({q(-1), q(1, 2)}));
    CHECK(cf2.terminal == CfTerminal::infinite_last);

    const ContinuedFraction cf3 = cf_coeffs_from_minors(f3());
    CHECK(cf3.c == rationals({q(-1, 2), q(1), q(-1, 3)}));

    const ContinuedFraction cf1 = cf_coeffs_from_minors(f1());
    CHECK(cf1.c == rationals({q(-1)}));

    CHECK_THROWS_AS(cf_coeffs_from_minors(f5()), NoExpansionError);
}

TEST_CASE("reconstruction folds the ladder back") {
    const RationalFunction phi2 = cf_reconstruct({{q(-1), q(1, 2)}, CfTerminal::infinite_last});
    CHECK(phi2.num == Polynomial::parse("-1"));
    CHECK(phi2.den == Polynomial::parse("1 -2"));

    const RationalFunction phi3 =
        cf_reconstruct({{q(-1, 2), q(1), q(-1, 3)}, CfTerminal::finite});
    CHECK(phi3.num == Polynomial::parse("-2 6"));
    CHECK(phi3.den == Polynomial::parse("1 -5 0"));

    const RationalFunction phi1 = cf_reconstruct({{q(-1)}, CfTerminal::finite});
    CHECK(phi1.num == Polynomial::parse("-1"));
    CHECK(phi1.den == Polynomial::parse("1 0"));

    CHECK_THROWS_AS(cf_reconstruct({{}, CfTerminal::finite}), std::domain_error);
    CHECK_THROWS_AS(cf_reconstruct({{q(0)}, CfTerminal::finite}), std::domain_error);
    CHECK_THROWS_AS(cf_reconstruct({{q(1)}, CfTerminal::infinite_last}), std::domain_error);
}

TEST_CASE("sign and terminal pattern of kind-I sources") {
    CHECK(cf_sign_check(cf_expand(associated_phi(f3())), 3));
    CHECK(cf_sign_check(cf_expand(associated_phi(f2())), 2));
    CHECK_FALSE(cf_sign_check({{q(1), q(1)}, CfTerminal::infinite_last}, 2));
    CHECK_FALSE(cf_sign_check({{q(-1)}, CfTerminal::finite}, 2));  // wrong count
}

TEST_CASE("round trip and cross-path equality on random polynomials") {
    std::mt19937_64 rng(73);
    int defined = 0;
    for (int round = 0; round < 120; ++round) {
        const Polynomial p = random_poly(rng, 1 + round % 8);
        const std::vector<Rational> delta = leading_minors(p);
        const bool all_nonzero = [&] {
            for (const Rational& d : delta)
                if (d == 0) return false;
            return true;
        }();
        if (!all_nonzero) {
            CHECK_THROWS_AS(cf_coeffs_from_minors(p), NoExpansionError);
            continue;
        }
        ++defined;
        const ContinuedFraction from_minors = cf_coeffs_from_minors(p);
        const ContinuedFraction expanded = cf_expand(associated_phi(p));
        CHECK(expanded == from_minors);
        CHECK(static_cast<int>(expanded.c.size()) == p.degree());
        const RationalFunction rebuilt = cf_reconstruct(expanded);
        CHECK(rebuilt.same_function(associated_phi(p)));
        const RationalFunction canon = associated_phi(p).canonical();
        CHECK(rebuilt.num == canon.num);
        CHECK(rebuilt.den == canon.den);
    }
    CHECK(defined > 60);
}

TEST_CASE("kind-I polynomials pass the sign pattern and others fail it") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 30; ++round) {
        const GeneratedPoly gen = random_si_poly(rng, 1 + round % 7);
        const ContinuedFraction cf = cf_expand(associated_phi(gen.poly));
        CHECK(cf_sign_check(cf, gen.poly.degree()));
        CHECK(cf_coeffs_from_minors(gen.poly) == cf);
    }
    // stable polynomials expand with all-positive coefficients instead
    for (int round = 0; round < 20; ++round) {
        const GeneratedPoly gen = random_stable_poly(rng, 2 + round % 6);
        const ContinuedFraction cf = cf_expand(associated_phi(gen.poly));
        CHECK_FALSE(cf_sign_check(cf, gen.poly.degree()));
    }
}
