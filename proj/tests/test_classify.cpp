#include "sipoly/classify.hpp"

#include "sipoly/generators.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace sipoly;
using namespace sipoly::testfix;

TEST_CASE("coefficient sign pattern") {
    CHECK(stodola_check(f3()));
    CHECK(stodola_check(f2()));
    CHECK_FALSE(stodola_check(Polynomial::parse("1 1 -2")));
}

TEST_CASE("minor-based kind-I criterion") {
    CHECK(si_hurwitz_criterion(f3()));
    CHECK(si_hurwitz_criterion(f2()));
    const CriterionResult degenerate = si_hurwitz_detail(f5());
    CHECK_FALSE(degenerate.verdict);
    CHECK(degenerate.boundary);
}

TEST_CASE("mixed minor and coefficient criterion") {
    CHECK(si_lienard_chipart(f3()));
    CHECK(si_lienard_chipart(f2()));
    CHECK_FALSE(si_lienard_chipart(Polynomial::parse("1 -1 2")));
}

TEST_CASE("classical minor positivity") {
    CHECK(hurwitz_classic(f3().dual()));
    CHECK_FALSE(hurwitz_classic(f3()));
    CHECK(hurwitz_classic(f4()));
}

TEST_CASE("hankel stability criterion") {
    CHECK(stability_hankel_criterion(Polynomial::parse("1 1")));
    const CriterionResult degenerate = stability_hankel_detail(f5());
    CHECK_FALSE(degenerate.verdict);
    CHECK(degenerate.boundary);
    CHECK(stability_hankel_criterion(Polynomial::parse("1 1 2")));
}

TEST_CASE("negative leading coefficients are normalized away") {
    CHECK(si_hurwitz_criterion(-f3()));
    CHECK(hurwitz_classic(-(f3().dual())));
    CHECK(stodola_check(-f3()));
}

TEST_CASE("unit disc probe on stable inputs") {
    const UnitDiscProbe probe = rhp_unit_disc_probe(Polynomial::parse("1 1 2"), 100);
    CHECK(probe.points == 100);
    CHECK(probe.pass);
    CHECK(probe.max_abs < 1.0);

    // near the reflected root z = 1 the quotient is tiny
    const std::complex<double> z(1.0, 0.05);
    const Polynomial one = Polynomial::parse("1 1");
    const std::complex<double> value =
        -evaluate_complex(one.reflect(), z) / evaluate_complex(one, z);
    CHECK(std::abs(value) < 0.1);
    // deep in the right half-plane it stays below one
    const std::complex<double> far(10.0, 3.0);
    const std::complex<double> far_value =
        -evaluate_complex(one.reflect(), far) / evaluate_complex(one, far);
    CHECK(std::abs(far_value) < 1.0);

    // near the imaginary axis the modulus approaches 1 from below
    const std::complex<double> close(1e-4, 0.0);
    const std::complex<double> near_one =
        -evaluate_complex(one.reflect(), close) / evaluate_complex(one, close);
    CHECK(std::abs(near_one) < 1.0);
    CHECK(std::abs(near_one) > 0.999);

    CHECK_THROWS_AS(rhp_unit_disc_probe(f3(), 100), std::domain_error);
}

TEST_CASE("duality argument residuals at the fixture roots") {
    const DualityArgumentReport report = duality_argument_check(f2(), q(1, 100));
    CHECK(report.pass);
    REQUIRE(report.entries.size() == 2);

    // exact evaluation at the true roots: q(2i) = -2 + 2i, q(-i) = 1 - i
    const Polynomial d = f2().dual();
    const EvenOddParts parts = d.even_odd_split();
    CHECK(parts.even_part(q(-4)) == -2);
    CHECK(q(2) * parts.odd_part(q(-4)) == 2);
    CHECK(parts.even_part(q(-1)) == 1);
    CHECK(q(-1) * parts.odd_part(q(-1)) == -1);

    const DualityArgumentReport first = duality_argument_check(f1(), q(1, 100));
    CHECK(first.pass);

    CHECK_THROWS_AS(duality_argument_check(f4(), q(1, 100)), std::domain_error);
}

TEST_CASE("duality argument residuals shrink with the width") {
    std::mt19937_64 rng(83);
    Rational total_wide(0), total_narrow(0);
    for (int round = 0; round < 10; ++round) {
        const GeneratedPoly gen = random_si_poly(rng, 2 + round % 5);
        const DualityArgumentReport wide = duality_argument_check(gen.poly, q(1, 1 << 10));
        const DualityArgumentReport narrow = duality_argument_check(gen.poly, q(1, 1 << 14));
        CHECK(wide.pass);
        CHECK(narrow.pass);
        for (const auto& e : wide.entries) total_wide += e.residual;
        for (const auto& e : narrow.entries) total_narrow += e.residual;
    }
    CHECK(total_narrow * 10 <= total_wide);
}

TEST_CASE("full classification of the fixtures") {
    const ClassificationReport r3 = classify(f3());
    CHECK(r3.criteria.si_hurwitz.verdict);
    CHECK(r3.criteria.si_lienard_chipart.verdict);
    CHECK(r3.criteria.stodola.verdict);
    CHECK(r3.dual_criteria.hurwitz_classic.verdict);
    CHECK(r3.dual_criteria.stability_hankel.verdict);
    CHECK(r3.si.kind == SiKind::kind_i);
    CHECK(r3.dual_stability == Stability::stable);
    CHECK(r3.duality_consistency);
    CHECK(r3.consistent);
    CHECK_FALSE(r3.boundary);

    const ClassificationReport stable = classify(f3().dual());
    CHECK(stable.criteria.hurwitz_classic.verdict);
    CHECK(stable.stability == Stability::stable);
    CHECK(stable.si.kind == SiKind::not_si);
    CHECK(stable.consistent);

    const ClassificationReport degenerate = classify(f5());
    CHECK(degenerate.boundary);
    CHECK(degenerate.si.kind == SiKind::not_si);
    CHECK(degenerate.stability == Stability::indeterminate);
    bool flagged = false;
    for (const std::string& flag : degenerate.flags)
        if (flag.find("share roots") != std::string::npos) flagged = true;
    CHECK(flagged);

    CHECK_THROWS_AS(classify(Polynomial::parse("7")), std::domain_error);
}

TEST_CASE("criteria agree with each other and the oracles on random inputs") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 60; ++round) {
        const Polynomial p = random_poly(rng, 1 + round % 8);
        const ClassificationReport report = classify(p);
        CHECK(report.duality_consistency);
        CHECK(report.consistent);
    }
    for (int round = 0; round < 25; ++round) {
        const GeneratedPoly si = random_si_poly(rng, 1 + round % 8);
        const ClassificationReport report = classify(si.poly);
        CHECK(report.criteria.si_hurwitz.verdict);
        CHECK(report.si.kind == SiKind::kind_i);
        CHECK(report.consistent);

        const GeneratedPoly stable = random_stable_poly(rng, 1 + round % 8);
        const ClassificationReport stable_report = classify(stable.poly);
        CHECK(stable_report.criteria.hurwitz_classic.verdict);
        CHECK(stable_report.criteria.stability_hankel.verdict);
    }
}

TEST_CASE("kind-II inputs classify through the reflection") {
    std::mt19937_64 rng(97);
    for (int round = 0; round < 15; ++round) {
        const GeneratedPoly gen = random_si_poly(rng, 1 + round % 6, SiKind::kind_ii);
        const ClassificationReport report = classify(gen.poly);
        CHECK(report.si.kind == SiKind::kind_ii);
        CHECK(report.reflected_criteria.si_hurwitz.verdict);
        CHECK_FALSE(report.criteria.si_hurwitz.verdict);
        CHECK(report.consistent);
    }
}
