#include "sipoly/roots.hpp"

#include "sipoly/generators.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace sipoly;
using namespace sipoly::testfix;

namespace {

bool contains(const IsolatingInterval& iv, const Rational& x) {
    return iv.lo < x && x <= iv.hi;
}

}  // namespace

TEST_CASE("sturm chain shapes") {
    const auto chain1 = sturm_chain(f1());
    REQUIRE(chain1.size() == 2);
    CHECK(chain1[0] == Polynomial::parse("1 -1"));
    CHECK(chain1[1].degree() == 0);

    const auto chain2 = sturm_chain(f2());
    REQUIRE(chain2.size() == 3);
    CHECK(chain2.back().degree() == 0);
    CHECK(chain2.back().coeff(0) > 0);  // -rem of the primitive division is 9/4

    const auto chain4 = sturm_chain(f4());
    CHECK(chain4.back().degree() == 1);  // gcd(p, p') = z + 1
    CHECK(gcd(f4(), f4().derivative()) == Polynomial::parse("1 1"));
}

TEST_CASE("root counting in an interval") {
    CHECK(count_real_roots(f2(), q(0), q(3)) == 1);
    CHECK(count_real_roots(f3(), q(-10), q(10)) == 3);
    CHECK(count_real_roots(f5(), q(-10), q(10)) == 0);
    CHECK_THROWS_AS(count_real_roots(f2(), q(2), q(3)), std::domain_error);
}

TEST_CASE("isolation of fixture roots") {
    const auto ivs3 = isolate_real_roots(f3());
    REQUIRE(ivs3.size() == 3);
    CHECK(contains(ivs3[0], q(-2)));
    CHECK(contains(ivs3[1], q(1)));
    CHECK(contains(ivs3[2], q(3)));

    const auto ivs1 = isolate_real_roots(f1());
    REQUIRE(ivs1.size() == 1);
    CHECK(contains(ivs1[0], q(1)));

    CHECK(isolate_real_roots(f5()).empty());
    CHECK_THROWS_AS(isolate_real_roots(f4()), std::domain_error);
}

TEST_CASE("isolation recovers constructed roots") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 5);
    for (int round = 0; round < 40; ++round) {
        std::set<Rational> roots;
        const int count = 1 + round % 6;
        while (static_cast<int>(roots.size()) < count)
            roots.insert(q(num(rng), den(rng)));
        const std::vector<Rational> root_list(roots.begin(), roots.end());
        const Polynomial p = Polynomial::from_roots(root_list, q(1));
        const auto intervals = isolate_real_roots(p);
        REQUIRE(intervals.size() == roots.size());
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            CHECK(contains(intervals[i], root_list[i]));  // both sorted ascending
            if (i > 0) CHECK(intervals[i - 1].hi <= intervals[i].lo);  // disjoint
        }
    }
}

TEST_CASE("refinement keeps the root and reaches the width") {
    auto iv2 = isolate_real_roots(f2());
    const IsolatingInterval tight = refine(f2(), iv2[1], q(1, 1024));
    CHECK(tight.width() <= q(1, 1024));
    CHECK(contains(tight, q(2)));

    const IsolatingInterval one = refine(f1(), isolate_real_roots(f1())[0], q(1, 2));
    CHECK(contains(one, q(1)));

    const IsolatingInterval neg =
        refine(f3(), isolate_real_roots(f3())[0], q(1, 1000000));
    CHECK(neg.width() <= q(1, 1000000));
    CHECK(contains(neg, q(-2)));
}

TEST_CASE("refinement never loses the sign change") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 20; ++round) {
        const GeneratedPoly gen = random_si_poly(rng, 2 + round % 5);
        Rational width(1, 2);
        for (auto iv : isolate_real_roots(gen.poly)) {
            for (int step = 0; step < 6; ++step) {
                iv = refine(gen.poly, iv, width);
                width /= 16;
                const int count = [&] {
                    int hits = 0;
                    for (const Rational& root : gen.roots)
                        if (contains(iv, root)) ++hits;
                    return hits;
                }();
                CHECK(count == 1);
            }
            width = q(1, 2);
        }
    }
}

TEST_CASE("self-interlacing oracle on the fixtures") {
    const SiVerdict v3 = si_oracle(f3());
    CHECK(v3.kind == SiKind::kind_i);
    REQUIRE(v3.witnesses.size() == 3);
    CHECK(contains(v3.witnesses[0], q(3)));   // magnitude-descending order
    CHECK(contains(v3.witnesses[1], q(-2)));
    CHECK(contains(v3.witnesses[2], q(1)));

    const SiVerdict reflected = si_oracle(-f3().reflect());
    CHECK(reflected.kind == SiKind::kind_ii);

    const SiVerdict repeated = si_oracle(f4());
    CHECK(repeated.kind == SiKind::not_si);
    CHECK(repeated.reason == SiFailure::repeated_roots);

    const SiVerdict complex_roots = si_oracle(f5());
    CHECK(complex_roots.kind == SiKind::not_si);
    CHECK(complex_roots.reason == SiFailure::non_real_roots);

    // equal magnitudes: p(z) and p(-z) share the roots +/-2
    const SiVerdict tie = si_oracle(Polynomial::from_roots({q(2), q(-2), q(1)}, q(1)));
    CHECK(tie.kind == SiKind::not_si);
    CHECK(tie.reason == SiFailure::magnitude_order);
    CHECK_FALSE(tie.indeterminate);

    const SiVerdict zero_root = si_oracle(Polynomial::from_roots({q(2), q(0)}, q(1)));
    CHECK(zero_root.kind == SiKind::not_si);

    CHECK_THROWS_AS(si_oracle(Polynomial::parse("5")), std::domain_error);

    // the part-derivative of a kind-I quartic stays kind I
    const SiVerdict member = si_oracle(markov_family(Polynomial::parse("1 -3 -7 5 2"), 1));
    CHECK(member.kind == SiKind::kind_i);
}

TEST_CASE("oracle detects both kinds from constructed magnitude patterns") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 30; ++round) {
        const int degree = 1 + round % 7;
        const GeneratedPoly one = random_si_poly(rng, degree, SiKind::kind_i);
        CHECK(si_oracle(one.poly).kind == SiKind::kind_i);
        const GeneratedPoly two = random_si_poly(rng, degree, SiKind::kind_ii);
        CHECK(si_oracle(two.poly).kind == SiKind::kind_ii);
    }
}

TEST_CASE("wrong sign pattern is reported") {
    // magnitudes 3 > 2 > 1 with signs +, +, - match neither kind
    const Polynomial p = Polynomial::from_roots({q(3), q(2), q(-1)}, q(1));
    const SiVerdict v = si_oracle(p);
    CHECK(v.kind == SiKind::not_si);
    CHECK(v.reason == SiFailure::wrong_sign_pattern);
}

TEST_CASE("stability oracle") {
    CHECK(stability_oracle(Polynomial::parse("1 1 2")) == Stability::stable);
    CHECK(stability_oracle(f5()) == Stability::indeterminate);
    CHECK(stability_oracle(f1()) == Stability::not_stable);
}

TEST_CASE("stability oracle accepts left-half-plane products") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 25; ++round) {
        const GeneratedPoly gen = random_stable_poly(rng, 1 + round % 7);
        CHECK(stability_oracle(gen.poly) == Stability::stable);
    }
}
