#include "bmetric/completion.hpp"
#include "bmetric/demos.hpp"
#include "bmetric/errors.hpp"

#include "random_spaces.hpp"
#include "sequences.hpp"

#include <doctest.h>

#include <random>

using namespace bmetric;
using bmetric::testing::converging;
using bmetric::testing::random_rational;

namespace {

Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

TEST_CASE("embedded points evaluate to exact centers") {
    auto space = rationals_abs();
    CompletionPoint a = embed(space, Rational(3, 2));
    CompletionPoint b = embed(space, Rational(1, 2));
    RationalInterval I = dstar_interval(a, b, 10);
    CHECK(I == RationalInterval{Rational(4, 5), Rational(6, 5)});
    CHECK(I.contains(1));

    std::mt19937 rng(9001);
    for (int trial = 0; trial < 100; ++trial) {
        Rational x = random_rational(rng), y = random_rational(rng);
        for (long i : {1L, 10L, 1000L}) {
            RationalInterval J = dstar_interval(embed(space, x), embed(space, y), i);
            // hi is never clamped, so it recovers the evaluated center.
            CHECK(J.hi - Rational(2, i) == abs_val(x - y));
            CHECK(J.contains(abs_val(x - y)));
        }
    }
}

TEST_CASE("validate_modulus") {
    auto space = rationals_abs();
    CompletionPoint c = embed(space, Rational(7, 3));
    for (long i : {1L, 5L, 100L}) {
        CHECK_FALSE(validate_modulus(c.rep, i, 10));
    }

    CompletionPoint recip = reciprocal_sequence(space);
    for (long i : {1L, 3L, 50L}) {
        CHECK_FALSE(validate_modulus(recip.rep, i, 10));
    }

    CauchySequence divergent;
    divergent.space = space;
    divergent.term = [](long n) { return Rational(n); };
    divergent.modulus = [](long) { return 1L; };
    auto violation = validate_modulus(divergent, 1, 5);
    REQUIRE(violation);
    CHECK(violation->distance > 1);
}

TEST_CASE("dstar_interval symmetry and identity") {
    auto space = rationals_abs();
    CompletionPoint a = sqrt2_sequence(space);
    CompletionPoint b = embed(space, Rational(1, 3));
    for (long i : {1L, 7L, 50L}) {
        CHECK(dstar_interval(a, b, i) == dstar_interval(b, a, i));
        CHECK(dstar_interval(a, a, i) == RationalInterval{0, Rational(2, i)});
    }
}

TEST_CASE("dstar_interval rejects mixed presentations") {
    CompletionPoint a = embed(rationals_abs(), 0);
    CompletionPoint b = embed(example3_presentation(), 0);
    CHECK_THROWS_AS(dstar_interval(a, b, 10), MixedSpacesError);
}

TEST_CASE("sqrt2 sequence vs 0 encloses sqrt(2) tightly") {
    auto space = rationals_abs();
    RationalInterval I = dstar_interval(sqrt2_sequence(space), embed(space, 0), 1000);
    CHECK(I.width() == Rational(4, 1000));
    CHECK(I.contains(Rational(141421356, 100000000)));
    // much finer truncation as a stand-in for the true limit
    CHECK(I.contains(sqrt2_truncation(50)));
}

TEST_CASE("equivalence certificates") {
    auto space = rationals_abs();
    CompletionPoint a = sqrt2_sequence(space);
    CHECK(equivalent_at(a, a, Rational(1, 100), 201) == Equivalence::Equivalent);

    CHECK(equivalent_at(embed(space, 0), embed(space, 1), 1, 10) == Equivalence::Distinct);

    // a second route to sqrt(2): deeper truncations
    CauchySequence shifted;
    shifted.space = space;
    shifted.term = [](long n) { return sqrt2_truncation(n + 3); };
    shifted.modulus = [](long i) { return i; };
    CompletionPoint b{shifted};
    for (long i : {5L, 40L, 300L}) {
        CHECK(equivalent_at(a, b, Rational(1, 100), i) != Equivalence::Distinct);
    }
    CHECK(equivalent_at(a, b, Rational(1, 100), 300) == Equivalence::Equivalent);
}

TEST_CASE("strong triangle residual stays nonpositive") {
    auto space = rationals_abs();
    std::mt19937 rng(9002);
    for (int trial = 0; trial < 1000; ++trial) {
        CompletionPoint a = converging(space, random_rational(rng), random_rational(rng, 2, 3));
        CompletionPoint b = converging(space, random_rational(rng), random_rational(rng, 2, 3));
        CompletionPoint c = converging(space, random_rational(rng), random_rational(rng, 2, 3));
        CHECK(strong_triangle_check(a, b, c, 20).lo <= 0);
        CHECK(strong_triangle_check(a, b, a, 20).lo <= 0);
    }
    // embedded base points satisfy the axiom exactly
    CompletionPoint x = embed(space, 0), y = embed(space, 5), z = embed(space, 9);
    CHECK(strong_triangle_check(x, y, z, 3).lo <= 0);
}

TEST_CASE("limit of a constant sequence of completion points") {
    auto space = rationals_abs();
    CompletionPoint a = sqrt2_sequence(space);
    CompletionSequence xs;
    xs.at = [a](long) { return a; };
    xs.modulus = [](long) { return 1L; };
    CompletionPoint limit = limit_point(xs);
    CHECK(equivalent_at(limit, a, Rational(1, 1000), 5000) == Equivalence::Equivalent);
}

TEST_CASE("limit of embedded rational approximations reaches sqrt(2)") {
    auto space = rationals_abs();
    CompletionSequence xs;
    xs.at = [space](long n) { return embed(space, sqrt2_truncation(n)); };
    xs.modulus = [](long j) { return 8 * j; };
    CompletionPoint limit = limit_point(xs);
    CHECK(equivalent_at(limit, sqrt2_sequence(space), Rational(1, 1000), 2001) ==
          Equivalence::Equivalent);

    // tail enclosures shrink like 1/n + 2K/i
    for (long n : {10L, 100L}) {
        RationalInterval I = dstar_interval(xs.at(n), limit, 400);
        CHECK(I.hi <= Rational(1, n) + Rational(2, 400) + Rational(1, 100));
    }
}

TEST_CASE("limit_point rejects a lying modulus") {
    auto space = rationals_abs();
    CompletionSequence xs;
    xs.at = [space](long n) { return embed(space, Rational(n)); };
    xs.modulus = [](long) { return 1L; };
    CHECK_THROWS_AS(limit_point(xs), BadModulusError);
}

TEST_CASE("density witnesses") {
    auto space = rationals_abs();
    DensityWitness exact = density_witness(embed(space, Rational(5, 7)), 10);
    CHECK(exact.point == Rational(5, 7));
    CHECK(exact.certified_distance.lo == 0);

    CompletionPoint a = sqrt2_sequence(space);
    DensityWitness w = density_witness(a, 100);
    CHECK(abs_val(w.point - sqrt2_truncation(50)) <= Rational(1, 100));
    CHECK(w.certified_distance.hi <= Rational(1, 100) + Rational(2, 100));

    for (long j : {5L, 20L}) {
        CHECK(density_witness(a, 2 * j).certified_distance.hi <=
              density_witness(a, j).certified_distance.hi);
    }
}

TEST_CASE("well-posedness probe flags the example 3 clash") {
    auto space = example3_presentation();
    auto quad = example3_quadruple(space);
    auto report = wellposedness_probe(quad.x, quad.z, quad.y, quad.w, 100, TailCertificate{1},
                                      TailCertificate{1});
    CHECK(report.first_limit == RationalInterval{4, 4});
    CHECK(report.second_limit == RationalInterval{1, 1});
    CHECK(report.clash);
}

TEST_CASE("well-posedness probe passes on constant equal sequences") {
    auto space = example3_presentation();
    CompletionPoint half = embed(space, Rational(1, 2));
    auto report =
        wellposedness_probe(half, half, half, half, 100, TailCertificate{1}, TailCertificate{1});
    CHECK(report.first_limit == RationalInterval{0, 0});
    CHECK_FALSE(report.clash);
}

TEST_CASE("well-posedness probe never clashes on a strong b presentation") {
    auto space = rationals_abs();
    std::mt19937 rng(9003);
    for (int trial = 0; trial < 200; ++trial) {
        Rational q = random_rational(rng), p = random_rational(rng);
        CompletionPoint x = converging(space, q, random_rational(rng, 2, 3));
        CompletionPoint z = converging(space, q, random_rational(rng, 2, 3));
        CompletionPoint y = converging(space, p, random_rational(rng, 2, 3));
        CompletionPoint w = converging(space, p, random_rational(rng, 2, 3));
        auto report = wellposedness_probe(x, z, y, w, 100);
        CHECK_FALSE(report.clash);
        CHECK(report.first_limit.contains(abs_val(q - p)));
        CHECK(report.second_limit.contains(abs_val(q - p)));
    }
}

TEST_CASE("well-posedness probe rejects non-equivalent inputs") {
    auto space = rationals_abs();
    CHECK_THROWS_AS(wellposedness_probe(embed(space, 0), embed(space, 1), embed(space, 0),
                                        embed(space, 0), 100),
                    NotEquivalentInputsError);
}
