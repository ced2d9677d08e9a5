#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eismu/eisenstein.hpp"
#include "eismu/errors.hpp"
#include "eismu/qseries.hpp"
#include "helpers.hpp"

using namespace eismu;

namespace {

QExpansion random_expansion(testutil::Rng& rng, long level, long precision) {
    QExpansion f(level, precision);
    for (long m = 0; m < precision; ++m) {
        if (rng.range(0, 2) == 0) continue;
        Cyclo c = Cyclo::root(level, rng.range(0, level - 1));
        c *= rng.rational();
        f.set_coeff(m, c);
    }
    return f;
}

NearlyHol random_nearly(testutil::Rng& rng, long level, long precision,
                        int weight, int depth) {
    std::vector<QExpansion> parts;
    for (int d = 0; d <= depth; ++d)
        parts.push_back(random_expansion(rng, level, precision));
    return NearlyHol(weight, std::move(parts));
}

} // namespace

TEST_CASE("ring axioms for q-expansions") {
    testutil::Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        long level = rng.range(1, 5);
        QExpansion a = random_expansion(rng, level, 12);
        QExpansion b = random_expansion(rng, level, 12);
        QExpansion c = random_expansion(rng, level, 12);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == QExpansion(level, 12));
    }
}

TEST_CASE("derivative is a derivation") {
    testutil::Rng rng;
    for (int trial = 0; trial < 8; ++trial) {
        long level = rng.range(1, 4);
        QExpansion a = random_expansion(rng, level, 14);
        QExpansion b = random_expansion(rng, level, 14);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("projection fixes holomorphic forms and kills raised ones") {
    testutil::Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        long level = rng.range(1, 4);
        int depth = static_cast<int>(rng.range(0, 2));
        int weight = static_cast<int>(rng.range(depth + 2, 10));
        NearlyHol f = random_nearly(rng, level, 10, weight, depth);
        QExpansion zero(level, 10);
        CHECK(f.raise().holomorphic_projection() == zero);
    }
}

TEST_CASE("lowering annihilates holomorphic forms") {
    testutil::Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        long level = rng.range(1, 4);
        int weight = static_cast<int>(rng.range(1, 10));
        NearlyHol f = NearlyHol::holomorphic(weight, random_expansion(rng, level, 10));
        NearlyHol low = f.lower();
        CHECK(low.trim().is_zero());
    }
}

TEST_CASE("lowering inverts one raise step on the top part") {
    // raising a holomorphic form and lowering back recovers a known multiple
    NearlyHol e4 = level1_series(4, 12);
    NearlyHol r = e4.raise();
    CHECK(r.depth() == 1);
    NearlyHol back = r.lower();
    // the rho-linear slot of raise(f) is weight(f) * f for holomorphic f
    NearlyHol expect = e4;
    expect.scale(Rational(4));
    CHECK(back.trim() == expect.trim());
}

TEST_CASE("weight-2 carries its closed-form constant") {
    NearlyHol e2 = level1_series(2, 10);
    CHECK(e2.depth() == 1);
    CHECK(e2.part(0).coeff(0) == Cyclo(Rational(-1, 12), 1));
    CHECK(e2.part(1).coeff(0) == Cyclo(Rational(-1), 1));
    NearlyHol low = e2.lower();
    CHECK(low.part(0).coeff(0) == Cyclo(Rational(-1), 1));
    for (long m = 1; m < 10; ++m) CHECK(low.part(0).coeff(m).is_zero());
}

TEST_CASE("projection guard refuses weight 2 at positive depth") {
    NearlyHol e2 = level1_series(2, 10);
    CHECK_THROWS_AS(e2.holomorphic_projection(), UnsupportedWeightDepth);
}

TEST_CASE("level raising rescales exponents") {
    NearlyHol e4 = level1_series(4, 6);
    NearlyHol up = e4.raise_level(3);
    CHECK(up.level() == 3);
    CHECK(up.precision() == 18);
    for (long m = 0; m < 6; ++m)
        CHECK(up.part(0).coeff(3 * m) == e4.part(0).coeff(m).embed(3));
}
