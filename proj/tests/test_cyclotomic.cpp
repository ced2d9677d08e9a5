#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eismu/cyclotomic.hpp"
#include "eismu/errors.hpp"
#include "helpers.hpp"

using namespace eismu;

TEST_CASE("pinned root arithmetic") {
    Cyclo z3 = Cyclo::root(3, 1);
    Cyclo z3sq = z3 * z3;
    Cyclo expect = Cyclo(Rational(-1), 3) - z3;
    CHECK(z3sq == expect);

    Cyclo z4 = Cyclo::root(4, 1);
    Cyclo prod = (Cyclo::one(4) + z4) * (Cyclo::one(4) - z4);
    CHECK(prod == Cyclo(Rational(2), 4));

    Cyclo inv = (Cyclo::one(3) - z3).inverse();
    Cyclo want = Cyclo(Rational(2, 3), 3);
    Cyclo third = z3;
    third *= Rational(1, 3);
    want += third;
    CHECK(inv == want);
}

TEST_CASE("cyclotomic polynomials multiply to x^N - 1") {
    for (long N = 1; N <= 24; ++N) {
        std::vector<Int> prod{1};
        for (long d = 1; d <= N; ++d) {
            if (N % d != 0) continue;
            const auto& phi = cyclotomic_polynomial(d);
            std::vector<Int> next(prod.size() + phi.size() - 1, 0);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j)
                    next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        REQUIRE(prod.size() == static_cast<size_t>(N + 1));
        CHECK(prod[0] == -1);
        CHECK(prod[N] == 1);
        for (long i = 1; i < N; ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("field axioms on random elements") {
    testutil::Rng rng;
    for (long N : {3L, 4L, 5L, 7L, 8L, 12L}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto rand_elt = [&]() {
                Cyclo acc = Cyclo::zero(N);
                long phi = euler_phi(N);
                for (long e = 0; e < phi; ++e) {
                    Cyclo t = Cyclo::root(N, e);
                    t *= rng.rational();
                    acc += t;
                }
                return acc;
            };
            Cyclo a = rand_elt(), b = rand_elt(), c = rand_elt();
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo::one(N));
        }
    }
}

TEST_CASE("root powers wrap and reduce") {
    for (long N : {5L, 6L, 9L}) {
        Cyclo z = Cyclo::root(N, 1);
        Cyclo p = Cyclo::one(N);
        for (long e = 0; e < 2 * N; ++e) {
            CHECK(p == Cyclo::root(N, e % N));
            p = p * z;
        }
    }
}

TEST_CASE("embedding and descent round trip") {
    Cyclo z3 = Cyclo::root(3, 1);
    Cyclo up = z3.embed(12);
    CHECK(up.level() == 12);
    CHECK(up.descend(3) == z3);
    CHECK(up == Cyclo::root(12, 4));

    Cyclo r = Cyclo(Rational(7, 5), 12);
    CHECK(r.is_rational());
    CHECK(r.descend(1) == Cyclo(Rational(7, 5), 1));
    CHECK_THROWS_AS(Cyclo::root(12, 1).descend(3), NotDivisible);
}

TEST_CASE("division by zero is refused") {
    CHECK_THROWS_AS(Cyclo::zero(4).inverse(), DivisionByZero);
}
