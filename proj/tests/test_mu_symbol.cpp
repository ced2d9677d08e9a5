#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eismu/mu_symbol.hpp"
#include "helpers.hpp"

using namespace eismu;

namespace {

CompactOpenM2 open_b3() {
    return single_coset(
        Mat2q{Rational(1, 3), Rational(0), Rational(1, 3), Rational(0)});
}

CompactOpenM2 open_c5() {
    return single_coset(Mat2q{Rational(1, 5), Rational(2, 5), Rational(1, 5),
                              Rational(4, 5)});
}

bool mu_equal(const MuValue& a, const MuValue& b, int D) {
    return testutil::bi_equal_up_to(a.value, b.value, D);
}

} // namespace

TEST_CASE("whole-lattice value is supported on odd-odd monomials") {
    MuValue mu = mu_eval(whole_lattice_m2(), 12, 3);
    CHECK(mu.value.entry(0, 0).trim().is_zero());
    CHECK(mu.value.entry(1, 0).trim().is_zero());
    CHECK(mu.value.entry(0, 1).trim().is_zero());
    // the (1,1) entry is the projection of the square of the weight-2
    // lattice series, a nonzero holomorphic weight-4 form
    NearlyHol d11 = mu.value.entry(1, 1);
    CHECK(!d11.trim().is_zero());
    CHECK(d11.depth() == 0);
}

TEST_CASE("weight-1 product needs no projection") {
    CompactOpenM2 U = single_coset(
        Mat2q{Rational(0), Rational(0), Rational(1, 5), Rational(2, 5)});
    MuValue mu = mu_eval(U, 10, 2);
    NearlyHol want = eis_series(1, TorsionIndex{5, 0, 1}, 10) *
                     eis_series(1, TorsionIndex{5, 0, 2}, 10);
    CHECK(mu.value.entry(0, 0).trim() == want.trim());
}

TEST_CASE("distribution relation under refinement") {
    std::vector<CompactOpenM2> sample = {
        whole_lattice_m2(),
        single_coset(Mat2q{Rational(0), Rational(0), Rational(1, 3), Rational(1, 3)}),
    };
    for (long p : {2L, 3L}) {
        for (const auto& U : sample) {
            MuValue whole = mu_eval(U, 18, 3);
            BiSeries sum = mu_eval(refine(U, p)[0], 18, 3).value;
            bool first = true;
            for (const auto& part : refine(U, p)) {
                if (first) { first = false; continue; }
                sum += mu_eval(part, 18, 3).value;
            }
            CHECK(testutil::bi_equal_up_to(sum, whole.value, 3));
        }
    }
}

TEST_CASE("diagonal invariance") {
    CompactOpenM2 U = single_coset(
        Mat2q{Rational(0), Rational(0), Rational(1, 5), Rational(2, 5)});
    for (auto [a, d] : std::vector<std::pair<long, long>>{{2, 1}, {2, 3}, {1, -1}}) {
        Mat2q rho{Rational(a), Rational(0), Rational(0), Rational(d)};
        MuValue acted = gl2_act(rho, U, 18, 3);
        MuValue plain = mu_eval(U, 18, 3);
        CHECK(mu_equal(acted, plain, 3));
    }
}

TEST_CASE("identity action is trivial") {
    CompactOpenM2 U = open_b3();
    Mat2q id{Rational(1), Rational(0), Rational(0), Rational(1)};
    CHECK(mu_equal(gl2_act(id, U, 12, 3), mu_eval(U, 12, 3), 3));
}

TEST_CASE("two-term relation is exact") {
    for (const auto& U : {whole_lattice_m2(), open_b3(),
                          single_coset(Mat2q{Rational(0), Rational(1, 4),
                                             Rational(1, 2), Rational(0)})}) {
        ManinReport rep = manin1_check(U, 12, 3);
        CHECK(rep.pass);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("three-term relation holds modulo the Eisenstein span") {
    Manin2Report a = manin2_check(whole_lattice_m2(), 30, 3);
    CHECK(a.pass);
    for (const auto& [d, ok] : a.degree_pass) CHECK(ok);

    Manin2Report b = manin2_check(open_b3(), 30, 3);
    CHECK(b.pass);

    Manin2Report c = manin2_check(open_c5(), 45, 2);
    CHECK(c.pass);
}

TEST_CASE("symbol evaluation matches the distribution on the base path") {
    CompactOpenM2 U = open_b3();
    DivisorPath base = {{1, Cusp{1, 0}}, {-1, Cusp{0, 1}}};
    CHECK(mu_equal(symbol_eval(base, U, 12, 3), mu_eval(U, 12, 3), 3));

    DivisorPath reversed = {{1, Cusp{0, 1}}, {-1, Cusp{1, 0}}};
    MuValue neg = mu_eval(U, 12, 3);
    neg.value = -neg.value;
    CHECK(mu_equal(symbol_eval(reversed, U, 12, 3), neg, 3));
}

TEST_CASE("symbol evaluation is additive along paths") {
    CompactOpenM2 U = open_b3();
    Cusp half{1, 2}, zero{0, 1}, third{1, 3};
    auto seg = [&](Cusp from, Cusp to) {
        return symbol_eval({{1, to}, {-1, from}}, U, 12, 2);
    };
    BiSeries lhs = seg(zero, half).value + seg(half, third).value;
    CHECK(testutil::bi_equal_up_to(lhs, seg(zero, third).value, 2));
}
