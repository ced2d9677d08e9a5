#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "eismu/compact_open.hpp"
#include "eismu/errors.hpp"
#include "helpers.hpp"

using namespace eismu;

TEST_CASE("mixed moduli canonicalize to the common refinement") {
    // a modulus-1 coset next to a modulus-1/2 coset: both are unions of
    // modulus-1 cosets, and the larger (modulus-1/2) one splits into 2^4
    // of them, one of which coincides with the modulus-1 input
    Mat2q zero{Rational(0), Rational(0), Rational(0), Rational(0)};
    Mat2q half{Rational(1, 2), Rational(0), Rational(0), Rational(0)};
    CompactOpenM2 U = canonicalize_m2({{zero, Rational(1)}, {half, Rational(1, 2)}});
    CHECK(U.alpha == Rational(1));
    CHECK(U.pieces.size() == 16);
    CHECK(std::is_sorted(U.pieces.begin(), U.pieces.end()));
}

TEST_CASE("set-equal inputs canonicalize identically") {
    Mat2q a{Rational(1, 3), Rational(0), Rational(2, 3), Rational(0)};
    Mat2q b{Rational(4, 3), Rational(1), Rational(-1, 3), Rational(2)};
    CompactOpenM2 u = canonicalize_m2({{a, Rational(1)}});
    CompactOpenM2 v = canonicalize_m2({{b, Rational(1)}});
    CHECK(u == v); // representatives differ by integer matrices
    CompactOpenM2 w = canonicalize_m2({{a, Rational(1)}, {b, Rational(1)}});
    CHECK(w == u); // duplicates collapse
}

TEST_CASE("column projections") {
    CompactOpenM2 U = single_coset(
        Mat2q{Rational(0), Rational(0), Rational(1, 5), Rational(2, 5)});
    auto [U1, U2] = project_cols(U);
    CHECK(U1.pieces.size() == 1);
    CHECK(U1.pieces[0] == Vec2q{Rational(0), Rational(1, 5)});
    CHECK(U2.pieces[0] == Vec2q{Rational(0), Rational(2, 5)});
    CHECK(native_level(U1) == 5);
    CHECK(native_level(U2) == 5);
}

TEST_CASE("right multiplication by integer and diagonal matrices") {
    CompactOpenM2 U = whole_lattice_m2();
    Mat2q uni{Rational(1), Rational(1), Rational(0), Rational(1)};
    CHECK(right_mul(U, uni) == U);

    Mat2q d12{Rational(1), Rational(0), Rational(0), Rational(2)};
    CompactOpenM2 V = right_mul(U, d12);
    CHECK(V.alpha == Rational(2));
    CHECK(V.pieces.size() == 4);

    // the half-scaled lattice contains the whole one: modulus stays 1
    Mat2q dhalf{Rational(1, 2), Rational(0), Rational(0), Rational(1)};
    CompactOpenM2 W = right_mul(U, dhalf);
    CHECK(W.alpha == Rational(1));
    CHECK(W.pieces.size() == 4);
}

TEST_CASE("right multiplication is a right action") {
    CompactOpenM2 U = single_coset(
        Mat2q{Rational(1, 3), Rational(0), Rational(0), Rational(2, 3)});
    Mat2q r1{Rational(2), Rational(1), Rational(1), Rational(1)};
    Mat2q r2{Rational(1, 2), Rational(0), Rational(1), Rational(3)};
    CHECK(right_mul(right_mul(U, r1), r2) == right_mul(U, r1 * r2));
}

TEST_CASE("refinement splits into p^4 parts inside the original") {
    for (long p : {2L, 3L}) {
        CompactOpenM2 U = single_coset(
            Mat2q{Rational(0), Rational(0), Rational(1, 3), Rational(1, 3)});
        auto parts = refine(U, p);
        CHECK(parts.size() == static_cast<size_t>(p * p * p * p));
        std::set<std::vector<Rational>> seen;
        for (const auto& part : parts) {
            REQUIRE(part.pieces.size() == 1);
            CHECK(part.alpha == U.alpha * Rational(p));
            const Mat2q& g = part.pieces[0];
            seen.insert({g.a, g.b, g.c, g.d});
            // the representative reduces into U mod the coarse modulus
            Mat2q red{reduce_mod(g.a, U.alpha), reduce_mod(g.b, U.alpha),
                      reduce_mod(g.c, U.alpha), reduce_mod(g.d, U.alpha)};
            CHECK(red == U.pieces[0]);
        }
        CHECK(seen.size() == parts.size()); // disjoint representatives
    }
}

TEST_CASE("series of an open: direct scaling examples") {
    // (0,1/2) + 2 Z^2: beta/alpha = (0,1/4), the X^n coefficient is
    // 2^-(n+1) times the weight-(n+1) series at that quarter index
    CompactOpenQ2 V;
    V.alpha = Rational(2);
    V.pieces = {Vec2q{Rational(0), Rational(1, 2)}};
    auto [series, combo] = e_compact_open(V, 4, 12, 3);
    for (int n = 0; n <= 3; ++n) {
        NearlyHol want = eis_series(n + 1, TorsionIndex{4, 0, 1}, 12);
        Rational s(1);
        for (int t = 0; t <= n; ++t) s *= Rational(1, 2);
        s.canonicalize();
        want.scale(s);
        CHECK(series.entry(n, 0).trim() == want.trim());
    }
}

TEST_CASE("scaling law of the open series") {
    // E_{alpha V}(alpha X) = (1/alpha) E_V(X)
    CompactOpenQ2 V;
    V.alpha = Rational(1);
    V.pieces = {Vec2q{Rational(1, 3), Rational(2, 3)}};
    for (Rational alpha : std::vector<Rational>{Rational(2), Rational(3),
                                                Rational(1) / 2}) {
        CompactOpenQ2 aV;
        aV.alpha = V.alpha * alpha;
        aV.pieces = {Vec2q{V.pieces[0].x * alpha, V.pieces[0].y * alpha}};
        long lcm_level = 12;
        auto lhs = e_compact_open(aV, lcm_level, 36, 5).series.substitute(
            Mat2q{alpha, Rational(0), Rational(0), Rational(1)});
        auto rhs = e_compact_open(V, lcm_level, 36, 5).series;
        rhs.scale(Rational(1) / alpha);
        CHECK(testutil::bi_equal_up_to(lhs, rhs, 5));
    }
}

TEST_CASE("additivity over disjoint pieces") {
    CompactOpenQ2 V1, V2, both;
    V1.alpha = V2.alpha = both.alpha = Rational(1);
    V1.pieces = {Vec2q{Rational(1, 5), Rational(0)}};
    V2.pieces = {Vec2q{Rational(2, 5), Rational(1, 5)}};
    both.pieces = {V1.pieces[0], V2.pieces[0]};
    auto a = e_compact_open(V1, 5, 10, 3).series;
    auto b = e_compact_open(V2, 5, 10, 3).series;
    auto c = e_compact_open(both, 5, 10, 3).series;
    CHECK(testutil::bi_equal_up_to(a + b, c, 3));
}

TEST_CASE("text round trip") {
    std::string text = "1/3,0,2/3,1/3 mod 1 + 0,1/3,1/3,2/3 mod 1";
    CompactOpenM2 U = parse_compact_open(text);
    CHECK(U.pieces.size() == 2);
    CompactOpenM2 back = parse_compact_open(format_compact_open(U));
    CHECK(back == U);
    CHECK_THROWS_AS(parse_compact_open("1,2,3 mod 1"), IOFailure);
}
