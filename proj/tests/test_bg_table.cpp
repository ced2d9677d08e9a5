#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eismu/bg_table.hpp"
#include "eismu/json_io.hpp"
#include "helpers.hpp"

using namespace eismu;

TEST_CASE("coset representatives") {
    auto reps2 = coset_reps(2);
    REQUIRE(reps2.size() == 3);
    std::vector<std::pair<long, long>> pairs;
    for (const auto& [p, g] : reps2) pairs.push_back({p.c, p.d});
    CHECK(pairs == std::vector<std::pair<long, long>>{{0, 1}, {1, 0}, {1, 1}});

    auto reps5 = coset_reps(5);
    CHECK(reps5.size() == 24);
    for (const auto& [p, g] : reps5) {
        CHECK(g.det() == 1);
        CHECK(((g.c - p.c) % 5 + 5) % 5 == 0);
        CHECK(((g.d - p.d) % 5 + 5) % 5 == 0);
    }
}

TEST_CASE("weight-2 table at level 5 vanishes") {
    BGSymbolTable t = bg_build(5, 2);
    CHECK(t.reps.size() == 24);
    for (const auto& [p, poly] : t.entries)
        for (const auto& [key, f] : poly) CHECK(f.is_zero());
}

TEST_CASE("entries live on the expected degree slice") {
    long N = 3;
    long prec = sturm_bound(N, 4) + 8;
    CuspPoly e = bg_entry(N, 4, Mat2i{0, -1, 1, 0}, prec);
    CHECK(!e.empty());
    for (const auto& [key, f] : e) CHECK(key.degree() == 2);
}

TEST_CASE("table entries transform under the level subgroup") {
    long N = 5;
    Mat2i delta{1, 0, N, 1}; // in the level subgroup
    Mat2i gamma{0, -1, 1, 0};
    long prec2 = sturm_bound(N, 2) + 8;
    CHECK(bg_entry(N, 2, delta * gamma, prec2) == bg_entry(N, 2, gamma, prec2));

    long prec4 = sturm_bound(N, 4) + 8;
    CuspPoly lhs = bg_entry(N, 4, delta * gamma, prec4);
    CuspPoly rhs = substitute_poly(bg_entry(N, 4, gamma, prec4), delta, 2);
    CHECK(lhs == rhs);
}

TEST_CASE("weight-4 table at level 5 has nonzero cuspidal content") {
    BGSymbolTable t = bg_build(5, 4);
    bool any = false;
    for (const auto& [p, poly] : t.entries)
        for (const auto& [key, f] : poly)
            if (!f.is_zero()) any = true;
    CHECK(any);
}

TEST_CASE("JSON round trip is bit-exact") {
    BGSymbolTable t = bg_build(5, 2);
    nlohmann::json j = bg_to_json(t);
    BGSymbolTable u = bg_from_json(j);
    nlohmann::json j2 = bg_to_json(u);
    CHECK(j.dump() == j2.dump());
    CHECK(u.N == t.N);
    CHECK(u.k == t.k);
    CHECK(u.entries.size() == t.entries.size());
}
