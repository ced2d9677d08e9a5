#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eismu/identities.hpp"

using namespace eismu;

TEST_CASE("sigma table basics") {
    SigmaTable st(50);
    CHECK(st.sigma(1, 6) == 12);
    CHECK(st.sigma(3, 4) == 73);
    // sum over i+j=4, i,j >= 1 of sigma1(i) sigma1(j)
    CHECK(st.convolution(1, 1, 4) == Int(1 * 4 + 3 * 3 + 4 * 1));
}

TEST_CASE("master convolution identity") {
    auto reports = verify_master_convolution(12, 30);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.first_fail == 0);
    }
}

TEST_CASE("divisor-sum identities and their corrections") {
    DivisorSumReport r = verify_divisor_sums(100);
    REQUIRE(r.printed.size() == 3);
    CHECK(r.printed[0].pass);
    CHECK(!r.printed[1].pass);
    CHECK(r.printed[1].first_fail == 1);
    CHECK(!r.printed[2].pass);
    CHECK(r.printed[2].first_fail == 1);
    CHECK(r.derived_all_pass);
    CHECK(r.errata.size() == 2);
}

TEST_CASE("graded polynomial identity, corrected sign") {
    auto reports = verify_polynomial_identity(8, 26);
    CHECK(!reports.empty());
    bool saw_erratum = false;
    for (const auto& r : reports) {
        CHECK(r.pass);
        if (r.detail.find("published sign") != std::string::npos) saw_erratum = true;
    }
    CHECK(saw_erratum);
}

TEST_CASE("generator relations and the discriminant") {
    GeneratorReport r = verify_generators(50);
    CHECK(r.e4_ok);
    CHECK(r.e6_ok);
    CHECK(r.delta_ok);
    REQUIRE(r.delta_coeffs.size() >= 4);
    CHECK(r.delta_coeffs[0] == Rational(1));
    CHECK(r.delta_coeffs[1] == Rational(-24));
    CHECK(r.delta_coeffs[2] == Rational(252));
    CHECK(r.delta_coeffs[3] == Rational(-1472));
    CHECK(r.pass());
}
