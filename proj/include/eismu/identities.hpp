#pragma once

#include <map>
#include <string>
#include <vector>

#include "eismu/qseries.hpp"

namespace eismu {

/* Divisor-power sums sigma_r(n) for n <= bound. */
class SigmaTable {
public:
    explicit SigmaTable(long bound);
    long bound() const { return bound_; }
    const Int& sigma(int r, long n) const;
    // sum over i+j = n, i,j >= 1 of sigma_r(i) sigma_s(j)
    Int convolution(int r, int s, long n) const;

private:
    long bound_;
    std::map<int, std::vector<Int>> values_;
    void ensure(int r);
};

struct IdentityReport {
    std::string name;
    bool pass = false;
    long first_fail = 0; // 0 when pass
    std::string detail;
};

// the master convolution identity, all depth components, 2 <= n <= n_max
std::vector<IdentityReport> verify_master_convolution(int n_max, long precision);

struct DivisorSumReport {
    std::vector<IdentityReport> printed;  // the three published forms
    std::vector<IdentityReport> derived;  // oracle-derived corrected forms
    std::vector<std::string> errata;      // human-readable corrections
    bool derived_all_pass = false;
};

// printed divisor-sum corollaries vs the oracle, plus derived corrections
DivisorSumReport verify_divisor_sums(long n_max);

// the P_n polynomial identity, 1 <= n <= n_max
std::vector<IdentityReport> verify_polynomial_identity(int n_max, long precision);

struct GeneratorReport {
    bool e4_ok = false;
    bool e6_ok = false;
    bool delta_ok = false;
    std::vector<Rational> delta_coeffs; // q^1..q^4
    bool pass() const { return e4_ok && e6_ok && delta_ok; }
};

// weight-4/6 reconstruction from the weight-2 series and the cusp generator
GeneratorReport verify_generators(long precision);

// q prod (1-q^n)^24, the weight-12 cusp generator
QExpansion delta_product_oracle(long precision);

} // namespace eismu
