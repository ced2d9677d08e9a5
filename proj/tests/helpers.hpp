#pragma once

#include <numeric>
#include <vector>

#include "eismu/bivariate.hpp"
#include "eismu/cyclotomic.hpp"

namespace testutil {

using eismu::Int;
using eismu::Rational;

// deterministic 64-bit LCG so failures reproduce
struct Rng {
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    unsigned long long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rational(long num_bound = 9, long den_bound = 4) {
        Rational r(range(-num_bound, num_bound), range(1, den_bound));
        r.canonicalize();
        return r;
    }
};

inline std::vector<Int> eta_square_product(long precision, long M) {
    // prod over n >= 1 of (1 - q^n)^2 (1 - q^(Mn))^2, shifted by q
    std::vector<Int> f(precision, 0);
    if (precision == 0) return f;
    f[0] = 1;
    auto times = [&](long m) { // multiply by (1 - q^m) in place
        for (long i = precision - 1; i >= m; --i) f[i] -= f[i - m];
    };
    for (long n = 1; n < precision; ++n) { times(n); times(n); }
    for (long n = 1; M * n < precision; ++n) { times(M * n); times(M * n); }
    std::vector<Int> out(precision, 0);
    for (long i = 1; i < precision; ++i) out[i] = f[i - 1];
    return out;
}

// dimension of the weight-k cusp space for the Hecke congruence group
// with the unipotent condition, small pinned values
inline long cusp_dim(long N, int k) {
    if (N == 5 && k == 2) return 0;
    if (N == 11 && k == 2) return 1;
    if (N == 5 && k == 4) return 1;
    if (N == 3 && k == 2) return 0;
    return -1;
}

// copy of a bivariate series keeping only total degrees <= D, with room
// to integrate (cap D + 1)
inline eismu::BiSeries truncate_degree(const eismu::BiSeries& f, int D) {
    eismu::BiSeries out(f.base_weight(), D + 1, f.level(), f.precision());
    for (const auto& [k, v] : f.entries())
        if (k.degree() <= D) out.set_entry(k.i, k.j, v);
    return out;
}

// equality of nearly holomorphic forms up to level embedding and the
// common precision
inline bool nh_equal(eismu::NearlyHol a, eismu::NearlyHol b) {
    a.trim();
    b.trim();
    bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz) return az && bz;
    long L = std::lcm(a.level(), b.level());
    eismu::NearlyHol ra = a.raise_level(L);
    eismu::NearlyHol rb = b.raise_level(L);
    long p = std::min(ra.precision(), rb.precision());
    return ra.truncate(p) == rb.truncate(p);
}

// equality of bivariate series on total degrees <= D (trimmed entries)
inline bool bi_equal_up_to(const eismu::BiSeries& A, const eismu::BiSeries& B, int D) {
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            if (!nh_equal(A.entry(i, j), B.entry(i, j))) return false;
    return true;
}

} // namespace testutil
