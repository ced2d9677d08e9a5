#pragma once

#include "eismu/mat2.hpp"
#include "eismu/qseries.hpp"

namespace eismu {

/* Index c = (c1, c2) in (Z/N)^2.  Represents the N-torsion point
 * (c1 tau + c2)/N; the zero index is rejected where a torsion point is
 * required. */
struct TorsionIndex {
    long N = 1;
    long c1 = 0, c2 = 0;

    TorsionIndex() = default;
    TorsionIndex(long N_, long c1_, long c2_) : N(N_), c1(mod(c1_)), c2(mod(c2_)) {}

    bool is_zero() const { return c1 == 0 && c2 == 0; }
    TorsionIndex negated() const { return TorsionIndex(N, -c1, -c2); }
    // lex-smallest of {c, -c}; second component true when negation was applied
    std::pair<TorsionIndex, bool> canonical() const;
    // the same point at level M, N | M
    TorsionIndex at_level(long M) const;

    friend bool operator==(const TorsionIndex&, const TorsionIndex&) = default;
    friend bool operator<(const TorsionIndex& u, const TorsionIndex& v) {
        if (u.N != v.N) return u.N < v.N;
        if (u.c1 != v.c1) return u.c1 < v.c1;
        return u.c2 < v.c2;
    }

private:
    long mod(long x) const {
        long r = x % N;
        return r < 0 ? r + N : r;
    }
};

std::vector<Rational> bernoulli_numbers(int upto);

// Coefficient of q_N^n, n >= 1, in the weight-k series attached to a
// torsion index.
Cyclo eis_coefficient(int k, const TorsionIndex& c, long n);
// Constant term (n = 0).
Cyclo eis_constant(int k, const TorsionIndex& c);

/* Weight-k series attached to a nonzero torsion index, in q_N with
 * coefficients in Q(zeta_N), normalized by (-2 pi i)^(-k).  Weight 2 has
 * depth 1 with rho-part the constant -1; all other weights are
 * holomorphic.  Memoized. */
NearlyHol eis_series(int k, const TorsionIndex& c, long precision);

/* Weight-k lattice series at level 1: zero for odd k; for even k >= 2
 * equal to (2/(k-1)!)(-B_k/(2k) + sum sigma_(k-1)(n) q^n), with the extra
 * rho-part -1 when k = 2. */
NearlyHol level1_series(int k, long precision);

// Constant term of level1_series.
Cyclo level1_constant(int k);

// Depth-0 difference of the weight-2 torsion and lattice series.
NearlyHol wp_series(const TorsionIndex& c, long precision);

/* Index transformation under the weight-k slash action by an integer
 * matrix: returns (sign, canonical index) with sign in {+1, -1}. */
std::pair<int, TorsionIndex> slash_index(int k, const TorsionIndex& c, const Mat2i& gamma);

} // namespace eismu
