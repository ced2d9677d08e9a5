#pragma once

#include <gmpxx.h>

#include <vector>

#include "eismu/errors.hpp"

namespace eismu {

using Int = mpz_class;
using Rational = mpq_class;

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, ascending, monic,
// length euler_phi(n) + 1.
std::vector<Int> cyclotomic_polynomial(long n);

/* Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
 * reduced mod the N-th cyclotomic polynomial.  The representation is
 * canonical: equal field elements of equal level have equal coefficient
 * vectors. */
class Cyclo {
public:
    Cyclo() : level_(1), coeffs_(1) {}
    explicit Cyclo(const Rational& r, long level = 1);
    Cyclo(long n) : Cyclo(Rational(n)) {}

    // zeta_N^e
    static Cyclo root(long N, long e);
    static Cyclo zero(long level) { return Cyclo(Rational(0), level); }
    static Cyclo one(long level) { return Cyclo(Rational(1), level); }

    long level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // Image under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^(N/M).
    // Requires M | N.
    Cyclo embed(long N) const;
    // Recognize the element in a subfield Q(zeta_M), M | level; throws
    // NotDivisible if the element does not lie there.
    Cyclo descend(long M) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo inverse() const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) {
        return a * b.inverse();
    }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo& operator*=(const Rational& r);
    friend Cyclo operator*(Cyclo a, const Rational& r) { return a *= r; }
    friend Cyclo operator*(const Rational& r, Cyclo a) { return a *= r; }

    std::string str() const;

private:
    long level_;
    std::vector<Rational> coeffs_; // size euler_phi(level_)

    static void check_levels(const Cyclo& a, const Cyclo& b);
};

// Embed both operands into Q(zeta_lcm) and apply the strict operation.
Cyclo lift_add(const Cyclo& a, const Cyclo& b);
Cyclo lift_mul(const Cyclo& a, const Cyclo& b);

} // namespace eismu
