#include "eismu/eisenstein.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace eismu {

std::pair<TorsionIndex, bool> TorsionIndex::canonical() const {
    TorsionIndex neg = negated();
    if (neg < *this) return {neg, true};
    return {*this, false};
}

TorsionIndex TorsionIndex::at_level(long M) const {
    if (M % N != 0) throw LevelMismatch("torsion index: target level not a multiple");
    long s = M / N;
    return TorsionIndex(M, c1 * s, c2 * s);
}

std::vector<Rational> bernoulli_numbers(int upto) {
    std::vector<Rational> B(upto + 1);
    B[0] = 1;
    for (int m = 1; m <= upto; ++m) {
        // binomials C(m+1, j)
        Rational acc(0);
        Rational c(1); // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc += c * B[j];
            c *= Rational(m + 1 - j);
            c /= Rational(j + 1);
        }
        B[m] = -acc / Rational(m + 1);
    }
    return B;
}

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

/* Constant term for c1 = 0, c2 != 0, k >= 1: evaluate A_k(w)/(1-w)^k at
 * w = zeta^c2, where A_1 = (1+w)/2 and
 * A_(k+1) = w((1-w)A_k' + k A_k). */
Cyclo lerch_value(int k, long N, long c2) {
    std::vector<Rational> A{Rational(1, 2), Rational(1, 2)};
    for (int j = 1; j < k; ++j) {
        size_t n = A.size();
        std::vector<Rational> next(n + 1, Rational(0));
        // (1-w)A' + j*A, then shift by one power of w
        for (size_t i = 1; i < n; ++i) {
            next[i] += Rational(static_cast<long>(i)) * A[i];      // A'
            next[i + 1] -= Rational(static_cast<long>(i)) * A[i];  // -w A'
        }
        for (size_t i = 0; i < n; ++i) next[i + 1] += Rational(j) * A[i];
        // the shift: next currently holds coefficients of w^0.. of
        // (1-w)A' + jA with the w-multiplication folded in above
        A = std::move(next);
    }
    Cyclo w = Cyclo::root(N, c2);
    Cyclo Aval = Cyclo::zero(N);
    Cyclo wpow = Cyclo::one(N);
    for (size_t i = 0; i < A.size(); ++i) {
        if (A[i] != 0) Aval += A[i] * wpow;
        wpow *= w;
    }
    Cyclo denom = Cyclo::one(N) - w;
    Cyclo dpow = Cyclo::one(N);
    for (int i = 0; i < k; ++i) dpow *= denom;
    return Aval * dpow.inverse();
}

struct CacheKey {
    int k;
    long N, c1, c2;
    auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, NearlyHol> series_cache;
std::mutex series_mutex;

} // namespace

Cyclo eis_coefficient(int k, const TorsionIndex& c, long n) {
    if (n <= 0) throw Error("eis_coefficient wants n >= 1");
    long N = c.N;
    Cyclo acc = Cyclo::zero(N);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long e = n / d;
        Int dk = 1;
        for (int i = 1; i < k; ++i) dk *= d;
        Rational dkq(dk);
        if ((e - c.c1) % N == 0) acc += dkq * Cyclo::root(N, c.c2 * d);
        if ((e + c.c1) % N == 0) {
            Cyclo t = dkq * Cyclo::root(N, -c.c2 * d);
            if (k % 2 == 1) acc -= t; else acc += t;
        }
    }
    Rational inv = 1 / factorial(k - 1);
    return acc * inv;
}

Cyclo eis_constant(int k, const TorsionIndex& c) {
    long N = c.N;
    if (c.is_zero()) throw ZeroIndex("constant term needs a nonzero torsion index");
    if (k == 1) {
        if (c.c1 != 0) return Cyclo(Rational(1, 2) - Rational(c.c1, N), N);
        return lerch_value(1, N, c.c2);
    }
    if (c.c1 != 0) return Cyclo::zero(N);
    return (1 / factorial(k - 1)) * lerch_value(k, N, c.c2);
}

NearlyHol eis_series(int k, const TorsionIndex& c, long precision) {
    if (c.is_zero()) throw ZeroIndex("torsion series needs a nonzero index");
    if (k < 1) throw Error("torsion series needs weight >= 1");
    {
        std::unique_lock<std::mutex> lock(series_mutex);
        auto it = series_cache.find({k, c.N, c.c1, c.c2});
        if (it != series_cache.end() && it->second.precision() >= precision)
            return it->second.truncate(precision);
    }
    long N = c.N;
    QExpansion f(N, precision);
    f.set_coeff(0, eis_constant(k, c));
    for (long n = 1; n < precision; ++n) f.set_coeff(n, eis_coefficient(k, c, n));
    NearlyHol result = NearlyHol::holomorphic(k, std::move(f));
    if (k == 2) {
        NearlyHol full(2, N, precision, 1);
        full.part(0) = result.part(0);
        full.part(1).set_coeff(0, Cyclo(Rational(-1), N));
        result = std::move(full);
    }
    std::unique_lock<std::mutex> lock(series_mutex);
    auto& slot = series_cache[{k, c.N, c.c1, c.c2}];
    if (slot.precision() < precision) slot = result;
    return result;
}

Cyclo level1_constant(int k) {
    if (k < 2 || k % 2 == 1) return Cyclo();
    std::vector<Rational> B = bernoulli_numbers(k);
    return Cyclo((2 / factorial(k - 1)) * (-B[k] / Rational(2 * k)));
}

NearlyHol level1_series(int k, long precision) {
    if (k % 2 == 1 || k == 0) return NearlyHol(k, 1, precision, 0);
    QExpansion f(1, precision);
    f.set_coeff(0, level1_constant(k));
    Rational scalefac = 2 / factorial(k - 1);
    for (long n = 1; n < precision; ++n) {
        Int s = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            Int dk = 1;
            for (int i = 1; i < k; ++i) dk *= d;
            s += dk;
        }
        f.set_coeff(n, Cyclo(scalefac * Rational(s)));
    }
    NearlyHol result = NearlyHol::holomorphic(k, std::move(f));
    if (k == 2) {
        NearlyHol full(2, 1, precision, 1);
        full.part(0) = result.part(0);
        full.part(1).set_coeff(0, Cyclo(Rational(-1)));
        result = std::move(full);
    }
    return result;
}

NearlyHol wp_series(const TorsionIndex& c, long precision) {
    long N = c.N;
    NearlyHol e2c = eis_series(2, c, precision);
    NearlyHol lat = level1_series(2, (precision + N - 1) / N + 1).raise_level(N).truncate(precision);
    NearlyHol diff = e2c - lat;
    diff.trim();
    if (diff.depth() != 0) throw DepthNonzero("weight-2 difference should be holomorphic");
    return diff;
}

std::pair<int, TorsionIndex> slash_index(int k, const TorsionIndex& c, const Mat2i& gamma) {
    long N = c.N;
    TorsionIndex moved(N, gamma.a * c.c1 + gamma.c * c.c2, gamma.b * c.c1 + gamma.d * c.c2);
    auto [canon, negated] = moved.canonical();
    int sign = (negated && k % 2 == 1) ? -1 : 1;
    return {sign, canon};
}

} // namespace eismu
