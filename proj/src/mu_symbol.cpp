#include "eismu/mu_symbol.hpp"

#include <numeric>
#include <sstream>

namespace eismu {

MuValue mu_eval(const CompactOpenM2& U, long precision, int cap) {
    auto [V1, V2] = project_cols(U);
    long L = std::lcm(native_level(V1), native_level(V2));
    UniSeriesProv e1 = e_compact_open(V1, L, precision, cap);
    UniSeriesProv e2 = e_compact_open(V2, L, precision, cap);
    Mat2q swap_xy(Rational(0), Rational(1), Rational(1), Rational(0));
    BiSeries prod = e1.series * e2.series.substitute(swap_xy);
    BiCombo combo = e1.combo * e2.combo.substitute(swap_xy);
    return {prod.holomorphic_projection(), std::move(combo)};
}

MuValue gl2_act(const Mat2q& rho, const CompactOpenM2& U, long precision, int cap) {
    CompactOpenM2 moved = right_mul(U, rho);
    MuValue m = mu_eval(moved, precision, cap);
    Rational det = rho.det();
    BiSeries value = m.value.substitute(rho);
    value.scale(det);
    BiCombo combo = m.combo.substitute(rho);
    combo.scale(det);
    return {std::move(value), std::move(combo)};
}

ManinReport manin1_check(const CompactOpenM2& U, long precision, int cap) {
    MuValue a = mu_eval(U, precision, cap);
    MuValue b = gl2_act(Mat2q(matS()), U, precision, cap);
    BiSeries sum = a.value + b.value;
    ManinReport rep;
    rep.pass = sum.is_zero();
    if (!rep.pass)
        for (const auto& [k, f] : sum.entries())
            if (!f.is_zero()) rep.failures.push_back({k, "nonzero entry"});
    return rep;
}

Manin2Report manin2_check(const CompactOpenM2& U, long precision, int cap) {
    Mat2i R = matR();
    Mat2i R2 = R * R;
    MuValue a = mu_eval(U, precision, cap);
    MuValue b = gl2_act(Mat2q(R), U, precision, cap);
    MuValue c = gl2_act(Mat2q(R2), U, precision, cap);
    BiSeries sum = a.value + b.value + c.value;
    long N = sum.level();
    Manin2Report rep;
    rep.pass = true;
    for (int d = 0; d <= sum.cap(); ++d) {
        int k = d + 2;
        long sturm = sturm_bound(N, k);
        bool dpass = true;
        auto slice = sum.homogeneous_slice(d);
        for (int i = 0; i <= d; ++i) {
            BiKey key{i, d - i};
            auto it = slice.find(key);
            QExpansion f = it == slice.end() ? QExpansion(N, sum.precision()) : it->second;
            if (f.precision() < sturm)
                throw InsufficientPrecision("degree slice below Sturm bound");
            Membership m = is_in_eisenstein_span(f, N, k);
            if (!m.in_span) dpass = false;
            rep.certificates[d][key] = std::move(m);
        }
        rep.degree_pass[d] = dpass;
        if (!dpass) rep.pass = false;
    }
    return rep;
}

namespace {

// unimodular chain for the path from infinity to p/q, as the convergent
// matrices of the continued fraction, each fixed to determinant +1
std::vector<Mat2q> convergent_chain(const Cusp& target) {
    Int p = target.p, q = target.q;
    if (q == 0) return {};
    std::vector<Mat2q> chain;
    // convergents p_k/q_k; start p_-1/q_-1 = 1/0
    Int pm1 = 1, qm1 = 0, pm2 = 0, qm2 = 1;
    Int a = p, b = q;
    int parity = 0;
    while (b != 0) {
        Int quo;
        mpz_fdiv_q(quo.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int rem = a - quo * b;
        Int pk = quo * pm1 + pm2;
        Int qk = quo * qm1 + qm2;
        // segment from p_(k-1)/q_(k-1) to p_k/q_k
        Int det = pk * qm1 - pm1 * qk;
        Mat2q g{Rational(pk), Rational(pm1), Rational(qk), Rational(qm1)};
        if (det < 0) {
            g.b = -g.b;
            g.d = -g.d;
        }
        chain.push_back(g);
        pm2 = pm1; qm2 = qm1; pm1 = pk; qm1 = qk;
        a = b;
        b = rem;
        ++parity;
    }
    return chain;
}

void accumulate(MuValue& acc, const MuValue& v, long n) {
    BiSeries s = v.value;
    s.scale(Rational(n));
    BiCombo c = v.combo;
    c.scale(Rational(n));
    if (acc.value.precision() == 0) {
        acc.value = std::move(s);
        acc.combo = std::move(c);
    } else {
        acc.value += s;
        acc.combo += c;
    }
}

} // namespace

MuValue symbol_eval(const DivisorPath& D, const CompactOpenM2& U, long precision, int cap) {
    long total = 0;
    for (const auto& [n, c] : D) total += n;
    if (total != 0) throw Error("divisor must have degree zero");
    MuValue acc;
    for (const auto& [n, cusp] : D) {
        if (n == 0) continue;
        for (const Mat2q& g : convergent_chain(cusp)) {
            MuValue v = gl2_act(g, U, precision, cap);
            accumulate(acc, v, n);
        }
    }
    if (acc.value.precision() == 0) {
        MuValue base = mu_eval(U, precision, cap);
        acc.value = BiSeries(2, cap, base.value.level(), precision);
    }
    return acc;
}

} // namespace eismu
