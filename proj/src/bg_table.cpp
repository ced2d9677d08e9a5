#include "eismu/bg_table.hpp"

#include <numeric>

namespace eismu {

namespace {

// extended gcd on longs: returns (g, u, v) with u*x + v*y = g
std::tuple<long, long, long> ext_gcd(long x, long y) {
    if (y == 0) return {x < 0 ? -x : x, x < 0 ? -1 : 1, 0};
    auto [g, u, v] = ext_gcd(y, x % y);
    return {g, v, u - (x / y) * v};
}

Mat2i unimodular_lift(long N, long c, long d) {
    for (long sc = 0; sc <= 2; ++sc) {
        long cc = c + sc * N;
        for (long t = 0; t <= 2 * N; ++t) {
            long dd = d + t * N;
            auto [g, u, v] = ext_gcd(dd, cc);
            if (g != 1) continue;
            // u*dd + v*cc = 1, so det (u, -v; cc, dd) = u*dd + v*cc = 1
            return Mat2i{u, -v, cc, dd};
        }
    }
    throw Error("no unimodular lift found");
}

Mat2i inverse_unimodular(const Mat2i& g) {
    long det = g.det();
    if (det == 1) return Mat2i{g.d, -g.b, -g.c, g.a};
    if (det == -1) return Mat2i{-g.d, g.b, g.c, -g.a};
    throw SingularMatrix("matrix is not unimodular");
}

BiCombo mu_combo(const CompactOpenM2& U, int cap) {
    auto [V1, V2] = project_cols(U);
    long L = std::lcm(native_level(V1), native_level(V2));
    UniSeriesProv e1 = e_compact_open(V1, L, 1, cap);
    UniSeriesProv e2 = e_compact_open(V2, L, 1, cap);
    Mat2q swap_xy(Rational(0), Rational(1), Rational(1), Rational(0));
    return e1.combo * e2.combo.substitute(swap_xy);
}

} // namespace

std::vector<std::pair<PrimitivePair, Mat2i>> coset_reps(long N) {
    std::vector<std::pair<PrimitivePair, Mat2i>> out;
    for (long c = 0; c < N; ++c)
        for (long d = 0; d < N; ++d) {
            if (std::gcd(std::gcd(c, d), N) != 1) continue;
            out.push_back({PrimitivePair{N, c, d}, unimodular_lift(N, c, d)});
        }
    return out;
}

CompactOpenM2 standard_open(long N) {
    return single_coset(Mat2q(Rational(0), Rational(0), Rational(0), Rational(1, N)));
}

CuspPoly bg_entry(long N, int k, const Mat2i& gamma, long precision) {
    CompactOpenM2 moved = right_mul(standard_open(N), Mat2q(gamma));
    BiCombo combo = mu_combo(moved, k - 2).substitute(Mat2q(gamma));
    CuspPoly out;
    for (int i = 0; i <= k - 2; ++i) {
        BiKey key{i, k - 2 - i};
        Combo c = combo.entry(key.i, key.j);
        if (c.empty_or_zero())
            out[key] = QExpansion(N, precision);
        else
            out[key] = cusp_part(c, N, k, precision);
    }
    return out;
}

CuspPoly substitute_poly(const CuspPoly& P, const Mat2i& m, int degree) {
    CuspPoly out;
    if (P.empty()) return out;
    long N = P.begin()->second.level();
    long prec = P.begin()->second.precision();
    for (int i = 0; i <= degree; ++i) out[{i, degree - i}] = QExpansion(N, prec);
    std::vector<std::vector<Rational>> C(degree + 1);
    for (int i = 0; i <= degree; ++i) {
        C[i].assign(i + 1, Rational(1));
        for (int j = 1; j < i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
    }
    auto ipow = [](long x, int e) {
        Rational r(1);
        for (int i = 0; i < e; ++i) r *= Rational(x);
        return r;
    };
    for (const auto& [key, f] : P) {
        if (f.is_zero()) continue;
        for (int p = 0; p <= key.i; ++p) {
            Rational cp = C[key.i][p] * ipow(m.a, p) * ipow(m.c, key.i - p);
            if (cp == 0) continue;
            for (int q = 0; q <= key.j; ++q) {
                Rational cq = C[key.j][q] * ipow(m.b, q) * ipow(m.d, key.j - q);
                if (cq == 0) continue;
                QExpansion t = f;
                t.scale(cp * cq);
                out[{p + q, key.degree() - p - q}] += t;
            }
        }
    }
    return out;
}

namespace {

bool poly_is_zero(const CuspPoly& P) {
    for (const auto& [k, f] : P)
        if (!f.is_zero()) return false;
    return true;
}

CuspPoly poly_sum(std::initializer_list<const CuspPoly*> parts) {
    CuspPoly out;
    for (const CuspPoly* p : parts)
        for (const auto& [k, f] : *p) {
            auto it = out.find(k);
            if (it == out.end())
                out[k] = f;
            else
                it->second += f;
        }
    return out;
}

} // namespace

BGSymbolTable bg_build(long N, int k, long precision) {
    if (precision == 0) precision = sturm_bound(N, k) + 8;
    BGSymbolTable table{N, k, precision, sturm_bound(N, k), coset_reps(N), {}};
    std::map<PrimitivePair, Mat2i> lifts;
    for (const auto& [p, g] : table.reps) lifts[p] = g;
    for (const auto& [p, g] : table.reps) table.entries[p] = bg_entry(N, k, g, precision);

    auto norm = [N](long x) { return ((x % N) + N) % N; };
    Mat2i S = matS(), R = matR(), R2 = R * R;
    for (const auto& [p, g] : table.reps) {
        // two-term: entry(p) + entry(pS), aligning the pS lift with g*S
        PrimitivePair pS{N, norm(p.d), norm(-p.c)};
        Mat2i deltaS = g * S * inverse_unimodular(lifts.at(pS));
        CuspPoly corrS = substitute_poly(table.entries.at(pS), deltaS, k - 2);
        if (!poly_is_zero(poly_sum({&table.entries.at(p), &corrS})))
            throw RelationViolation("two-term relation fails");
        // three-term with R
        PrimitivePair pR{N, norm(p.d), norm(-p.c - p.d)};
        PrimitivePair pR2{N, norm(-p.c - p.d), norm(p.c)};
        Mat2i deltaR = g * R * inverse_unimodular(lifts.at(pR));
        Mat2i deltaR2 = g * R2 * inverse_unimodular(lifts.at(pR2));
        CuspPoly corrR = substitute_poly(table.entries.at(pR), deltaR, k - 2);
        CuspPoly corrR2 = substitute_poly(table.entries.at(pR2), deltaR2, k - 2);
        if (!poly_is_zero(poly_sum({&table.entries.at(p), &corrR, &corrR2})))
            throw RelationViolation("three-term relation fails");
    }
    return table;
}

} // namespace eismu
