#include "eismu/compact_open.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eismu {

Rational reduce_mod(const Rational& x, const Rational& alpha) {
    Rational q = x / alpha;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return x - alpha * Rational(fl);
}

namespace {

// smallest positive rational alpha with alpha/alpha_i integral for all i
Rational rational_lcm(const std::vector<Rational>& vals) {
    Int num = 1, den = 0;
    for (const auto& v : vals) {
        num = lcm(num, Int(v.get_num()));
        den = den == 0 ? Int(v.get_den()) : gcd(den, Int(v.get_den()));
    }
    Rational r(num, den == 0 ? Int(1) : den);
    r.canonicalize();
    return r;
}

long to_long(const Rational& r) {
    if (r.get_den() != 1) throw Error("expected an integer");
    if (!r.get_num().fits_slong_p()) throw IndexOverflow("integer out of range");
    return r.get_num().get_si();
}

/* Row Hermite form of an invertible integer 2x2 matrix B: returns
 * (h00, h10, h11) with Z^2 B = Z^2 [[h00, 0], [h10, h11]],
 * h00, h11 > 0. */
std::tuple<Int, Int, Int> row_hermite(Int a, Int b, Int c, Int d) {
    // rows (a, b), (c, d); clear the second column of the first row
    while (b != 0) {
        if (d == 0 || abs(d) < abs(b)) {
            std::swap(a, c);
            std::swap(b, d);
            continue;
        }
        Int q = d / b;
        c -= q * a;
        d -= q * b;
    }
    if (d < 0) {
        c = -c;
        d = -d;
    }
    if (a < 0) a = -a;
    if (a == 0 || d == 0) throw SingularMatrix("lattice matrix is singular");
    Int h10 = c % a;
    if (h10 < 0) h10 += a;
    return {a, h10, d};
}

} // namespace

CompactOpenQ2 canonicalize_q2(const std::vector<std::pair<Vec2q, Rational>>& raw) {
    std::vector<Rational> moduli;
    for (const auto& [v, a] : raw) {
        if (a <= 0) throw Error("modulus must be positive");
        moduli.push_back(a);
    }
    CompactOpenQ2 out;
    if (raw.empty()) return out;
    out.alpha = rational_lcm(moduli);
    for (const auto& [v, a] : raw) {
        long s = to_long(out.alpha / a);
        for (long m1 = 0; m1 < s; ++m1)
            for (long m2 = 0; m2 < s; ++m2)
                out.pieces.push_back({reduce_mod(v.x + a * m1, out.alpha),
                                      reduce_mod(v.y + a * m2, out.alpha)});
    }
    std::sort(out.pieces.begin(), out.pieces.end());
    out.pieces.erase(std::unique(out.pieces.begin(), out.pieces.end()), out.pieces.end());
    return out;
}

CompactOpenM2 canonicalize_m2(const std::vector<std::pair<Mat2q, Rational>>& raw) {
    std::vector<Rational> moduli;
    for (const auto& [g, a] : raw) {
        if (a <= 0) throw Error("modulus must be positive");
        moduli.push_back(a);
    }
    CompactOpenM2 out;
    if (raw.empty()) return out;
    out.alpha = rational_lcm(moduli);
    for (const auto& [g, a] : raw) {
        long s = to_long(out.alpha / a);
        if (s * s * s * s > 100000) throw IndexOverflow("canonicalization blowup");
        for (long m1 = 0; m1 < s; ++m1)
            for (long m2 = 0; m2 < s; ++m2)
                for (long m3 = 0; m3 < s; ++m3)
                    for (long m4 = 0; m4 < s; ++m4)
                        out.pieces.push_back(
                            Mat2q(reduce_mod(g.a + a * m1, out.alpha),
                                  reduce_mod(g.b + a * m2, out.alpha),
                                  reduce_mod(g.c + a * m3, out.alpha),
                                  reduce_mod(g.d + a * m4, out.alpha)));
    }
    std::sort(out.pieces.begin(), out.pieces.end());
    out.pieces.erase(std::unique(out.pieces.begin(), out.pieces.end()), out.pieces.end());
    return out;
}

CompactOpenM2 whole_lattice_m2() { return single_coset(Mat2q(0, 0, 0, 0)); }

CompactOpenM2 single_coset(const Mat2q& gamma) {
    return canonicalize_m2({{gamma, Rational(1)}});
}

std::pair<CompactOpenQ2, CompactOpenQ2> project_cols(const CompactOpenM2& U) {
    std::vector<std::pair<Vec2q, Rational>> c1, c2;
    for (const auto& g : U.pieces) {
        c1.push_back({g.col1(), U.alpha});
        c2.push_back({g.col2(), U.alpha});
    }
    return {canonicalize_q2(c1), canonicalize_q2(c2)};
}

CompactOpenM2 right_mul(const CompactOpenM2& U, const Mat2q& rho, long index_guard) {
    Mat2q rinv = rho.inverse();
    Int den = 1;
    for (const Rational& e : {rinv.a, rinv.b, rinv.c, rinv.d})
        den = lcm(den, Int(e.get_den()));
    Rational c = U.alpha * Rational(den);
    // B = den * rho^-1 is integral; residues of (alpha Z^2 rho) mod (c Z^2)
    // per row are r * rho/den over r in Z^2 / Z^2 B
    auto B = [&](const Rational& e) {
        Rational v = Rational(den) * e;
        return Int(v.get_num()); // den clears all denominators
    };
    auto [h00, h10, h11] = row_hermite(B(rinv.a), B(rinv.b), B(rinv.c), B(rinv.d));
    Int count = h00 * h11;
    if (count * count > index_guard)
        throw IndexOverflow("residue count exceeds guard");
    std::vector<Vec2q> residues;
    Mat2q rho_scaled(rho.a / Rational(den), rho.b / Rational(den),
                     rho.c / Rational(den), rho.d / Rational(den));
    for (Int x = 0; x < h00; ++x)
        for (Int y = 0; y < h11; ++y) {
            Vec2q r{Rational(x), Rational(y)};
            Vec2q s = r * rho_scaled;
            residues.push_back({reduce_mod(s.x, Rational(1)), reduce_mod(s.y, Rational(1))});
        }
    std::vector<std::pair<Mat2q, Rational>> raw;
    for (const auto& g : U.pieces) {
        Mat2q base = g * rho;
        for (const auto& s1 : residues)
            for (const auto& s2 : residues)
                raw.push_back({Mat2q(base.a + c * s1.x, base.b + c * s1.y,
                                     base.c + c * s2.x, base.d + c * s2.y),
                               c});
    }
    return canonicalize_m2(raw);
}

std::vector<CompactOpenM2> refine(const CompactOpenM2& U, long p) {
    std::vector<CompactOpenM2> out;
    Rational pa = U.alpha * Rational(p);
    for (const auto& g : U.pieces)
        for (long m1 = 0; m1 < p; ++m1)
            for (long m2 = 0; m2 < p; ++m2)
                for (long m3 = 0; m3 < p; ++m3)
                    for (long m4 = 0; m4 < p; ++m4)
                        out.push_back(canonicalize_m2(
                            {{Mat2q(g.a + U.alpha * m1, g.b + U.alpha * m2,
                                    g.c + U.alpha * m3, g.d + U.alpha * m4),
                              pa}}));
    return out;
}

long native_level(const CompactOpenQ2& V) {
    Int L = 1;
    for (const auto& v : V.pieces) {
        Rational tx = v.x / V.alpha, ty = v.y / V.alpha;
        L = lcm(L, lcm(Int(tx.get_den()), Int(ty.get_den())));
    }
    if (!L.fits_slong_p()) throw IndexOverflow("level out of range");
    return L.get_si();
}

UniSeriesProv e_compact_open(const CompactOpenQ2& V, long level, long precision, int cap) {
    long nat = native_level(V);
    if (level % nat != 0) throw LevelMismatch("requested level below native level");
    UniSeriesProv out{BiSeries(1, cap, level, precision), BiCombo(1)};
    for (const auto& v : V.pieces) {
        Rational tx = v.x / V.alpha, ty = v.y / V.alpha;
        long M = Int(lcm(Int(tx.get_den()), Int(ty.get_den()))).get_si();
        bool lattice = (M == 1);
        TorsionIndex idx;
        if (!lattice) {
            Rational sx = tx * M, sy = ty * M;
            idx = TorsionIndex(M, to_long(sx), to_long(sy));
        }
        long mprec = (precision * M + level - 1) / level;
        Rational ascale = 1 / V.alpha;
        Rational sc = ascale;
        for (int n = 0; n <= cap; ++n) {
            NearlyHol s = lattice ? level1_series(n + 1, mprec)
                                  : eis_series(n + 1, idx, mprec);
            s = s.raise_level(level).truncate(precision);
            s.scale(sc);
            if (!s.is_zero()) {
                NearlyHol cur = out.series.entry(n, 0);
                cur += s;
                out.series.set_entry(n, 0, std::move(cur));
            }
            Combo cc = out.combo.entry(n, 0);
            cc.add_term({sc, {EisSpec{n + 1, lattice, idx}}});
            out.combo.set_entry(n, 0, std::move(cc));
            sc *= ascale;
        }
    }
    return out;
}

CompactOpenM2 parse_compact_open(const std::string& text) {
    std::vector<std::pair<Mat2q, Rational>> raw;
    std::string piece;
    std::stringstream all(text);
    while (std::getline(all, piece, '+')) {
        auto modpos = piece.find("mod");
        if (modpos == std::string::npos) throw IOFailure("missing 'mod' in open syntax");
        std::string entries = piece.substr(0, modpos);
        std::string modstr = piece.substr(modpos + 3);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::vector<Rational> vals;
        std::stringstream es(entries);
        std::string tok;
        while (std::getline(es, tok, ',')) {
            Rational v(trim(tok));
            v.canonicalize();
            vals.push_back(v);
        }
        if (vals.size() != 4) throw IOFailure("open syntax wants four entries");
        Rational alpha(trim(modstr));
        alpha.canonicalize();
        raw.push_back({Mat2q(vals[0], vals[1], vals[2], vals[3]), alpha});
    }
    if (raw.empty()) throw IOFailure("empty compact-open expression");
    return canonicalize_m2(raw);
}

std::string format_compact_open(const CompactOpenM2& U) {
    std::ostringstream os;
    bool first = true;
    for (const auto& g : U.pieces) {
        if (!first) os << " + ";
        os << g.a.get_str() << "," << g.b.get_str() << "," << g.c.get_str() << ","
           << g.d.get_str() << " mod " << U.alpha.get_str();
        first = false;
    }
    return os.str();
}

} // namespace eismu
