#include "eismu/provenance.hpp"

#include <algorithm>

namespace eismu {

NearlyHol evaluate_combo(const Combo& c, long level, long precision) {
    NearlyHol acc(0, level, precision, 0);
    bool first = true;
    for (const auto& t : c.terms) {
        NearlyHol prod(0, level, precision, 0);
        bool pfirst = true;
        for (const auto& f : t.factors) {
            long fl = f.level();
            if (level % fl != 0) throw LevelMismatch("combo factor level incompatible");
            long fprec = (precision * fl + level - 1) / level;
            NearlyHol s = f.lattice ? level1_series(f.k, fprec)
                                    : eis_series(f.k, f.c, fprec);
            s = s.raise_level(level).truncate(precision);
            prod = pfirst ? std::move(s) : prod * s;
            pfirst = false;
        }
        if (pfirst) prod = NearlyHol::holomorphic(0, QExpansion(level, precision));
        prod.scale(t.coeff);
        if (first) {
            acc = std::move(prod);
            first = false;
        } else {
            acc += prod;
        }
    }
    return acc.trim();
}

Cyclo combo_cusp_constant(const Combo& c, long N, const Mat2i& gamma) {
    Cyclo acc = Cyclo::zero(N);
    for (const auto& t : c.terms) {
        Cyclo prod = Cyclo::one(N);
        for (const auto& f : t.factors) {
            if (f.lattice) {
                prod *= level1_constant(f.k).embed(N);
            } else {
                TorsionIndex cN = f.c.at_level(std::lcm(f.c.N, N));
                if (cN.N != N) {
                    // work at the common level throughout
                    return combo_cusp_constant(c, std::lcm(f.c.N, N), gamma).descend(N);
                }
                auto [sign, idx] = slash_index(f.k, cN, gamma);
                Cyclo v = eis_constant(f.k, idx);
                if (sign < 0) v = -v;
                prod *= v;
            }
        }
        acc += Rational(t.coeff) * prod;
    }
    return acc;
}

BiCombo BiCombo::substitute(const Mat2q& m) const {
    BiCombo out(base_);
    int cap = 0;
    for (const auto& [k, c] : entries_) cap = std::max(cap, k.degree());
    std::vector<std::vector<Rational>> C(cap + 1);
    for (int i = 0; i <= cap; ++i) {
        C[i].assign(i + 1, Rational(1));
        for (int j = 1; j < i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
    }
    auto rpow = [](const Rational& x, int e) {
        Rational r(1);
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    };
    for (const auto& [k, c] : entries_) {
        for (int p = 0; p <= k.i; ++p) {
            Rational cp = C[k.i][p] * rpow(m.a, p) * rpow(m.c, k.i - p);
            if (cp == 0) continue;
            for (int q = 0; q <= k.j; ++q) {
                Rational cq = C[k.j][q] * rpow(m.b, q) * rpow(m.d, k.j - q);
                if (cq == 0) continue;
                Combo scaled = c;
                scaled.scale(cp * cq);
                auto& slot = out.entries_[{p + q, k.degree() - p - q}];
                slot += scaled;
                if (slot.empty_or_zero()) out.entries_.erase({p + q, k.degree() - p - q});
            }
        }
    }
    return out;
}

} // namespace eismu
