#include "eismu/bivariate.hpp"

#include <numeric>

namespace eismu {

namespace {

Rational rational_pow(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

std::vector<std::vector<Rational>> binomials(int n) {
    std::vector<std::vector<Rational>> C(n + 1);
    for (int i = 0; i <= n; ++i) {
        C[i].assign(i + 1, Rational(1));
        for (int j = 1; j < i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
    }
    return C;
}

} // namespace

NearlyHol BiSeries::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    if (it != entries_.end()) return it->second;
    return NearlyHol(base_ + i + j, level_, prec_, 0);
}

void BiSeries::set_entry(int i, int j, NearlyHol f) {
    if (i < 0 || j < 0 || i + j > cap_)
        throw DegreeOverflow("entry outside degree cap");
    if (f.is_zero()) {
        entries_.erase({i, j});
        return;
    }
    if (f.weight() != base_ + i + j)
        throw Error("entry weight violates grading");
    if (f.level() != level_) throw LevelMismatch("entry level != series level");
    entries_[{i, j}] = std::move(f).truncate(prec_);
}

bool BiSeries::is_zero() const {
    for (const auto& [k, f] : entries_)
        if (!f.is_zero()) return false;
    return true;
}

BiSeries BiSeries::operator-() const {
    BiSeries out(*this);
    for (auto& [k, f] : out.entries_) f = -f;
    return out;
}

BiSeries BiSeries::raise_to(long level, long precision) const {
    if (level % level_ != 0) throw LevelMismatch("raise_to: target not a multiple");
    BiSeries out(base_, cap_, level, precision);
    for (const auto& [k, f] : entries_) {
        NearlyHol g = f.raise_level(level).truncate(precision);
        if (!g.is_zero()) out.entries_[k] = std::move(g);
    }
    return out;
}

BiSeries BiSeries::truncate(long precision) const {
    if (precision >= prec_) return *this;
    BiSeries out(base_, cap_, level_, precision);
    for (const auto& [k, f] : entries_) {
        NearlyHol g = f.truncate(precision);
        if (!g.is_zero()) out.entries_[k] = std::move(g);
    }
    return out;
}

void BiSeries::align(const BiSeries& o, BiSeries& a, BiSeries& b) const {
    long L = std::lcm(level_, o.level_);
    long p = std::min(prec_ * (L / level_), o.prec_ * (L / o.level_));
    a = raise_to(L, p);
    b = o.raise_to(L, p);
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (base_ != o.base_ && !is_zero() && !o.is_zero())
        throw Error("adding series of different base weights");
    if (is_zero() && o.base_ != base_) base_ = o.base_;
    BiSeries a, b;
    align(o, a, b);
    a.cap_ = std::max(cap_, o.cap_);
    a.base_ = base_;
    for (const auto& [k, f] : b.entries_) {
        auto it = a.entries_.find(k);
        if (it == a.entries_.end()) {
            a.entries_[k] = f;
        } else {
            it->second += f;
            if (it->second.is_zero()) a.entries_.erase(it);
        }
    }
    *this = std::move(a);
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) { return *this += -o; }

BiSeries BiSeries::operator*(const BiSeries& o) const {
    BiSeries a, b;
    align(o, a, b);
    BiSeries out(base_ + o.base_, std::min(cap_, o.cap_), a.level_, a.prec_);
    for (const auto& [ka, fa] : a.entries_) {
        for (const auto& [kb, fb] : b.entries_) {
            BiKey k{ka.i + kb.i, ka.j + kb.j};
            if (k.degree() > out.cap_) continue;
            NearlyHol prod = fa * fb;
            auto it = out.entries_.find(k);
            if (it == out.entries_.end())
                out.entries_[k] = std::move(prod);
            else
                it->second += prod;
        }
    }
    for (auto it = out.entries_.begin(); it != out.entries_.end();)
        it = it->second.is_zero() ? out.entries_.erase(it) : std::next(it);
    return out;
}

BiSeries& BiSeries::scale(const Rational& r) {
    if (r == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, f] : entries_) f.scale(r);
    return *this;
}

BiSeries& BiSeries::scale(const Cyclo& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, f] : entries_) f.scale(c);
    return *this;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    BiSeries d(a);
    d -= b;
    return d.is_zero();
}

BiSeries BiSeries::substitute(const Mat2q& m) const {
    BiSeries out(base_, cap_, level_, prec_);
    auto C = binomials(cap_);
    for (const auto& [k, f] : entries_) {
        // (a X + c Y)^i (b X + d Y)^j
        for (int p = 0; p <= k.i; ++p) {
            Rational cp = C[k.i][p] * rational_pow(m.a, p) * rational_pow(m.c, k.i - p);
            if (cp == 0) continue;
            for (int q = 0; q <= k.j; ++q) {
                Rational cq = C[k.j][q] * rational_pow(m.b, q) * rational_pow(m.d, k.j - q);
                if (cq == 0) continue;
                BiKey t{p + q, k.degree() - p - q};
                NearlyHol g = f;
                g.scale(cp * cq);
                auto it = out.entries_.find(t);
                if (it == out.entries_.end())
                    out.entries_[t] = std::move(g);
                else
                    it->second += g;
            }
        }
    }
    for (auto it = out.entries_.begin(); it != out.entries_.end();)
        it = it->second.is_zero() ? out.entries_.erase(it) : std::next(it);
    return out;
}

BiSeries BiSeries::holomorphic_projection() const {
    BiSeries out(base_, cap_, level_, prec_);
    for (const auto& [k, f] : entries_) {
        QExpansion h = f.holomorphic_projection();
        if (!h.is_zero())
            out.entries_[k] = NearlyHol::holomorphic(f.weight(), std::move(h));
    }
    return out;
}

BiSeries BiSeries::raise_entries() const {
    BiSeries out(base_ + 2, cap_, level_, prec_);
    for (const auto& [k, f] : entries_) {
        NearlyHol g = f.raise();
        if (!g.is_zero()) out.entries_[k] = std::move(g);
    }
    return out;
}

BiSeries BiSeries::integrate_x() const {
    BiSeries out(base_ - 1, cap_, level_, prec_);
    for (const auto& [k, f] : entries_) {
        if (k.i + 1 + k.j > cap_)
            throw DegreeOverflow("primitive exceeds degree cap");
        NearlyHol g = f;
        g.scale(Rational(1, static_cast<unsigned long>(k.i) + 1));
        out.entries_[{k.i + 1, k.j}] = std::move(g);
    }
    return out;
}

BiSeries BiSeries::derivative_x() const {
    BiSeries out(base_ + 1, cap_, level_, prec_);
    for (const auto& [k, f] : entries_) {
        if (k.i == 0) continue;
        NearlyHol g = f;
        g.scale(Rational(k.i));
        out.entries_[{k.i - 1, k.j}] = std::move(g);
    }
    return out;
}

BiSeries BiSeries::divide_x() const {
    BiSeries out(base_ + 1, cap_, level_, prec_);
    for (const auto& [k, f] : entries_) {
        if (k.i == 0) throw NotDivisible("series not divisible by X");
        out.entries_[{k.i - 1, k.j}] = f;
    }
    return out;
}

BiSeries BiSeries::divide_y() const {
    BiSeries out(base_ + 1, cap_, level_, prec_);
    for (const auto& [k, f] : entries_) {
        if (k.j == 0) throw NotDivisible("series not divisible by Y");
        out.entries_[{k.i, k.j - 1}] = f;
    }
    return out;
}

std::map<BiKey, QExpansion> BiSeries::homogeneous_slice(int d) const {
    std::map<BiKey, QExpansion> out;
    for (const auto& [k, f] : entries_)
        if (k.degree() == d) out[k] = f.holomorphic_part();
    return out;
}

BiSeries torsion_expansion(const TorsionIndex& c, long precision, int cap) {
    BiSeries out(1, cap, c.N, precision);
    for (int n = 0; n <= cap; ++n)
        out.set_entry(n, 0, eis_series(n + 1, c, precision));
    return out;
}

BiSeries lattice_expansion(long precision, int cap) {
    BiSeries out(1, cap, 1, precision);
    for (int n = 0; n <= cap; ++n)
        out.set_entry(n, 0, level1_series(n + 1, precision));
    return out;
}

BiSeries phi_expansion(int m, const TorsionIndex& c, long precision, int cap) {
    BiSeries out(m, cap, c.N, precision);
    auto C = binomials(cap + m);
    for (int n = 0; n <= cap; ++n) {
        NearlyHol f = eis_series(n + m, c, precision);
        f.scale(C[n + m - 1][m - 1]);
        out.set_entry(n, 0, std::move(f));
    }
    return out;
}

BiSeries phi_expansion_lattice(int m, long precision, int cap) {
    BiSeries out(m, cap, 1, precision);
    auto C = binomials(cap + m);
    for (int n = 0; n <= cap; ++n) {
        NearlyHol f = level1_series(n + m, precision);
        f.scale(C[n + m - 1][m - 1]);
        out.set_entry(n, 0, std::move(f));
    }
    return out;
}

BiSeries wp_expansion(const TorsionIndex& c, long precision, int cap) {
    BiSeries out(2, cap, c.N, precision);
    out.set_entry(0, 0, wp_series(c, precision));
    for (int n = 1; n <= cap; ++n) {
        NearlyHol f = eis_series(n + 2, c, precision);
        f.scale(Rational(n + 1));
        out.set_entry(n, 0, std::move(f));
    }
    return out;
}

BiSeries wp_expansion_lattice(long precision, int cap) {
    BiSeries out(2, cap, 1, precision);
    for (int n = 1; n <= cap; ++n) {
        NearlyHol f = level1_series(n + 2, precision);
        f.scale(Rational(n + 1));
        out.set_entry(n, 0, std::move(f));
    }
    return out;
}

} // namespace eismu
