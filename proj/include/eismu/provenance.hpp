#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "eismu/bivariate.hpp"

namespace eismu {

/* Formal record of how a series entry was assembled from Eisenstein
 * factors; slashing an index set is exact where slashing a truncated
 * q-expansion is not. */
struct EisSpec {
    int k = 0;
    bool lattice = false;
    TorsionIndex c; // ignored when lattice

    friend bool operator==(const EisSpec&, const EisSpec&) = default;
    friend bool operator<(const EisSpec& u, const EisSpec& v) {
        if (u.k != v.k) return u.k < v.k;
        if (u.lattice != v.lattice) return u.lattice < v.lattice;
        return u.c < v.c;
    }
    long level() const { return lattice ? 1 : c.N; }
};

struct ComboTerm {
    Rational coeff;
    std::vector<EisSpec> factors; // sorted; weight = sum of factor weights
    int weight() const {
        int w = 0;
        for (const auto& f : factors) w += f.k;
        return w;
    }
};

struct Combo {
    std::vector<ComboTerm> terms;

    bool empty_or_zero() const { return terms.empty(); }

    void add_term(ComboTerm t) {
        if (t.coeff == 0) return;
        std::sort(t.factors.begin(), t.factors.end());
        for (auto& u : terms) {
            if (u.factors == t.factors) {
                u.coeff += t.coeff;
                if (u.coeff == 0) {
                    u = std::move(terms.back());
                    terms.pop_back();
                }
                return;
            }
        }
        terms.push_back(std::move(t));
    }

    Combo& operator+=(const Combo& o) {
        for (const auto& t : o.terms) add_term(t);
        return *this;
    }

    Combo& scale(const Rational& r) {
        if (r == 0) {
            terms.clear();
            return *this;
        }
        for (auto& t : terms) t.coeff *= r;
        return *this;
    }

    friend Combo operator*(const Combo& a, const Combo& b) {
        Combo out;
        for (const auto& s : a.terms)
            for (const auto& t : b.terms) {
                ComboTerm u;
                u.coeff = s.coeff * t.coeff;
                u.factors = s.factors;
                u.factors.insert(u.factors.end(), t.factors.begin(), t.factors.end());
                out.add_term(std::move(u));
            }
        return out;
    }

    long native_level() const {
        long L = 1;
        for (const auto& t : terms)
            for (const auto& f : t.factors) L = std::lcm(L, f.level());
        return L;
    }
};

NearlyHol evaluate_combo(const Combo& c, long level, long precision);

/* Constant term at the cusp attached to gamma (taken mod N): the product
 * of slashed factor constants.  The rho-parts of weight-2 factors vanish
 * in the cusp limit and do not contribute. */
Cyclo combo_cusp_constant(const Combo& c, long N, const Mat2i& gamma);

/* Combo-valued polynomial in X, Y mirroring BiSeries. */
class BiCombo {
public:
    BiCombo() = default;
    explicit BiCombo(int base_weight) : base_(base_weight) {}

    int base_weight() const { return base_; }
    const std::map<BiKey, Combo>& entries() const { return entries_; }
    Combo entry(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Combo{} : it->second;
    }
    void set_entry(int i, int j, Combo c) {
        if (c.empty_or_zero())
            entries_.erase({i, j});
        else
            entries_[{i, j}] = std::move(c);
    }

    BiCombo& operator+=(const BiCombo& o) {
        for (const auto& [k, c] : o.entries_) {
            auto& slot = entries_[k];
            slot += c;
            if (slot.empty_or_zero()) entries_.erase(k);
        }
        return *this;
    }

    friend BiCombo operator*(const BiCombo& a, const BiCombo& b) {
        BiCombo out(a.base_ + b.base_);
        for (const auto& [ka, ca] : a.entries_)
            for (const auto& [kb, cb] : b.entries_) {
                auto& slot = out.entries_[{ka.i + kb.i, ka.j + kb.j}];
                slot += ca * cb;
                if (slot.empty_or_zero()) out.entries_.erase({ka.i + kb.i, ka.j + kb.j});
            }
        return out;
    }

    BiCombo& scale(const Rational& r) {
        if (r == 0) {
            entries_.clear();
            return *this;
        }
        for (auto& [k, c] : entries_) c.scale(r);
        return *this;
    }

    BiCombo substitute(const Mat2q& m) const;

private:
    int base_ = 0;
    std::map<BiKey, Combo> entries_;
};

} // namespace eismu
