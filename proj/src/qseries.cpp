#include "eismu/qseries.hpp"

#include <algorithm>

namespace eismu {

const Cyclo& QExpansion::coeff(long m) const {
    if (m < 0 || m >= precision_)
        throw InsufficientPrecision("coefficient index outside precision window");
    return coeffs_[m];
}

void QExpansion::set_coeff(long m, const Cyclo& c) {
    if (m < 0 || m >= precision_)
        throw InsufficientPrecision("coefficient index outside precision window");
    if (c.level() != level_) throw LevelMismatch("coefficient level != series level");
    coeffs_[m] = c;
}

bool QExpansion::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Cyclo& c) { return c.is_zero(); });
}

void QExpansion::check_compatible(const QExpansion& a, const QExpansion& b) {
    if (a.level_ != b.level_) throw LevelMismatch("q-expansion level mismatch");
}

QExpansion QExpansion::operator-() const {
    QExpansion out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QExpansion& QExpansion::operator+=(const QExpansion& o) {
    check_compatible(*this, o);
    long p = std::min(precision_, o.precision_);
    coeffs_.resize(p);
    precision_ = p;
    for (long m = 0; m < p; ++m) coeffs_[m] += o.coeffs_[m];
    return *this;
}

QExpansion& QExpansion::operator-=(const QExpansion& o) {
    check_compatible(*this, o);
    long p = std::min(precision_, o.precision_);
    coeffs_.resize(p);
    precision_ = p;
    for (long m = 0; m < p; ++m) coeffs_[m] -= o.coeffs_[m];
    return *this;
}

QExpansion QExpansion::operator*(const QExpansion& o) const {
    check_compatible(*this, o);
    long p = std::min(precision_, o.precision_);
    QExpansion out(level_, p);
    for (long i = 0; i < p; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (long j = 0; i + j < p; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

QExpansion& QExpansion::scale(const Cyclo& c) {
    Cyclo cc = c.level() == level_ ? c : c.embed(level_);
    for (auto& x : coeffs_) x *= cc;
    return *this;
}

QExpansion& QExpansion::scale(const Rational& r) {
    for (auto& x : coeffs_) x *= r;
    return *this;
}

bool operator==(const QExpansion& a, const QExpansion& b) {
    QExpansion::check_compatible(a, b);
    long p = std::min(a.precision_, b.precision_);
    for (long m = 0; m < p; ++m)
        if (a.coeffs_[m] != b.coeffs_[m]) return false;
    return true;
}

QExpansion QExpansion::derivative() const {
    QExpansion out(*this);
    for (long m = 0; m < precision_; ++m) {
        Rational r(m, level_);
        r.canonicalize();
        out.coeffs_[m] *= r;
    }
    return out;
}

QExpansion QExpansion::raise_level(long N) const {
    if (N == level_) return *this;
    if (N % level_ != 0) throw LevelMismatch("raise_level: target not a multiple");
    long s = N / level_;
    QExpansion out(N, precision_ * s);
    for (long m = 0; m < precision_; ++m)
        if (!coeffs_[m].is_zero()) out.coeffs_[m * s] = coeffs_[m].embed(N);
    return out;
}

QExpansion QExpansion::truncate(long precision) const {
    QExpansion out(*this);
    if (precision < precision_) {
        out.coeffs_.resize(precision);
        out.precision_ = precision;
    }
    return out;
}

NearlyHol::NearlyHol(int weight, std::vector<QExpansion> parts)
    : weight_(weight), parts_(std::move(parts)) {
    if (parts_.empty()) throw Error("nearly holomorphic form needs a depth-0 part");
    for (size_t j = 1; j < parts_.size(); ++j)
        if (parts_[j].level() != parts_[0].level())
            throw LevelMismatch("depth parts at different levels");
}

NearlyHol NearlyHol::holomorphic(int weight, QExpansion f) {
    return NearlyHol(weight, std::vector<QExpansion>{std::move(f)});
}

bool NearlyHol::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const QExpansion& f) { return f.is_zero(); });
}

NearlyHol& NearlyHol::trim() {
    while (parts_.size() > 1 && parts_.back().is_zero()) parts_.pop_back();
    return *this;
}

NearlyHol NearlyHol::operator-() const {
    NearlyHol out(*this);
    for (auto& f : out.parts_) f = -f;
    return out;
}

NearlyHol& NearlyHol::operator+=(const NearlyHol& o) {
    if (weight_ != o.weight_ && !is_zero() && !o.is_zero())
        throw Error("adding nearly holomorphic forms of different weights");
    if (is_zero() && o.weight_ != weight_) weight_ = o.weight_;
    long p = std::min(precision(), o.precision());
    size_t d = std::max(parts_.size(), o.parts_.size());
    parts_.resize(d, QExpansion(level(), p));
    for (size_t j = 0; j < d; ++j) {
        parts_[j] = parts_[j].truncate(p);
        if (j < o.parts_.size()) parts_[j] += o.parts_[j].truncate(p);
    }
    return *this;
}

NearlyHol& NearlyHol::operator-=(const NearlyHol& o) {
    return *this += -o;
}

NearlyHol NearlyHol::operator*(const NearlyHol& o) const {
    long p = std::min(precision(), o.precision());
    int d = depth() + o.depth();
    NearlyHol out(weight_ + o.weight_, level(), p, d);
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].is_zero()) continue;
        for (size_t j = 0; j < o.parts_.size(); ++j) {
            if (o.parts_[j].is_zero()) continue;
            out.parts_[i + j] += parts_[i].truncate(p) * o.parts_[j].truncate(p);
        }
    }
    return out.trim();
}

NearlyHol& NearlyHol::scale(const Cyclo& c) {
    for (auto& f : parts_) f.scale(c);
    return *this;
}

NearlyHol& NearlyHol::scale(const Rational& r) {
    for (auto& f : parts_) f.scale(r);
    return *this;
}

bool operator==(const NearlyHol& a, const NearlyHol& b) {
    NearlyHol ta(a), tb(b);
    ta.trim();
    tb.trim();
    if (!ta.is_zero() && !tb.is_zero() && ta.weight_ != tb.weight_) return false;
    if (ta.parts_.size() != tb.parts_.size()) return false;
    for (size_t j = 0; j < ta.parts_.size(); ++j)
        if (ta.parts_[j] != tb.parts_[j]) return false;
    return true;
}

NearlyHol NearlyHol::raise() const {
    int k = weight_;
    NearlyHol out(k + 2, level(), precision(), depth() + 1);
    for (size_t j = 0; j < out.parts_.size(); ++j) {
        QExpansion acc(level(), precision());
        if (j < parts_.size()) acc += parts_[j].derivative();
        if (j >= 1 && j - 1 < parts_.size()) {
            QExpansion t = parts_[j - 1];
            t.scale(Rational(k - static_cast<long>(j) + 1));
            acc += t;
        }
        out.parts_[j] = acc;
    }
    return out.trim();
}

NearlyHol NearlyHol::lower() const {
    if (depth() == 0) return NearlyHol(weight_ - 2, level(), precision(), 0);
    NearlyHol out(weight_ - 2, level(), precision(), depth() - 1);
    for (size_t j = 0; j + 1 < parts_.size(); ++j) {
        QExpansion t = parts_[j + 1];
        t.scale(Rational(static_cast<long>(j) + 1));
        out.parts_[j] = t;
    }
    return out.trim();
}

QExpansion NearlyHol::holomorphic_projection() const {
    NearlyHol t(*this);
    t.trim();
    int r = t.depth();
    if (r == 0) return t.parts_[0];
    int k = weight_;
    if (k - 2 < r)
        throw UnsupportedWeightDepth("holomorphic projection needs weight > depth + 2");
    long N = level();
    long p = precision();
    QExpansion out = t.parts_[0];
    for (long m = 1; m < p; ++m) {
        Cyclo acc = out.coeff(m);
        Rational step(-m, N);
        step.canonicalize();
        Rational factor(1);
        Rational beta(1);
        for (int j = 1; j <= r; ++j) {
            beta *= step;
            factor /= Rational(k - 1 - j);
            acc += (beta * factor) * t.parts_[j].coeff(m);
        }
        out.set_coeff(m, acc);
    }
    return out;
}

QExpansion NearlyHol::holomorphic_part() const {
    NearlyHol t(*this);
    t.trim();
    if (t.depth() != 0) throw DepthNonzero("nonzero depth where holomorphic expected");
    return t.parts_[0];
}

NearlyHol NearlyHol::raise_level(long N) const {
    NearlyHol out(*this);
    for (auto& f : out.parts_) f = f.raise_level(N);
    return out;
}

NearlyHol NearlyHol::truncate(long p) const {
    NearlyHol out(*this);
    for (auto& f : out.parts_) f = f.truncate(p);
    return out;
}

} // namespace eismu
