#pragma once

#include <gmpxx.h>

#include "eismu/errors.hpp"

namespace eismu {

using Rational = mpq_class;

struct Mat2i {
    long a = 1, b = 0, c = 0, d = 1;
    long det() const { return a * d - b * c; }
    friend Mat2i operator*(const Mat2i& x, const Mat2i& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2i&, const Mat2i&) = default;
};

struct Vec2q {
    Rational x, y;
    friend bool operator==(const Vec2q&, const Vec2q&) = default;
    friend bool operator<(const Vec2q& u, const Vec2q& v) {
        if (u.x != v.x) return u.x < v.x;
        return u.y < v.y;
    }
};

struct Mat2q {
    Rational a, b, c, d;
    Mat2q() : a(1), b(0), c(0), d(1) {}
    Mat2q(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    Mat2q(const Mat2i& m) : a(m.a), b(m.b), c(m.c), d(m.d) {}

    Rational det() const { return a * d - b * c; }
    Mat2q inverse() const {
        Rational D = det();
        if (D == 0) throw SingularMatrix("2x2 inverse of singular matrix");
        return Mat2q(d / D, -b / D, -c / D, a / D);
    }
    friend Mat2q operator*(const Mat2q& x, const Mat2q& y) {
        return Mat2q(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                     x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
    }
    friend bool operator==(const Mat2q&, const Mat2q&) = default;
    friend bool operator<(const Mat2q& u, const Mat2q& v) {
        if (u.a != v.a) return u.a < v.a;
        if (u.b != v.b) return u.b < v.b;
        if (u.c != v.c) return u.c < v.c;
        return u.d < v.d;
    }
    // rows as vectors
    Vec2q row1() const { return {a, b}; }
    Vec2q row2() const { return {c, d}; }
    Vec2q col1() const { return {a, c}; }
    Vec2q col2() const { return {b, d}; }
};

inline Vec2q operator*(const Vec2q& v, const Mat2q& m) {
    return {v.x * m.a + v.y * m.c, v.x * m.b + v.y * m.d};
}

} // namespace eismu
