#pragma once

#include <map>

#include "eismu/eisenstein.hpp"
#include "eismu/mat2.hpp"

namespace eismu {

struct BiKey {
    int i = 0, j = 0;
    auto operator<=>(const BiKey&) const = default;
    int degree() const { return i + j; }
};

/* Power series in two variables X, Y truncated at total degree cap, with
 * nearly holomorphic q-series coefficients.  The entry at X^i Y^j has
 * weight base_weight + i + j.  Absent entries are zero.  A series in X
 * alone is the special case with all keys (n, 0). */
class BiSeries {
public:
    BiSeries() = default;
    BiSeries(int base_weight, int cap, long level, long precision)
        : base_(base_weight), cap_(cap), level_(level), prec_(precision) {}

    int base_weight() const { return base_; }
    int cap() const { return cap_; }
    long level() const { return level_; }
    long precision() const { return prec_; }
    const std::map<BiKey, NearlyHol>& entries() const { return entries_; }

    // Zero when absent.
    NearlyHol entry(int i, int j) const;
    void set_entry(int i, int j, NearlyHol f);

    bool is_zero() const;
    BiSeries operator-() const;
    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    BiSeries operator*(const BiSeries& o) const;
    BiSeries& scale(const Rational& r);
    BiSeries& scale(const Cyclo& c);
    friend bool operator==(const BiSeries& a, const BiSeries& b);
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    // (X Y) -> (X Y) m, i.e. X -> m.a X + m.c Y, Y -> m.b X + m.d Y.
    BiSeries substitute(const Mat2q& m) const;

    // Entrywise holomorphic projection.
    BiSeries holomorphic_projection() const;
    // Entrywise weight raising.
    BiSeries raise_entries() const;

    // Formal primitive in X (degree up by one; constant 0).
    BiSeries integrate_x() const;
    // Formal d/dX.
    BiSeries derivative_x() const;
    // Exact division by X (or Y); NotDivisible on nonzero remainder.
    BiSeries divide_x() const;
    BiSeries divide_y() const;

    // Total-degree-d slice; entries depth 0 required.
    std::map<BiKey, QExpansion> homogeneous_slice(int d) const;

    BiSeries raise_to(long level, long precision) const;
    BiSeries truncate(long precision) const;

private:
    int base_ = 0;
    int cap_ = 0;
    long level_ = 1;
    long prec_ = 0;
    std::map<BiKey, NearlyHol> entries_;

    void align(const BiSeries& o, BiSeries& a, BiSeries& b) const;
};

// sum over n <= cap of the weight-(n+1) series at index c, times X^n
BiSeries torsion_expansion(const TorsionIndex& c, long precision, int cap);
// the lattice analogue at level 1 (odd-weight terms vanish)
BiSeries lattice_expansion(long precision, int cap);
/* Higher Taylor family: sum over n of binom(n+m-1, m-1) w_(n+m) X^n where
 * w is the torsion (or lattice) family; m = 1 recovers the expansions
 * above. */
BiSeries phi_expansion(int m, const TorsionIndex& c, long precision, int cap);
BiSeries phi_expansion_lattice(int m, long precision, int cap);
/* sum over n of (n+1) w_(n+2) X^n with the weight-2 term replaced by its
 * holomorphic part: the wp series for a torsion index, 0 for the lattice. */
BiSeries wp_expansion(const TorsionIndex& c, long precision, int cap);
BiSeries wp_expansion_lattice(long precision, int cap);

} // namespace eismu
