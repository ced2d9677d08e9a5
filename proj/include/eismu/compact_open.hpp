#pragma once

#include <vector>

#include "eismu/provenance.hpp"

namespace eismu {

/* Finite disjoint union of cosets beta + alpha Z^2 in Q^2, kept in
 * canonical form: one common positive modulus alpha, representatives
 * reduced mod alpha Z^2, sorted, deduplicated. */
struct CompactOpenQ2 {
    Rational alpha{1};
    std::vector<Vec2q> pieces;

    friend bool operator==(const CompactOpenQ2&, const CompactOpenQ2&) = default;
};

/* Same for cosets gamma + alpha M2(Z) in M2(Q). */
struct CompactOpenM2 {
    Rational alpha{1};
    std::vector<Mat2q> pieces;

    friend bool operator==(const CompactOpenM2&, const CompactOpenM2&) = default;
};

// x - alpha*floor(x/alpha), in [0, alpha)
Rational reduce_mod(const Rational& x, const Rational& alpha);

CompactOpenQ2 canonicalize_q2(const std::vector<std::pair<Vec2q, Rational>>& raw);
CompactOpenM2 canonicalize_m2(const std::vector<std::pair<Mat2q, Rational>>& raw);

CompactOpenM2 whole_lattice_m2();
// gamma + M2(Z)
CompactOpenM2 single_coset(const Mat2q& gamma);

std::pair<CompactOpenQ2, CompactOpenQ2> project_cols(const CompactOpenM2& U);

/* Exact set image U rho for invertible rational rho; IndexOverflow when
 * the residue count per piece exceeds the guard. */
CompactOpenM2 right_mul(const CompactOpenM2& U, const Mat2q& rho,
                        long index_guard = 10000);

// p^4 disjoint sub-cosets per piece, union = U
std::vector<CompactOpenM2> refine(const CompactOpenM2& U, long p);

// lcm of torsion levels appearing in beta/alpha over the pieces
long native_level(const CompactOpenQ2& V);

struct UniSeriesProv {
    BiSeries series; // keys (n, 0), base weight 1
    BiCombo combo;
};

/* Sum over pieces of the scaled torsion (or lattice) expansions:
 * the X^n coefficient of a piece beta + alpha Z^2 is
 * alpha^-(n+1) times the weight-(n+1) series at index beta/alpha.
 * Output series at the given level (a multiple of the native level),
 * precision in its q-units. */
UniSeriesProv e_compact_open(const CompactOpenQ2& V, long level, long precision, int cap);

// parse "a,b,c,d mod p/q [+ ...]" into a canonical open
CompactOpenM2 parse_compact_open(const std::string& text);
std::string format_compact_open(const CompactOpenM2& U);

} // namespace eismu
