#pragma once

#include "eismu/mu_symbol.hpp"

namespace eismu {

struct PrimitivePair {
    long N;
    long c, d; // gcd(c, d, N) = 1, reduced mod N
    friend bool operator==(const PrimitivePair&, const PrimitivePair&) = default;
    friend bool operator<(const PrimitivePair& u, const PrimitivePair& v) {
        if (u.c != v.c) return u.c < v.c;
        return u.d < v.d;
    }
};

// one unimodular integer lift per primitive pair, bottom row = (c, d) mod N
std::vector<std::pair<PrimitivePair, Mat2i>> coset_reps(long N);

// entries on the total-degree-(k-2) slice
using CuspPoly = std::map<BiKey, QExpansion>;

struct BGSymbolTable {
    long N;
    int k;
    long precision;
    long sturm;
    std::vector<std::pair<PrimitivePair, Mat2i>> reps;
    std::map<PrimitivePair, CuspPoly> entries;
};

/* The degree-(k-2) slice of the mu-symbol on the standard level-N coset,
 * right-acted by the lift gamma, reduced entrywise to cusp parts. */
CuspPoly bg_entry(long N, int k, const Mat2i& gamma, long precision);

// substitute (X Y) -> (X Y) m on a polynomial slice
CuspPoly substitute_poly(const CuspPoly& P, const Mat2i& m, int degree);

/* Full table; verifies the two-term and three-term relations on cusp
 * parts before returning (RelationViolation otherwise). */
BGSymbolTable bg_build(long N, int k, long precision = 0);

// the compact open whose mu-values specialize to the table entries
CompactOpenM2 standard_open(long N);

} // namespace eismu
