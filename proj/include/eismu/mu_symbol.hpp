#pragma once

#include "eismu/compact_open.hpp"
#include "eismu/cusp_reduce.hpp"

namespace eismu {

struct MuValue {
    BiSeries value; // depth-0 entries (post projection)
    BiCombo combo;  // provenance; re-evaluates to the pre-projection product
};

/* mu(U): entrywise holomorphic projection of the product of the two
 * column-projection series, one in X and one in Y.  Precision is in
 * q-units of the least common level of the projections. */
MuValue mu_eval(const CompactOpenM2& U, long precision, int cap);

// det(rho) times mu(U rho) with (X Y) -> (X Y) rho
MuValue gl2_act(const Mat2q& rho, const CompactOpenM2& U, long precision, int cap);

struct ManinReport {
    bool pass = false;
    std::vector<std::pair<BiKey, std::string>> failures;
};

// mu(U) + S mu(U) = 0 exactly, S = (0 -1; 1 0)
ManinReport manin1_check(const CompactOpenM2& U, long precision, int cap);

struct Manin2Report {
    bool pass = false;
    // per degree d: per monomial, membership of the weight-(d+2) slice
    std::map<int, bool> degree_pass;
    std::map<int, std::map<BiKey, Membership>> certificates;
};

// mu(U) + R mu(U) + R^2 mu(U) lies in the Eisenstein span degreewise
Manin2Report manin2_check(const CompactOpenM2& U, long precision, int cap);

inline Mat2i matS() { return {0, -1, 1, 0}; }
inline Mat2i matR() { return {0, -1, 1, -1}; }
inline Mat2i matT() { return {1, 1, 0, 1}; }

/* Degree-0 divisor on the cusps; infinity is (1, 0), a rational p/q is
 * (p, q) reduced. */
struct Cusp {
    Int p = 1, q = 0;
    friend bool operator==(const Cusp&, const Cusp&) = default;
};
using DivisorPath = std::vector<std::pair<long, Cusp>>;

/* Value of the distribution-valued modular symbol on a degree-0 divisor:
 * each cusp contributes its continued-fraction chain of unimodular
 * matrices acting on mu. */
MuValue symbol_eval(const DivisorPath& D, const CompactOpenM2& U, long precision, int cap);

} // namespace eismu
