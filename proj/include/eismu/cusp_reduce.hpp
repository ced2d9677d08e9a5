#pragma once

#include "eismu/linalg.hpp"
#include "eismu/provenance.hpp"

namespace eismu {

// index of the principal congruence subgroup of level N (1 for N = 1)
long group_index(long N);
// ceil(k * index / 12) + 1, in q_N units
long sturm_bound(long N, int k);

/* Basis description of the weight-k Eisenstein span at level N:
 * nonzero indices c mod N up to sign (weight 2 uses the holomorphic
 * wp differences); level 1 uses the lattice series for even k >= 4. */
struct EisensteinBasis {
    long N;
    int k;
    std::vector<TorsionIndex> reps; // empty at level 1
    bool lattice = false;           // level-1 single generator

    size_t size() const { return lattice ? 1 : reps.size(); }
};

EisensteinBasis eisenstein_basis(long N, int k);
// q-expansions of the basis elements at the given precision (q_N units)
std::vector<QExpansion> basis_expansions(const EisensteinBasis& basis, long precision);

struct Membership {
    bool in_span = false;
    std::vector<Cyclo> certificate; // basis coefficients when in_span
};

/* Exact span membership decided at the Sturm bound and certified by
 * re-evaluation at the full precision of f.  The factored system per
 * (N, k) is cached. */
Membership is_in_eisenstein_span(const QExpansion& f, long N, int k);

/* Representatives of the cosets of the level-N principal congruence
 * subgroup in SL2(Z/N), one per orbit of right multiplication by the
 * upper triangular unipotent (constant terms are constant on such
 * orbits); entries reduced mod N. */
std::vector<Mat2i> cusp_representatives(long N);

// constant term of the H-image of the combo slashed to each cusp
std::vector<Cyclo> cusp_constants(const Combo& combo, long N);

/* H(combo) minus an Eisenstein combination matched at every cusp
 * constant; the result has vanishing constant term at all cusps. */
QExpansion cusp_part(const Combo& combo, long N, int k, long precision);

} // namespace eismu
