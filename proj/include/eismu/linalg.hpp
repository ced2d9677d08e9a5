#pragma once

#include <optional>
#include <vector>

#include "eismu/cyclotomic.hpp"

namespace eismu {

/* Exact Gauss-Jordan solver over Q(zeta_N) for a fixed m x n matrix A,
 * factored once and reused across right-hand sides.  Internally stores
 * the row-reduced form of [A | I]; solving applies the recorded row
 * transform P to b and reads off pivot variables (free variables 0).
 * Rows beyond the rank act as consistency checks. */
class LinearSolver {
public:
    LinearSolver(std::vector<std::vector<Cyclo>> rows, long level);

    long rows() const { return m_; }
    long cols() const { return n_; }
    long rank() const { return static_cast<long>(pivot_cols_.size()); }

    // pivot solution of A x = b (free variables 0), nullopt when inconsistent
    std::optional<std::vector<Cyclo>> solve(const std::vector<Cyclo>& b) const;

private:
    long m_, n_;
    long level_;
    std::vector<std::vector<Cyclo>> R_; // reduced [A | P], m x (n + m)
    std::vector<long> pivot_cols_;
};

} // namespace eismu
