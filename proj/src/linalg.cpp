#include "eismu/linalg.hpp"

namespace eismu {

LinearSolver::LinearSolver(std::vector<std::vector<Cyclo>> rows, long level)
    : m_(static_cast<long>(rows.size())), level_(level), R_(std::move(rows)) {
    n_ = m_ > 0 ? static_cast<long>(R_[0].size()) : 0;
    for (auto& row : R_) {
        if (static_cast<long>(row.size()) != n_) throw Error("ragged matrix");
        for (long i = 0; i < m_; ++i) row.push_back(Cyclo::zero(level_));
    }
    for (long i = 0; i < m_; ++i) R_[i][n_ + i] = Cyclo::one(level_);
    long row = 0;
    for (long col = 0; col < n_ && row < m_; ++col) {
        long pr = -1;
        for (long r = row; r < m_; ++r)
            if (!R_[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(R_[row], R_[pr]);
        Cyclo inv = R_[row][col].inverse();
        for (long c = col; c < n_ + m_; ++c) R_[row][c] *= inv;
        for (long r = 0; r < m_; ++r) {
            if (r == row || R_[r][col].is_zero()) continue;
            Cyclo f = R_[r][col];
            for (long c = col; c < n_ + m_; ++c) R_[r][c] -= f * R_[row][c];
        }
        pivot_cols_.push_back(col);
        ++row;
    }
}

std::optional<std::vector<Cyclo>> LinearSolver::solve(const std::vector<Cyclo>& b) const {
    if (static_cast<long>(b.size()) != m_) throw Error("rhs size mismatch");
    std::vector<Cyclo> x(n_, Cyclo::zero(level_));
    long rank = static_cast<long>(pivot_cols_.size());
    for (long r = 0; r < m_; ++r) {
        Cyclo y = Cyclo::zero(level_);
        for (long i = 0; i < m_; ++i)
            if (!R_[r][n_ + i].is_zero() && !b[i].is_zero()) y += R_[r][n_ + i] * b[i];
        if (r < rank) {
            x[pivot_cols_[r]] = y;
        } else if (!y.is_zero()) {
            return std::nullopt;
        }
    }
    return x;
}

} // namespace eismu
