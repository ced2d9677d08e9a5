#pragma once

#include <vector>

#include "eismu/cyclotomic.hpp"

namespace eismu {

/* Truncated q-expansion in q_N = q^(1/N): coefficient of q_N^m for
 * 0 <= m < precision, with coefficients in Q(zeta_level). */
class QExpansion {
public:
    QExpansion() : level_(1), precision_(0) {}
    QExpansion(long level, long precision)
        : level_(level), precision_(precision),
          coeffs_(precision, Cyclo::zero(level)) {}

    long level() const { return level_; }
    long precision() const { return precision_; }

    const Cyclo& coeff(long m) const;
    void set_coeff(long m, const Cyclo& c);

    bool is_zero() const;

    QExpansion operator-() const;
    QExpansion& operator+=(const QExpansion& o);
    QExpansion& operator-=(const QExpansion& o);
    friend QExpansion operator+(QExpansion a, const QExpansion& b) { return a += b; }
    friend QExpansion operator-(QExpansion a, const QExpansion& b) { return a -= b; }
    QExpansion operator*(const QExpansion& o) const;
    QExpansion& scale(const Cyclo& c);
    QExpansion& scale(const Rational& r);

    friend bool operator==(const QExpansion& a, const QExpansion& b);
    friend bool operator!=(const QExpansion& a, const QExpansion& b) { return !(a == b); }

    // q d/dq: multiplies coefficient m by m/level
    QExpansion derivative() const;

    // Rewrite in q_N units, N a multiple of level: m -> m * (N/level).
    QExpansion raise_level(long N) const;
    QExpansion truncate(long precision) const;

private:
    long level_;
    long precision_;
    std::vector<Cyclo> coeffs_;

    static void check_compatible(const QExpansion& a, const QExpansion& b);
};

/* Weight-k nearly holomorphic form as a polynomial in
 * rho = 1/(2 pi i (tau - taubar)): parts[j] is the q-expansion
 * multiplying rho^j.  Depth = parts.size() - 1 >= 0. */
class NearlyHol {
public:
    NearlyHol() : weight_(0), parts_(1) {}
    NearlyHol(int weight, long level, long precision, int depth = 0)
        : weight_(weight), parts_(depth + 1, QExpansion(level, precision)) {}
    NearlyHol(int weight, std::vector<QExpansion> parts);
    static NearlyHol holomorphic(int weight, QExpansion f);

    int weight() const { return weight_; }
    int depth() const { return static_cast<int>(parts_.size()) - 1; }
    long level() const { return parts_[0].level(); }
    long precision() const { return parts_[0].precision(); }
    const QExpansion& part(int j) const { return parts_[j]; }
    QExpansion& part(int j) { return parts_[j]; }

    bool is_zero() const;
    // Drop identically-zero top parts (never below depth 0).
    NearlyHol& trim();

    NearlyHol operator-() const;
    NearlyHol& operator+=(const NearlyHol& o);
    NearlyHol& operator-=(const NearlyHol& o);
    friend NearlyHol operator+(NearlyHol a, const NearlyHol& b) { return a += b; }
    friend NearlyHol operator-(NearlyHol a, const NearlyHol& b) { return a -= b; }
    NearlyHol operator*(const NearlyHol& o) const;
    NearlyHol& scale(const Cyclo& c);
    NearlyHol& scale(const Rational& r);
    friend bool operator==(const NearlyHol& a, const NearlyHol& b);
    friend bool operator!=(const NearlyHol& a, const NearlyHol& b) { return !(a == b); }

    // Maass raising, normalized: weight += 2, depth += 1.
    NearlyHol raise() const;
    // Lowering: weight -= 2, depth -= 1 (zero at depth 0).
    NearlyHol lower() const;

    // Holomorphic projection; weight must exceed depth + 2 unless depth 0.
    QExpansion holomorphic_projection() const;
    // The depth-0 part, requiring depth == 0 after trim.
    QExpansion holomorphic_part() const;

    NearlyHol raise_level(long N) const;
    NearlyHol truncate(long precision) const;

private:
    int weight_;
    std::vector<QExpansion> parts_;
};

} // namespace eismu
