#include "eismu/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace eismu {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using ZPoly = std::vector<Int>;

// Exact quotient of integer polynomials, ascending coefficients.
ZPoly zpoly_divexact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() - den.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j)
                num[i + j] -= c * den[j];
    }
    return q;
}

ZPoly compute_cyclotomic(long n) {
    ZPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = zpoly_divexact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

std::map<long, ZPoly> phi_cache;
std::mutex phi_mutex;

using QPoly = std::vector<Rational>;

size_t qpoly_deg_bound(const QPoly& p) {
    size_t n = p.size();
    while (n > 0 && p[n - 1] == 0) --n;
    return n; // 0 means zero polynomial; otherwise degree + 1
}

// a = q*b + r with deg r < deg b; returns {q, r}
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
    size_t nb = qpoly_deg_bound(b);
    size_t na = qpoly_deg_bound(a);
    if (nb == 0) throw DivisionByZero("polynomial division by zero");
    if (na < nb) return {QPoly{}, std::move(a)};
    QPoly q(na - nb + 1, Rational(0));
    for (size_t i = na - nb + 1; i-- > 0;) {
        Rational c = a[i + nb - 1] / b[nb - 1];
        if (c != 0) {
            q[i] = c;
            for (size_t j = 0; j < nb; ++j) a[i + j] -= c * b[j];
        }
    }
    a.resize(nb - 1);
    return {std::move(q), std::move(a)};
}

} // namespace

std::vector<Int> cyclotomic_polynomial(long n) {
    {
        std::unique_lock<std::mutex> lock(phi_mutex);
        auto it = phi_cache.find(n);
        if (it != phi_cache.end()) return it->second;
    }
    ZPoly p = compute_cyclotomic(n);
    std::unique_lock<std::mutex> lock(phi_mutex);
    return phi_cache.emplace(n, std::move(p)).first->second;
}

Cyclo::Cyclo(const Rational& r, long level) : level_(level) {
    coeffs_.assign(euler_phi(level), Rational(0));
    coeffs_[0] = r;
}

Cyclo Cyclo::root(long N, long e) {
    Cyclo z = Cyclo::zero(N);
    e %= N;
    if (e < 0) e += N;
    long phi = euler_phi(N);
    if (e < phi) {
        z.coeffs_[e] = 1;
        return z;
    }
    // reduce zeta^e mod Phi_N by repeated multiplication-by-zeta
    z.coeffs_[phi - 1] = 1;
    ZPoly Phi = cyclotomic_polynomial(N);
    for (long step = phi - 1; step < e; ++step) {
        Rational top = z.coeffs_[phi - 1];
        for (long i = phi - 1; i > 0; --i) z.coeffs_[i] = z.coeffs_[i - 1];
        z.coeffs_[0] = 0;
        if (top != 0)
            for (long i = 0; i < phi; ++i)
                z.coeffs_[i] -= top * Rational(Phi[i]);
    }
    return z;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw NotDivisible("element is not rational");
    return coeffs_[0];
}

Cyclo Cyclo::embed(long N) const {
    if (N == level_) return *this;
    if (N % level_ != 0) throw LevelMismatch("embed: target level not a multiple");
    long s = N / level_;
    Cyclo out = Cyclo::zero(N);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            out += coeffs_[j] * Cyclo::root(N, s * static_cast<long>(j));
    return out;
}

Cyclo Cyclo::descend(long M) const {
    if (M == level_) return *this;
    if (level_ % M != 0) throw LevelMismatch("descend: target level does not divide");
    long phiM = euler_phi(M);
    long phiN = euler_phi(level_);
    // columns: images of zeta_M^j, solve by Gaussian elimination
    std::vector<std::vector<Rational>> A(phiN, std::vector<Rational>(phiM + 1));
    for (long j = 0; j < phiM; ++j) {
        Cyclo img = Cyclo::root(M, j).embed(level_);
        for (long i = 0; i < phiN; ++i) A[i][j] = img.coeffs()[i];
    }
    for (long i = 0; i < phiN; ++i) A[i][phiM] = coeffs_[i];
    std::vector<long> pivot_col(phiM, -1);
    long row = 0;
    for (long col = 0; col < phiM && row < phiN; ++col) {
        long pr = -1;
        for (long r = row; r < phiN; ++r)
            if (A[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(A[row], A[pr]);
        Rational inv = 1 / A[row][col];
        for (long c = col; c <= phiM; ++c) A[row][c] *= inv;
        for (long r = 0; r < phiN; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (long c = col; c <= phiM; ++c) A[r][c] -= f * A[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (long r = row; r < phiN; ++r)
        if (A[r][phiM] != 0) throw NotDivisible("element not in requested subfield");
    Cyclo res = Cyclo::zero(M);
    for (long r = 0; r < row; ++r) res.coeffs_[pivot_col[r]] = A[r][phiM];
    return res;
}

void Cyclo::check_levels(const Cyclo& a, const Cyclo& b) {
    if (a.level_ != b.level_) throw LevelMismatch("cyclotomic level mismatch");
}

Cyclo Cyclo::operator-() const {
    Cyclo out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    check_levels(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    check_levels(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    check_levels(*this, o);
    if (o.is_rational()) return *this *= o.coeffs_[0];
    if (is_rational()) {
        Rational r = coeffs_[0];
        coeffs_ = o.coeffs_;
        return *this *= r;
    }
    size_t phi = coeffs_.size();
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (size_t i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < phi; ++j)
            if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    ZPoly Phi = cyclotomic_polynomial(level_);
    for (size_t i = prod.size(); i-- > phi;) {
        if (prod[i] == 0) continue;
        Rational top = prod[i];
        prod[i] = 0;
        for (size_t j = 0; j < phi; ++j)
            if (Phi[j] != 0) prod[i - phi + j] -= top * Rational(Phi[j]);
    }
    prod.resize(phi);
    coeffs_ = std::move(prod);
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZero("cyclotomic inverse of zero");
    if (is_rational()) {
        Cyclo out = Cyclo::zero(level_);
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    // extended gcd of this (as polynomial) with Phi_N over Q[x]
    ZPoly PhiZ = cyclotomic_polynomial(level_);
    QPoly r0(PhiZ.begin(), PhiZ.end());
    QPoly r1 = coeffs_;
    QPoly s0(1, Rational(0)), s1(1, Rational(1)); // coefficients of *this
    while (true) {
        size_t n1 = qpoly_deg_bound(r1);
        if (n1 == 0) throw DivisionByZero("inverse: zero remainder chain");
        if (n1 == 1) break; // r1 is a nonzero constant
        auto [q, rem] = qpoly_divmod(r0, r1);
        // s_new = s0 - q*s1
        QPoly snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    Rational c = r1[0];
    Cyclo out = Cyclo::zero(level_);
    size_t phi = coeffs_.size();
    // reduce s1/c mod Phi
    QPoly s = s1;
    for (size_t i = qpoly_deg_bound(s); i-- > phi;) {
        if (s[i] == 0) continue;
        Rational top = s[i];
        s[i] = 0;
        for (size_t j = 0; j < phi; ++j)
            if (PhiZ[j] != 0) s[i - phi + j] -= top * Rational(PhiZ[j]);
    }
    for (size_t i = 0; i < phi && i < s.size(); ++i) out.coeffs_[i] = s[i] / c;
    return out;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    Cyclo::check_levels(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z" << level_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyclo lift_add(const Cyclo& a, const Cyclo& b) {
    long L = std::lcm(a.level(), b.level());
    return a.embed(L) + b.embed(L);
}

Cyclo lift_mul(const Cyclo& a, const Cyclo& b) {
    long L = std::lcm(a.level(), b.level());
    return a.embed(L) * b.embed(L);
}

} // namespace eismu
