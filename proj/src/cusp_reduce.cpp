#include "eismu/cusp_reduce.hpp"

#include <map>
#include <mutex>

namespace eismu {

long group_index(long N) {
    if (N == 1) return 1;
    long idx = N * N * N;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        idx = idx / (p * p) * (p * p - 1);
    }
    if (n > 1) idx = idx / (n * n) * (n * n - 1);
    return idx;
}

long sturm_bound(long N, int k) {
    long I = group_index(N);
    return (static_cast<long>(k) * I + 11) / 12 + 1;
}

EisensteinBasis eisenstein_basis(long N, int k) {
    EisensteinBasis basis{N, k, {}, false};
    if (N == 1) {
        basis.lattice = (k >= 4 && k % 2 == 0);
        return basis;
    }
    for (long c1 = 0; c1 < N; ++c1)
        for (long c2 = 0; c2 < N; ++c2) {
            TorsionIndex c(N, c1, c2);
            if (c.is_zero()) continue;
            if (c.canonical().first == c) basis.reps.push_back(c);
        }
    return basis;
}

std::vector<QExpansion> basis_expansions(const EisensteinBasis& basis, long precision) {
    std::vector<QExpansion> out;
    if (basis.lattice) {
        out.push_back(level1_series(basis.k, precision).holomorphic_part());
        return out;
    }
    for (const auto& c : basis.reps) {
        if (basis.k == 2)
            out.push_back(wp_series(c, precision).holomorphic_part());
        else
            out.push_back(eis_series(basis.k, c, precision).trim().part(0));
    }
    return out;
}

namespace {

Cyclo basis_constant(const EisensteinBasis& basis, size_t j, const Mat2i& gamma) {
    if (basis.lattice) return level1_constant(basis.k);
    const TorsionIndex& c = basis.reps[j];
    auto [sign, idx] = slash_index(basis.k, c, gamma);
    Cyclo v = eis_constant(basis.k, idx);
    if (sign < 0) v = -v;
    if (basis.k == 2) v += Cyclo(Rational(1, 12), basis.N);
    return v;
}

struct SpanSystem {
    EisensteinBasis basis;
    long sturm;
    LinearSolver membership;  // rows: coefficients 0..sturm-1
    LinearSolver constants;   // rows: cusp representatives
    std::vector<Mat2i> cusps;
};

std::map<std::pair<long, int>, SpanSystem> span_cache;
std::mutex span_mutex;

const SpanSystem& span_system(long N, int k) {
    std::unique_lock<std::mutex> lock(span_mutex);
    auto it = span_cache.find({N, k});
    if (it != span_cache.end()) return it->second;
    lock.unlock();

    EisensteinBasis basis = eisenstein_basis(N, k);
    long sturm = sturm_bound(N, k);
    std::vector<QExpansion> exps = basis_expansions(basis, sturm);
    std::vector<std::vector<Cyclo>> mrows(sturm, std::vector<Cyclo>(exps.size(), Cyclo::zero(N)));
    for (size_t j = 0; j < exps.size(); ++j)
        for (long m = 0; m < sturm; ++m) mrows[m][j] = exps[j].coeff(m);
    LinearSolver membership(std::move(mrows), N);

    std::vector<Mat2i> cusps = cusp_representatives(N);
    std::vector<std::vector<Cyclo>> crows(cusps.size(),
                                          std::vector<Cyclo>(basis.size(), Cyclo::zero(N)));
    for (size_t r = 0; r < cusps.size(); ++r)
        for (size_t j = 0; j < basis.size(); ++j)
            crows[r][j] = basis_constant(basis, j, cusps[r]);
    LinearSolver constants(std::move(crows), N);

    lock.lock();
    auto [pos, inserted] = span_cache.try_emplace(
        std::make_pair(N, k),
        SpanSystem{std::move(basis), sturm, std::move(membership), std::move(constants),
                   std::move(cusps)});
    return pos->second;
}

} // namespace

Membership is_in_eisenstein_span(const QExpansion& f, long N, int k) {
    const SpanSystem& sys = span_system(N, k);
    if (f.level() != N) throw LevelMismatch("membership: level mismatch");
    if (f.precision() < sys.sturm)
        throw InsufficientPrecision("membership needs Sturm-bound precision");
    std::vector<Cyclo> b(sys.sturm, Cyclo::zero(N));
    for (long m = 0; m < sys.sturm; ++m) b[m] = f.coeff(m);
    auto x = sys.membership.solve(b);
    if (!x) return {false, {}};
    // certify at full precision
    std::vector<QExpansion> exps = basis_expansions(sys.basis, f.precision());
    QExpansion recon(N, f.precision());
    for (size_t j = 0; j < exps.size(); ++j) {
        if ((*x)[j].is_zero()) continue;
        QExpansion t = exps[j];
        t.scale((*x)[j]);
        recon += t;
    }
    if (recon != f) return {false, {}};
    return {true, *x};
}

std::vector<Mat2i> cusp_representatives(long N) {
    std::vector<Mat2i> out;
    if (N == 1) {
        out.push_back(Mat2i{1, 0, 0, 1});
        return out;
    }
    auto key = [N](const Mat2i& g) {
        return ((g.a * N + g.b) * N + g.c) * N + g.d;
    };
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d) {
                    if (((a * d - b * c) % N + N) % N != 1) continue;
                    Mat2i g{a, b, c, d};
                    // canonical member of the right T-orbit
                    bool minimal = true;
                    for (long t = 1; t < N && minimal; ++t) {
                        long b2 = (b + t * a) % N, d2 = (d + t * c) % N;
                        if (key(Mat2i{a, b2, c, d2}) < key(g)) minimal = false;
                    }
                    if (minimal) out.push_back(g);
                }
    return out;
}

std::vector<Cyclo> cusp_constants(const Combo& combo, long N) {
    const std::vector<Mat2i> reps = cusp_representatives(N);
    std::vector<Cyclo> out;
    out.reserve(reps.size());
    for (const auto& g : reps) out.push_back(combo_cusp_constant(combo, N, g));
    return out;
}

QExpansion cusp_part(const Combo& combo, long N, int k, long precision) {
    const SpanSystem& sys = span_system(N, k);
    QExpansion h = evaluate_combo(combo, N, precision).holomorphic_projection();
    std::vector<Cyclo> b(sys.cusps.size(), Cyclo::zero(N));
    for (size_t r = 0; r < sys.cusps.size(); ++r)
        b[r] = combo_cusp_constant(combo, N, sys.cusps[r]);
    auto x = sys.constants.solve(b);
    if (!x) throw InconsistentSystem("no Eisenstein combination matches the cusp constants");
    std::vector<QExpansion> exps = basis_expansions(sys.basis, precision);
    for (size_t j = 0; j < exps.size(); ++j) {
        if ((*x)[j].is_zero()) continue;
        QExpansion t = exps[j];
        t.scale((*x)[j]);
        h -= t;
    }
    return h;
}

} // namespace eismu
