#include "eismu/identities.hpp"

#include <sstream>

#include "eismu/eisenstein.hpp"
#include "eismu/errors.hpp"
#include "eismu/linalg.hpp"

namespace eismu {

namespace {

// mpq arithmetic requires canonical operands
Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

SigmaTable::SigmaTable(long bound) : bound_(bound) {}

void SigmaTable::ensure(int r) {
    auto it = values_.find(r);
    if (it != values_.end()) return;
    std::vector<Int> v(bound_ + 1, 0);
    for (long d = 1; d <= bound_; ++d) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(r));
        for (long n = d; n <= bound_; n += d) v[n] += p;
    }
    values_.emplace(r, std::move(v));
}

const Int& SigmaTable::sigma(int r, long n) const {
    const_cast<SigmaTable*>(this)->ensure(r);
    return values_.at(r).at(n);
}

Int SigmaTable::convolution(int r, int s, long n) const {
    Int acc = 0;
    for (long i = 1; i < n; ++i) acc += sigma(r, i) * sigma(s, n - i);
    return acc;
}

std::vector<IdentityReport> verify_master_convolution(int n_max, long precision) {
    std::vector<IdentityReport> out;
    for (int n = 2; n <= n_max; ++n) {
        IdentityReport rep;
        {
            std::ostringstream os;
            os << "convolution identity, n = " << n;
            rep.name = os.str();
        }
        NearlyHol lhs(n + 2, 1, precision);
        for (int i = 1; i < n; ++i) {
            NearlyHol term = level1_series(i + 1, precision) *
                             level1_series(n - i + 1, precision);
            lhs += term;
        }
        NearlyHol rhs = level1_series(n + 2, precision);
        rhs.scale(Rational(n + 3));
        NearlyHol correction = level1_series(n, precision).raise();
        correction.scale(frac(-2, n));
        rhs += correction;
        lhs.trim();
        rhs.trim();
        rep.pass = (lhs == rhs);
        if (!rep.pass) rep.first_fail = n;
        out.push_back(std::move(rep));
    }
    return out;
}

namespace {

// sigma-linear ansatz term: coeff * n^npow * sigma_r(n), or a convolution
struct AnsatzTerm {
    int npow;      // 0 or 1
    int r;         // sigma exponent (single term), or first exponent (conv)
    int s = -1;    // second convolution exponent, -1 for plain sigma terms
};

Rational term_value(const AnsatzTerm& t, const SigmaTable& st, long n) {
    Int base = (t.s < 0) ? st.sigma(t.r, n) : st.convolution(t.r, t.s, n);
    if (t.npow == 1) base *= n;
    return Rational(base);
}

struct DivisorIdentity {
    std::string name;
    int lhs_r;                 // left side is lhs_scale * sigma_{lhs_r}(n)
    Rational lhs_scale;
    std::vector<AnsatzTerm> basis;
    std::vector<Rational> printed; // published coefficients on the basis
};

IdentityReport check_coeffs(const DivisorIdentity& id,
                            const std::vector<Rational>& coeffs,
                            const SigmaTable& st, long n_max,
                            const std::string& label) {
    IdentityReport rep;
    rep.name = label;
    rep.pass = true;
    for (long n = 1; n <= n_max; ++n) {
        Rational lhs = id.lhs_scale * Rational(st.sigma(id.lhs_r, n));
        Rational rhs = 0;
        for (size_t t = 0; t < id.basis.size(); ++t)
            rhs += coeffs[t] * term_value(id.basis[t], st, n);
        if (lhs != rhs) {
            rep.pass = false;
            rep.first_fail = n;
            std::ostringstream os;
            os << "n = " << n << ": lhs " << lhs.get_str() << ", rhs "
               << rhs.get_str();
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

/* Correct the published coefficients by the sparsest exact adjustment:
 * try adjustments supported on one column, then two, and so on, solving
 * each restricted system on low-n instances exactly.  The ansatz basis
 * is linearly dependent (the identities themselves relate its columns),
 * so an unconstrained refit would wander away from the published form. */
std::optional<std::vector<Rational>> fit_coeffs(const DivisorIdentity& id,
                                                const SigmaTable& st) {
    size_t k = id.basis.size();
    long m = static_cast<long>(k) + 4;
    std::vector<Rational> residual;
    bool all_zero = true;
    for (long n = 1; n <= m; ++n) {
        Rational r = id.lhs_scale * Rational(st.sigma(id.lhs_r, n));
        for (size_t t = 0; t < k; ++t)
            r -= id.printed[t] * term_value(id.basis[t], st, n);
        if (r != 0) all_zero = false;
        residual.push_back(r);
    }
    if (all_zero) return id.printed;

    auto try_subset = [&](const std::vector<size_t>& cols)
        -> std::optional<std::vector<Rational>> {
        std::vector<std::vector<Cyclo>> rows;
        std::vector<Cyclo> rhs;
        for (long n = 1; n <= m; ++n) {
            std::vector<Cyclo> row;
            for (size_t c : cols)
                row.emplace_back(term_value(id.basis[c], st, n), 1);
            rows.push_back(std::move(row));
            rhs.emplace_back(residual[n - 1], 1);
        }
        LinearSolver solver(std::move(rows), 1);
        auto delta = solver.solve(rhs);
        if (!delta) return std::nullopt;
        std::vector<Rational> coeffs = id.printed;
        for (size_t t = 0; t < cols.size(); ++t)
            coeffs[cols[t]] += (*delta)[t].rational_value();
        return coeffs;
    };

    for (size_t size = 1; size <= k; ++size) {
        // enumerate column subsets of the given size, lexicographically
        std::vector<size_t> cols(size);
        for (size_t t = 0; t < size; ++t) cols[t] = t;
        while (true) {
            if (auto c = try_subset(cols)) return c;
            long t = static_cast<long>(size) - 1;
            while (t >= 0 && cols[t] == k - size + t) --t;
            if (t < 0) break;
            ++cols[t];
            for (size_t u = t + 1; u < size; ++u) cols[u] = cols[u - 1] + 1;
        }
    }
    return std::nullopt;
}

std::string coeff_list(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].get_str();
    }
    os << "]";
    return os.str();
}

} // namespace

DivisorSumReport verify_divisor_sums(long n_max) {
    SigmaTable st(n_max);
    std::vector<DivisorIdentity> ids;
    // 5 sigma_3(n) = (6n - 1) sigma_1(n) + 12 sum sigma_1 sigma_1
    ids.push_back({"weight 4 divisor sum",
                   3,
                   Rational(5),
                   {{1, 1}, {0, 1}, {0, 1, 1}},
                   {Rational(6), Rational(-1), Rational(12)}});
    // 21 sigma_5(n) = 10(3n - 1) sigma_3(n) + 240 sum sigma_1 sigma_3
    ids.push_back({"weight 6 divisor sum",
                   5,
                   Rational(21),
                   {{1, 3}, {0, 3}, {0, 1}, {0, 1, 3}},
                   {Rational(30), Rational(-10), Rational(0), Rational(240)}});
    // 9 sigma_7(n) = 7(2n - 1) sigma_5(n) + (1/15)(14 sigma_3 - 5 sigma_1)
    //               + 56 sum (3 sigma_1 sigma_5 + 5 sigma_3 sigma_3)
    ids.push_back({"weight 8 divisor sum",
                   7,
                   Rational(9),
                   {{1, 5}, {0, 5}, {0, 3}, {0, 1}, {0, 1, 5}, {0, 3, 3}},
                   {Rational(14), Rational(-7), frac(14, 15),
                    frac(-1, 3), Rational(168), Rational(280)}});

    DivisorSumReport out;
    out.derived_all_pass = true;
    for (const auto& id : ids) {
        IdentityReport printed =
            check_coeffs(id, id.printed, st, n_max, id.name + " (published)");
        if (printed.pass) {
            out.printed.push_back(printed);
            IdentityReport d = printed;
            d.name = id.name + " (derived)";
            out.derived.push_back(std::move(d));
            continue;
        }
        auto fitted = fit_coeffs(id, st);
        IdentityReport derived;
        derived.name = id.name + " (derived)";
        if (fitted) {
            derived = check_coeffs(id, *fitted, st, n_max, id.name + " (derived)");
            if (derived.pass) {
                std::ostringstream os;
                os << id.name << ": published coefficients "
                   << coeff_list(id.printed) << " fail first at n = "
                   << printed.first_fail << "; exact coefficients are "
                   << coeff_list(*fitted) << " on the same basis";
                out.errata.push_back(os.str());
            }
        } else {
            derived.pass = false;
            derived.detail = "no exact coefficients exist on this ansatz";
        }
        if (!derived.pass) out.derived_all_pass = false;
        out.printed.push_back(std::move(printed));
        out.derived.push_back(std::move(derived));
    }
    if (out.derived.empty()) out.derived_all_pass = false;
    for (const auto& d : out.derived)
        if (!d.pass) out.derived_all_pass = false;
    return out;
}

namespace {

// Homogeneous degree-n polynomial in X, Y as coefficients of X^a Y^(n-a).
using HPoly = std::vector<Rational>;

HPoly p_poly(int n) {
    // X^n + Y^n + (-X-Y)^n
    HPoly c(n + 1, 0);
    Rational binom = 1;
    int sign = (n % 2 == 0) ? 1 : -1;
    for (int a = 0; a <= n; ++a) {
        c[a] += Rational(sign) * binom;
        binom *= frac(n - a, a + 1);
    }
    c[n] += 1;
    c[0] += 1;
    return c;
}

HPoly hmul(const HPoly& f, const HPoly& g) {
    HPoly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    return h;
}

HPoly hscale(HPoly f, const Rational& r) {
    for (auto& c : f) c *= r;
    return f;
}

// Exact division by X (drop the Y^n coefficient, which must vanish).
HPoly divide_by_x(const HPoly& f) {
    if (f.front() != 0) throw NotDivisible("polynomial not divisible by X");
    return HPoly(f.begin() + 1, f.end());
}

HPoly divide_by_y(const HPoly& f) {
    if (f.back() != 0) throw NotDivisible("polynomial not divisible by Y");
    return HPoly(f.begin(), f.end() - 1);
}

// Exact division by X + Y via synthetic division in X; homogeneity
// supplies the Y powers.
HPoly divide_by_x_plus_y(const HPoly& f) {
    if (f.size() < 2) throw NotDivisible("degree too small for X + Y");
    size_t m = f.size() - 1;
    HPoly q(m, 0);
    q[m - 1] = f[m];
    for (size_t a = m - 1; a >= 1; --a) q[a - 1] = f[a] - q[a];
    if (f[0] != q[0]) throw NotDivisible("polynomial not divisible by X + Y");
    return q;
}

bool is_zero_poly(const HPoly& f) {
    for (const auto& c : f)
        if (c != 0) return false;
    return true;
}

// Nearly holomorphic series coefficients indexed by X^a Y^(n-a).
using SeriesPoly = std::vector<NearlyHol>;

bool series_poly_equal(const SeriesPoly& a, const SeriesPoly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        NearlyHol u = a[i];
        NearlyHol v = b[i];
        if (u.trim() != v.trim()) return false;
    }
    return true;
}

} // namespace

std::vector<IdentityReport> verify_polynomial_identity(int n_max, long precision) {
    std::vector<IdentityReport> out;
    bool erratum_noted = false;
    for (int n = 1; n <= n_max; ++n) {
        IdentityReport rep;
        {
            std::ostringstream os;
            os << "symmetric polynomial identity, n = " << n;
            rep.name = os.str();
        }

        // LHS: sum over i + j = n of P_i P_j e_{i+1} e_{j+1}
        SeriesPoly lhs(n + 1, NearlyHol(n + 2, 1, precision));
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            NearlyHol sc = level1_series(i + 1, precision) *
                           level1_series(j + 1, precision);
            if (sc.is_zero()) continue;
            HPoly pp = hmul(p_poly(i), p_poly(j));
            for (int a = 0; a <= n; ++a) {
                if (pp[a] == 0) continue;
                NearlyHol t = sc;
                t.scale(pp[a]);
                lhs[a] += t;
            }
        }

        NearlyHol e_top = level1_series(n + 2, precision);
        if (e_top.is_zero()) {
            // odd n: the right side carries the zero series, so the claim
            // reduces to the left side vanishing identically
            bool zero = true;
            for (auto& c : lhs)
                if (!c.trim().is_zero()) zero = false;
            rep.pass = zero;
            if (!zero) rep.first_fail = n;
            rep.detail = "odd index, both sides vanish";
            out.push_back(std::move(rep));
            continue;
        }

        HPoly quotient = divide_by_x_plus_y(divide_by_y(divide_by_x(
            hmul(p_poly(n + 1), p_poly(2)))));
        HPoly lead = hscale(p_poly(n), Rational(n + 1));

        auto rhs_for = [&](int sign) {
            HPoly q = lead;
            for (size_t a = 0; a < q.size(); ++a)
                q[a] += Rational(sign) * quotient[a];
            SeriesPoly rhs(n + 1, NearlyHol(n + 2, 1, precision));
            for (int a = 0; a <= n; ++a) {
                if (q[a] == 0) continue;
                NearlyHol t = e_top;
                t.scale(q[a]);
                rhs[a] = t;
            }
            return rhs;
        };

        bool minus_ok = series_poly_equal(lhs, rhs_for(-1));
        bool plus_ok = series_poly_equal(lhs, rhs_for(+1));
        rep.pass = minus_ok || plus_ok;
        if (!rep.pass) rep.first_fail = n;
        if (plus_ok && !minus_ok && !erratum_noted && !is_zero_poly(quotient)) {
            rep.detail =
                "exact with the quotient term added, not subtracted; the "
                "published sign fails here";
            erratum_noted = true;
        } else if (minus_ok && !plus_ok) {
            rep.detail = "exact with the published sign";
        }
        out.push_back(std::move(rep));
    }
    return out;
}

QExpansion delta_product_oracle(long precision) {
    // q prod_{n>=1} (1 - q^n)^24: pentagonal-number series for the Euler
    // product, then four squarings and one product for the 24th power.
    long P = precision;
    std::vector<Int> euler(std::max<long>(P, 1), 0);
    if (P > 0) euler[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 >= P && g2 >= P) break;
        Int s = (k % 2 == 0) ? 1 : -1;
        if (g1 < P) euler[g1] += s;
        if (g2 < P) euler[g2] += s;
    }
    auto mul = [P](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> c(std::max<long>(P, 1), 0);
        for (long i = 0; i < P; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; i + j < P; ++j) {
                if (b[j] == 0) continue;
                c[i + j] += a[i] * b[j];
            }
        }
        return c;
    };
    std::vector<Int> e2 = mul(euler, euler);
    std::vector<Int> e4 = mul(e2, e2);
    std::vector<Int> e8 = mul(e4, e4);
    std::vector<Int> e16 = mul(e8, e8);
    std::vector<Int> e24 = mul(e16, e8);
    QExpansion out(1, precision);
    for (long m = 1; m < precision; ++m)
        out.set_coeff(m, Cyclo(Rational(e24[m - 1]), 1));
    return out;
}

GeneratorReport verify_generators(long precision) {
    GeneratorReport rep;
    NearlyHol e2 = level1_series(2, precision);
    NearlyHol e4 = level1_series(4, precision);
    NearlyHol e6 = level1_series(6, precision);

    {
        NearlyHol rhs = e2 * e2 + e2.raise();
        rhs.scale(frac(1, 5));
        rhs.trim();
        NearlyHol want = e4;
        rep.e4_ok = (rhs == want.trim());
    }
    {
        NearlyHol prod = e2 * e4;
        prod.scale(Rational(2));
        NearlyHol corr = e4.raise();
        corr.scale(frac(1, 2));
        NearlyHol rhs = prod + corr;
        rhs.scale(frac(1, 7));
        rhs.trim();
        NearlyHol want = e6;
        rep.e6_ok = (rhs == want.trim());
    }
    {
        // (720 e4)^3 - (30240 e6)^2, divided by 1728, against the product
        NearlyHol f4 = e4;
        f4.scale(Rational(720));
        NearlyHol f6 = e6;
        f6.scale(Rational(30240));
        NearlyHol delta = f4 * f4 * f4 - f6 * f6;
        delta.scale(frac(1, 1728));
        delta.trim();
        QExpansion dq = delta.holomorphic_part();
        QExpansion oracle = delta_product_oracle(precision);
        rep.delta_ok = (dq == oracle);
        for (long m = 1; m <= 4 && m < precision; ++m)
            rep.delta_coeffs.push_back(dq.coeff(m).rational_value());
    }
    return rep;
}

} // namespace eismu
