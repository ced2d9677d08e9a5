#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eismu/bg_table.hpp"
#include "eismu/cusp_reduce.hpp"
#include "eismu/eisenstein.hpp"
#include "eismu/errors.hpp"
#include "eismu/identities.hpp"
#include "eismu/json_io.hpp"
#include "eismu/mu_symbol.hpp"

using namespace eismu;

namespace {

constexpr const char* kCodeVersion = "v1";

std::string cache_dir_default() {
    if (const char* env = std::getenv("EISMU_CACHE_DIR")) return env;
    return "";
}

void emit(const json& j, const std::string& out_path, const std::string& format) {
    if (!out_path.empty()) {
        write_json_file(out_path, j);
        return;
    }
    if (format == "text") {
        // flat key: value listing for quick inspection
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

json membership_to_json(const Membership& m) {
    json cert = json::array();
    for (const auto& c : m.certificate) cert.push_back(cyclo_to_json(c));
    return json{{"in_span", m.in_span}, {"certificate", cert}};
}

json report_to_json(const IdentityReport& r) {
    json j{{"name", r.name}, {"pass", r.pass}};
    if (!r.pass) j["first_fail"] = r.first_fail;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

int run_eisenstein(long N, int k, long c1, long c2, long prec,
                   const std::string& cache_dir, const std::string& out,
                   const std::string& format) {
    std::ostringstream key;
    key << "eisenstein_N" << N << "_k" << k << "_c" << c1 << "_" << c2
        << "_B" << prec << "_" << kCodeVersion;
    if (!cache_dir.empty()) {
        if (auto cached = cache_load(cache_dir, key.str())) {
            try {
                NearlyHol f = nearly_from_json(*cached);
                if (f.level() == N && f.precision() == prec && f.weight() == k) {
                    emit(*cached, out, format);
                    return 0;
                }
            } catch (const Error&) {
                // corrupt entry: fall through and recompute
            }
        }
    }
    NearlyHol f = eis_series(k, TorsionIndex{N, c1, c2}, prec);
    json j = nearly_to_json(f);
    if (!cache_dir.empty()) cache_store(cache_dir, key.str(), j);
    emit(j, out, format);
    return 0;
}

int run_mu(const std::string& open_text, long prec, int W,
           const std::string& out, const std::string& format) {
    CompactOpenM2 U = parse_compact_open(open_text);
    MuValue mu = mu_eval(U, prec, W);
    json entries = json::object();
    for (const auto& [key, series] : mu.value.entries()) {
        std::ostringstream k;
        k << key.i << "," << key.j;
        entries[k.str()] = nearly_to_json(series);
    }
    json j{{"open", format_compact_open(U)},
           {"precision", prec},
           {"degree_cap", W},
           {"entries", entries}};
    emit(j, out, format);
    return 0;
}

CompactOpenM2 case_open(char which, long N) {
    switch (which) {
        case 'a':
            return whole_lattice_m2();
        case 'b':
            return parse_compact_open("1/" + std::to_string(N) + ",0,1/" +
                                      std::to_string(N) + ",0 mod 1");
        case 'c': {
            std::string n = std::to_string(N);
            long d = (3 % N == 0) ? 4 % N : 3;
            if (d == 0) d = 1;
            return parse_compact_open("1/" + n + ",2/" + n + ",1/" + n + "," +
                                      std::to_string(d) + "/" + n + " mod 1");
        }
        default:
            throw IOFailure("unknown case");
    }
}

int run_verify_manin(long N, int W, long prec, const std::string& which,
                     const std::string& out, const std::string& format) {
    if (prec <= 0) prec = sturm_bound(N, W + 2) + 8;
    json cases = json::object();
    bool all_pass = true;
    std::string selected = (which == "all") ? "abc" : which;
    for (char c : selected) {
        CompactOpenM2 U = case_open(c, N);
        ManinReport m1 = manin1_check(U, prec, W);
        Manin2Report m2 = manin2_check(U, prec, W);
        json degrees = json::object();
        for (const auto& [d, certs] : m2.certificates) {
            json per_monomial = json::object();
            for (const auto& [key, mem] : certs) {
                std::ostringstream k;
                k << key.i << "," << key.j;
                per_monomial[k.str()] = membership_to_json(mem);
            }
            degrees[std::to_string(d)] =
                json{{"pass", m2.degree_pass.at(d)}, {"monomials", per_monomial}};
        }
        json failures = json::array();
        for (const auto& [key, msg] : m1.failures) {
            std::ostringstream k;
            k << key.i << "," << key.j;
            failures.push_back(json{{"entry", k.str()}, {"reason", msg}});
        }
        bool pass = m1.pass && m2.pass;
        all_pass = all_pass && pass;
        cases[std::string(1, c)] =
            json{{"open", format_compact_open(U)},
                 {"two_term", json{{"pass", m1.pass}, {"failures", failures}}},
                 {"three_term", json{{"pass", m2.pass}, {"degrees", degrees}}},
                 {"pass", pass}};
    }
    json j{{"N", N}, {"W", W}, {"precision", prec},
           {"cases", cases}, {"pass", all_pass}};
    emit(j, out, format);
    return all_pass ? 0 : 1;
}

int run_verify_identities(int nmax, long prec, const std::string& out,
                          const std::string& format) {
    if (prec <= 0) prec = nmax + 10;
    bool fail = false;

    json convolution = json::array();
    for (const auto& r : verify_master_convolution(nmax, prec)) {
        if (!r.pass) fail = true;
        convolution.push_back(report_to_json(r));
    }

    DivisorSumReport ds = verify_divisor_sums(nmax);
    json printed = json::array(), derived = json::array(), errata = json::array();
    for (const auto& r : ds.printed) printed.push_back(report_to_json(r));
    for (const auto& r : ds.derived) derived.push_back(report_to_json(r));
    for (const auto& e : ds.errata) errata.push_back(e);
    if (!ds.derived_all_pass) fail = true;

    json poly = json::array();
    for (const auto& r : verify_polynomial_identity(std::min(nmax, 12), prec)) {
        if (!r.pass) fail = true;
        if (!r.detail.empty() &&
            r.detail.find("published sign fails") != std::string::npos)
            errata.push_back(r.name + ": " + r.detail);
        poly.push_back(report_to_json(r));
    }

    GeneratorReport gen = verify_generators(prec);
    if (!gen.pass()) fail = true;
    json gen_coeffs = json::array();
    for (const auto& c : gen.delta_coeffs) gen_coeffs.push_back(c.get_str());

    json j{{"nmax", nmax},
           {"precision", prec},
           {"convolution", convolution},
           {"divisor_sums",
            json{{"published", printed}, {"derived", derived}}},
           {"polynomial", poly},
           {"generators", json{{"weight4", gen.e4_ok},
                               {"weight6", gen.e6_ok},
                               {"cusp_form", gen.delta_ok},
                               {"cusp_form_coeffs", gen_coeffs}}},
           {"errata", errata},
           {"pass", !fail}};
    emit(j, out, format);
    return fail ? 1 : 0;
}

int run_bg_table(long N, int k, long prec, const std::string& out,
                 const std::string& format) {
    BGSymbolTable t = bg_build(N, k, prec);
    emit(bg_to_json(t), out, format);
    return 0;
}

int run_cusp_part(long N, int k, const std::string& combo_path, long prec,
                  const std::string& out, const std::string& format) {
    json j = read_json_file(combo_path);
    Combo combo;
    for (const auto& jt : j.at("terms")) {
        ComboTerm t;
        Rational r(jt.at("coeff").get<std::string>());
        r.canonicalize();
        t.coeff = r;
        for (const auto& jf : jt.at("factors")) {
            EisSpec f;
            f.k = jf.at("k").get<int>();
            f.lattice = jf.value("lattice", false);
            if (!f.lattice)
                f.c = TorsionIndex{jf.at("level").get<long>(),
                                   jf.at("c1").get<long>(),
                                   jf.at("c2").get<long>()};
            t.factors.push_back(f);
        }
        combo.add_term(std::move(t));
    }
    if (prec <= 0) prec = sturm_bound(N, k) + 8;
    QExpansion part = cusp_part(combo, N, k, prec);
    json constants = json::array();
    for (const auto& c : cusp_constants(combo, N))
        constants.push_back(cyclo_to_json(c));
    json outj{{"N", N},
              {"k", k},
              {"precision", prec},
              {"cusp_constants", constants},
              {"cusp_part", qexp_to_json(part)}};
    emit(outj, out, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Eisenstein-distribution engine"};
    app.require_subcommand(1);

    long N = 1, c1 = 0, c2 = 0, prec = 0;
    int k = 2, W = 2, nmax = 20;
    std::string out, format = "json", cache_dir = cache_dir_default();
    std::string open_text, combo_path, which_case = "all";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out, "write the JSON report to this path");
        sub->add_option("--format", format, "output format (json|text)")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--cache-dir", cache_dir, "series cache directory");
    };

    auto* eis = app.add_subcommand("eisenstein", "print one torsion series");
    eis->add_option("--N", N, "level")->required();
    eis->add_option("--k", k, "weight")->required();
    eis->add_option("--c1", c1, "first torsion coordinate")->required();
    eis->add_option("--c2", c2, "second torsion coordinate")->required();
    eis->add_option("--prec", prec, "q-expansion precision")->required();
    add_common(eis);

    auto* mu = app.add_subcommand("mu", "evaluate the distribution on an open");
    mu->add_option("--open", open_text, "compact open, e.g. \"0,0,1/3,1/3 mod 1\"")
        ->required();
    mu->add_option("--prec", prec, "q-expansion precision")->required();
    mu->add_option("--W", W, "maximal total degree in X, Y");
    add_common(mu);

    auto* vm = app.add_subcommand("verify-manin", "check the two modular-symbol relations");
    vm->add_option("--N", N, "level")->required();
    vm->add_option("--W", W, "maximal total degree in X, Y");
    vm->add_option("--prec", prec, "q-expansion precision (0 = automatic)");
    vm->add_option("--case", which_case, "test family (a|b|c|all)")
        ->check(CLI::IsMember({"a", "b", "c", "all"}));
    add_common(vm);

    auto* vi = app.add_subcommand("verify-identities", "check the weight-graded identities");
    vi->add_option("--nmax", nmax, "largest index checked");
    vi->add_option("--prec", prec, "q-expansion precision (0 = automatic)");
    add_common(vi);

    auto* bg = app.add_subcommand("bg-table", "build a Manin symbol table");
    bg->add_option("--N", N, "level")->required();
    bg->add_option("--k", k, "weight")->required();
    bg->add_option("--prec", prec, "q-expansion precision (0 = automatic)");
    add_common(bg);

    auto* cp = app.add_subcommand("cusp-part", "cusp part of a product combination");
    cp->add_option("--N", N, "level")->required();
    cp->add_option("--k", k, "weight")->required();
    cp->add_option("--combo", combo_path, "JSON file with the combination")
        ->required();
    cp->add_option("--prec", prec, "q-expansion precision (0 = automatic)");
    add_common(cp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eis->parsed())
            return run_eisenstein(N, k, c1, c2, prec, cache_dir, out, format);
        if (mu->parsed()) return run_mu(open_text, prec, W, out, format);
        if (vm->parsed())
            return run_verify_manin(N, W, prec, which_case, out, format);
        if (vi->parsed()) return run_verify_identities(nmax, prec, out, format);
        if (bg->parsed()) return run_bg_table(N, k, prec, out, format);
        if (cp->parsed())
            return run_cusp_part(N, k, combo_path, prec, out, format);
    } catch (const RelationViolation& e) {
        std::cerr << json{{"pass", false}, {"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
