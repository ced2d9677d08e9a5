#include "eismu/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eismu/errors.hpp"

namespace eismu {

json cyclo_to_json(const Cyclo& c) {
    json num = json::array();
    json den = json::array();
    for (const auto& r : c.coeffs()) {
        num.push_back(r.get_num().get_str());
        den.push_back(r.get_den().get_str());
    }
    return json{{"level", c.level()}, {"num", num}, {"den", den}};
}

Cyclo cyclo_from_json(const json& j) {
    long level = j.at("level").get<long>();
    const auto& num = j.at("num");
    const auto& den = j.at("den");
    if (num.size() != den.size()) throw IOFailure("coordinate length mismatch");
    Cyclo acc = Cyclo::zero(level);
    for (size_t i = 0; i < num.size(); ++i) {
        Rational r(Int(num[i].get<std::string>()),
                   Int(den[i].get<std::string>()));
        r.canonicalize();
        if (r == 0) continue;
        Cyclo term = Cyclo::root(level, static_cast<long>(i));
        term *= r;
        acc += term;
    }
    return acc;
}

json qexp_to_json(const QExpansion& f) {
    json coeffs = json::object();
    for (long m = 0; m < f.precision(); ++m) {
        if (f.coeff(m).is_zero()) continue;
        coeffs[std::to_string(m)] = cyclo_to_json(f.coeff(m));
    }
    return json{{"level", f.level()},
                {"precision", f.precision()},
                {"coeffs", coeffs}};
}

QExpansion qexp_from_json(const json& j) {
    QExpansion f(j.at("level").get<long>(), j.at("precision").get<long>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        long m = std::stol(key);
        Cyclo c = cyclo_from_json(val);
        if (c.level() != f.level()) throw IOFailure("coefficient level mismatch");
        f.set_coeff(m, c);
    }
    return f;
}

json nearly_to_json(const NearlyHol& f) {
    json parts = json::array();
    for (int d = 0; d <= f.depth(); ++d)
        parts.push_back(qexp_to_json(f.part(d)).at("coeffs"));
    return json{{"level", f.level()},
                {"precision", f.precision()},
                {"weight", f.weight()},
                {"parts", parts}};
}

NearlyHol nearly_from_json(const json& j) {
    long level = j.at("level").get<long>();
    long precision = j.at("precision").get<long>();
    int weight = j.at("weight").get<int>();
    const auto& parts = j.at("parts");
    if (parts.empty()) throw IOFailure("empty depth list");
    std::vector<QExpansion> out;
    for (const auto& p : parts) {
        json wrapped{{"level", level}, {"precision", precision}, {"coeffs", p}};
        out.push_back(qexp_from_json(wrapped));
    }
    return NearlyHol(weight, std::move(out));
}

namespace {

std::string pair_key(const PrimitivePair& p) {
    std::ostringstream os;
    os << p.c << "," << p.d;
    return os.str();
}

PrimitivePair pair_from_key(long N, const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw IOFailure("bad pair key: " + key);
    return PrimitivePair{N, std::stol(key.substr(0, comma)),
                         std::stol(key.substr(comma + 1))};
}

std::string bikey_key(const BiKey& b) {
    std::ostringstream os;
    os << b.i << "," << b.j;
    return os.str();
}

BiKey bikey_from_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw IOFailure("bad monomial key: " + key);
    return BiKey{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

} // namespace

json bg_to_json(const BGSymbolTable& t) {
    json reps = json::object();
    for (const auto& [pair, lift] : t.reps)
        reps[pair_key(pair)] = json::array({lift.a, lift.b, lift.c, lift.d});
    json entries = json::object();
    for (const auto& [pair, poly] : t.entries) {
        json slices = json::object();
        for (const auto& [key, series] : poly)
            slices[bikey_key(key)] = qexp_to_json(series);
        entries[pair_key(pair)] = slices;
    }
    return json{{"N", t.N},           {"k", t.k},
                {"precision", t.precision}, {"sturm", t.sturm},
                {"reps", reps},       {"entries", entries}};
}

BGSymbolTable bg_from_json(const json& j) {
    BGSymbolTable t;
    t.N = j.at("N").get<long>();
    t.k = j.at("k").get<int>();
    t.precision = j.at("precision").get<long>();
    t.sturm = j.at("sturm").get<long>();
    for (const auto& [key, val] : j.at("reps").items()) {
        Mat2i m{val.at(0).get<long>(), val.at(1).get<long>(),
                val.at(2).get<long>(), val.at(3).get<long>()};
        t.reps.emplace_back(pair_from_key(t.N, key), m);
    }
    for (const auto& [key, val] : j.at("entries").items()) {
        CuspPoly poly;
        for (const auto& [mk, series] : val.items())
            poly.emplace(bikey_from_key(mk), qexp_from_json(series));
        t.entries.emplace(pair_from_key(t.N, key), std::move(poly));
    }
    return t;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IOFailure("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw IOFailure("write failed: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOFailure("cannot open: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw IOFailure("malformed payload: " + path);
    return j;
}

void cache_store(const std::string& dir, const std::string& key, const json& j) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IOFailure("cannot create cache directory: " + dir);
    write_json_file(dir + "/" + key + ".json", j);
}

std::optional<json> cache_load(const std::string& dir, const std::string& key) {
    std::string path = dir + "/" + key + ".json";
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return j;
}

} // namespace eismu
