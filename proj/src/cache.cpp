#include "ogglab/cache.hpp"

#include <fstream>

#include "ogglab/errors.hpp"
#include "ogglab/matrix_json.hpp"

namespace ogglab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json latticeToJson(const QLattice& l) {
    return {{"denominator", l.denominator().get_str()}, {"numerators", matrixToJson(l.numerators().basis())}};
}

QLattice latticeFromJson(const json& j) {
    return QLattice::fromIntegerBasis(matrixFromJson(j.at("numerators")),
                                      parseInteger(j.at("denominator").get<std::string>()));
}

Rational parseRational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidInput("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

fs::path brandtCachePath(const fs::path& dir, long p, long q) {
    return dir / ("brandt_" + std::to_string(p) + "_" + std::to_string(q) + ".json");
}

json brandtToJson(const BrandtModule& m) {
    const auto& e = m.order();
    json classes = json::array();
    for (std::size_t i = 0; i < m.classCount(); ++i) {
        const auto& c = m.classes();
        json entry = latticeToJson(c.ideals[i]);
        entry["norm"] = c.norms[i].get_str();
        entry["weight"] = c.weights[i];
        entry["gram"] = matrixToJson(c.grams[i]);
        classes.push_back(entry);
    }
    json hecke = json::object();
    for (const auto& [n, b] : m.computedMatrices()) hecke[std::to_string(n)] = matrixToJson(b);
    return {{"format", 1},
            {"p", m.p()},
            {"q", m.q()},
            {"algebra", {{"a", e.algebra.a().get_str()}, {"b", e.algebra.b().get_str()}}},
            {"maximalOrder", latticeToJson(e.maximal)},
            {"order", latticeToJson(e.order)},
            {"classes", classes},
            {"hecke", hecke}};
}

BrandtModule brandtFromJson(const json& j) {
    try {
        if (j.at("format").get<int>() != 1) throw InvalidInput("unknown cache format");
        EichlerOrder e;
        e.p = j.at("p").get<long>();
        e.q = j.at("q").get<long>();
        e.algebra = QuaternionAlgebra(parseInteger(j.at("algebra").at("a").get<std::string>()),
                                      parseInteger(j.at("algebra").at("b").get<std::string>()));
        auto ram = e.algebra.ramifiedPrimes();
        if (!e.algebra.isDefinite() || ram.size() != 1 || ram[0] != e.p)
            throw InvalidInput("cached algebra is not ramified exactly at p");
        e.maximal = latticeFromJson(j.at("maximalOrder"));
        e.order = latticeFromJson(j.at("order"));
        const Integer level = Integer(e.p) * e.q;
        if (!isOrder(e.algebra, e.order) || abs(discriminant(e.algebra, e.order)) != Rational(level * level))
            throw InvalidInput("cached order does not have reduced discriminant pq");
        IdealClassSet classes;
        for (const auto& c : j.at("classes")) {
            QLattice ideal = latticeFromJson(c);
            Rational norm = parseRational(c.at("norm").get<std::string>());
            long weight = c.at("weight").get<long>();
            if (unitHalfOrder(e.algebra, leftOrder(e.algebra, ideal, norm)) != weight)
                throw InvalidInput("cached unit weight does not match its ideal");
            classes.ideals.push_back(ideal);
            classes.norms.push_back(norm);
            classes.weights.push_back(weight);
            classes.grams.push_back(integralNormGram(e.algebra, ideal, norm));
        }
        BrandtModule module(std::move(e), std::move(classes));
        for (const auto& [key, value] : j.at("hecke").items()) {
            long n = std::stol(key);
            IntMatrix b = matrixFromJson(value);
            if (b.rows() != module.classCount() || b.cols() != module.classCount())
                throw InvalidInput("cached Hecke matrix has the wrong size");
            if (n == 1 && b != IntMatrix::identity(module.classCount()))
                throw InvalidInput("cached B(1) is not the identity");
            module.seedMatrix(n, b);
        }
        return module;
    } catch (const json::exception& ex) {
        throw InvalidInput(std::string("malformed cache: ") + ex.what());
    }
}

void writeJsonAtomic(const fs::path& path, const json& j) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InvalidInput("cannot write " + tmp.string());
        out << j.dump(1) << "\n";
        if (!out) throw InvalidInput("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::optional<json> readJsonFile(const fs::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw InvalidInput("cannot parse " + path.string() + ": " + ex.what());
    }
}

BrandtModule loadOrBuildBrandt(const fs::path& dir, long p, long q, bool* loaded) {
    if (auto j = readJsonFile(brandtCachePath(dir, p, q))) {
        if (loaded) *loaded = true;
        return brandtFromJson(*j);
    }
    if (loaded) *loaded = false;
    return BrandtModule::build(p, q);
}

}  // namespace ogglab
