#include "ogglab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogglab/cache.hpp"
#include "ogglab/elliptic.hpp"
#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"
#include "ogglab/hecke_algebra.hpp"
#include "ogglab/matrix_json.hpp"
#include "ogglab/module_iso.hpp"
#include "ogglab/ogg_predictor.hpp"

namespace ogglab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string cacheFlag;
    long budget = 5;
    long sturmOverride = 0;
    std::string format = "json";

    fs::path cacheDir() const {
        if (!cacheFlag.empty()) return cacheFlag;
        if (const char* env = std::getenv("OGGLAB_CACHE"); env && *env) return env;
        return ".ogglab-cache";
    }
};

class UsageError : public Error {
public:
    using Error::Error;
};

class MissingCache : public Error {
public:
    using Error::Error;
};

void requirePair(long p, long q) {
    if (!isPrime(p) || !isPrime(q)) throw UsageError("p and q must be primes");
    if (p == q) throw UsageError("p and q must be distinct");
}

void renderText(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) renderText(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) renderText(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const json& j, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "text")
        renderText(j, "", out);
    else
        out << j.dump(2) << "\n";
}

long boundFor(const RunConfig& cfg, long p, long q) {
    return cfg.sturmOverride > 0 ? cfg.sturmOverride : sturmBound(p, q);
}

std::map<long, IntMatrix> cuspidalFamily(const BrandtModule& m, long bound) {
    std::map<long, IntMatrix> out;
    for (long n = 1; n <= bound; ++n) out[n] = m.cuspidalHecke(n);
    return out;
}

std::vector<IntMatrix> values(const std::map<long, IntMatrix>& family) {
    std::vector<IntMatrix> out;
    for (const auto& [n, m] : family) out.push_back(m);
    return out;
}

std::vector<IntMatrix> select(const std::map<long, IntMatrix>& family, const std::vector<long>& idx) {
    std::vector<IntMatrix> out;
    for (long n : idx) out.push_back(family.at(n));
    return out;
}

BrandtModule moduleWithCache(const RunConfig& cfg, long p, long q, long bound) {
    BrandtModule m = loadOrBuildBrandt(cfg.cacheDir(), p, q);
    for (long n = 1; n <= bound; ++n) m.brandtMatrix(n);
    writeJsonAtomic(brandtCachePath(cfg.cacheDir(), p, q), brandtToJson(m));
    return m;
}

json polyJson(const IntPoly& p) { return p.toString(); }

json obstructionJson(const Obstruction& o) {
    json j = {{"kind", toString(o.kind)}, {"detail", o.detail}};
    if (o.kind == ObstructionKind::LocalDetObstruction) {
        j["prime"] = o.prime;
        j["pointsChecked"] = o.pointsChecked.get_str();
    }
    if (o.kind == ObstructionKind::Unknown) j["budget"] = o.budget;
    if (o.generatorIndex) {
        j["generatorIndex"] = *o.generatorIndex;
        j["charpolys"] = {polyJson(o.leftCharpoly), polyJson(o.rightCharpoly)};
    }
    return j;
}

json freenessJson(const FreenessResult& r) {
    if (auto c = std::get_if<FreenessCertificate>(&r))
        return {{"free", true},
                {"vector", vectorToJson(c->vector)},
                {"determinant", c->determinant.get_str()},
                {"stacked", matrixToJson(c->stacked)}};
    return {{"free", false}, {"obstruction", obstructionJson(std::get<Obstruction>(r))}};
}

int cmdBrandt(const RunConfig& cfg, long p, long q, long nMax, std::ostream& out) {
    requirePair(p, q);
    const long bound = std::max(nMax, boundFor(cfg, p, q));
    BrandtModule m = moduleWithCache(cfg, p, q, bound);
    json charpolys = json::object();
    json ramanujan = json::object();
    bool rowSums = true;
    for (long n = 1; n <= bound; ++n) {
        IntMatrix s = m.cuspidalHecke(n);
        IntPoly cp = charpoly(s);
        charpolys[std::to_string(n)] = polyJson(cp);
        if (isPrime(n) && (p * q) % n != 0)
            ramanujan[std::to_string(n)] = allRootsRealIn(squaredRootsPoly(cp), Rational(0), Rational(4 * n));
        if (std::gcd(n, p * q) == 1) {
            IntMatrix b = m.brandtMatrix(n);
            for (std::size_t i = 0; i < b.rows(); ++i) {
                Integer sum = 0;
                for (std::size_t j = 0; j < b.cols(); ++j) sum += b(i, j);
                rowSums = rowSums && sum == sigma1(n);
            }
        }
    }
    json weights = json::array();
    for (long w : m.classes().weights) weights.push_back(w);
    json j = {{"p", p},
              {"q", q},
              {"classCount", m.classCount()},
              {"cuspidalRank", m.cuspidalRank()},
              {"weights", weights},
              {"mass", m.classes().mass().get_str()},
              {"eichlerMass", eichlerMass(p, q).get_str()},
              {"massCheck", m.classes().mass() == eichlerMass(p, q)},
              {"sturmBound", sturmBound(p, q)},
              {"bound", bound},
              {"rowSumsSigma", rowSums},
              {"cuspidalCharpolys", charpolys},
              {"ramanujanBound", ramanujan}};
    emit(j, cfg, out);
    return kExitOk;
}

json eisensteinJson(const EisensteinData& e) {
    json names = json::array();
    for (const auto& n : e.generatorNames) names.push_back(n);
    json j = {{"generators", names}, {"invariantFactors", vectorToJson(e.invariantFactors)}};
    if (e.variant != EisensteinVariant::PlainE) {
        j["ell"] = e.ell;
        j["maximal"] = e.maximal;
        j["variant"] = e.variant == EisensteinVariant::MPlusMinus ? "mPlusMinus" : "mMinusPlus";
    }
    return j;
}

int cmdHecke(const RunConfig& cfg, long p, long q, std::vector<long> gens, std::ostream& out) {
    requirePair(p, q);
    const long bound = boundFor(cfg, p, q);
    BrandtModule m = moduleWithCache(cfg, p, q, bound);
    json j = {{"p", p}, {"q", q}, {"sturmBound", bound}, {"cuspidalRank", m.cuspidalRank()}};
    if (m.cuspidalRank() == 0) {
        j["rank"] = 0;
        j["note"] = "cuspidal rank 0: the Hecke algebra is the zero ring";
        emit(j, cfg, out);
        return kExitOk;
    }
    HeckeAlgebra alg = buildHeckeAlgebra(cuspidalFamily(m, bound), bound, p, q);
    if (gens.empty()) gens = chooseGenerators(alg);
    json basis = json::array();
    for (const auto& b : alg.basis) basis.push_back(matrixToJson(b));
    j["rank"] = alg.rank();
    j["discriminant"] = discriminant(alg).get_str();
    j["basis"] = basis;
    json g = json::array();
    for (long n : gens) g.push_back(n);
    j["generators"] = g;
    if (!gens.empty()) {
        auto gc = generationCheck(alg, gens);
        j["generationCheck"] = {{"generates", gc.generates},
                                {"index", gc.index ? json(gc.index->get_str()) : json(nullptr)}};
    }
    j["eisenstein"] = eisensteinJson(eisensteinQuotient(alg, EisensteinVariant::PlainE));
    json maximal = json::array();
    for (const auto& r : eisensteinPrimes(p, q)) {
        if (r.condition == EisensteinCondition::Neither) continue;
        auto v = r.condition == EisensteinCondition::PPlusOne ? EisensteinVariant::MPlusMinus
                                                            : EisensteinVariant::MMinusPlus;
        maximal.push_back(eisensteinJson(eisensteinQuotient(alg, v, r.ell)));
    }
    j["eisensteinMaximal"] = maximal;
    writeJsonAtomic(cfg.cacheDir() / ("hecke_" + std::to_string(p) + "_" + std::to_string(q) + ".json"), j);
    emit(j, cfg, out);
    return kExitOk;
}

json certificateJson(long p, long q, long bound, const std::vector<IntMatrix>& s,
                     const std::vector<IntMatrix>& t, const IsoCertificate& c) {
    json gens = json::array();
    for (long n = 1; n <= bound; ++n) gens.push_back(n);
    return {{"kind", "IsoCertificate"},
            {"source", {{"p", p}, {"q", q}}},
            {"target", {{"p", q}, {"q", p}}},
            {"bound", bound},
            {"generators", gens},
            {"sourceHash", familyHash(s)},
            {"targetHash", familyHash(t)},
            {"determinant", c.determinant.get_str()},
            {"witness", matrixToJson(c.witness)}};
}

int cmdIsoCheck(const RunConfig& cfg, long p, long q, bool dual, std::vector<long> gens,
                const std::string& outPath, std::ostream& out) {
    requirePair(p, q);
    const long bound = boundFor(cfg, p, q);
    BrandtModule mp = moduleWithCache(cfg, p, q, bound);
    auto famP = cuspidalFamily(mp, bound);
    json j = {{"p", p}, {"q", q}, {"bound", bound}, {"dual", dual}, {"cuspidalRank", mp.cuspidalRank()}};
    const fs::path certPath = outPath.empty()
        ? cfg.cacheDir() / ("cert_" + std::to_string(p) + "_" + std::to_string(q) + ".json")
        : fs::path(outPath);

    std::map<long, IntMatrix> famQ;
    if (!dual) {
        BrandtModule mq = moduleWithCache(cfg, q, p, bound);
        famQ = cuspidalFamily(mq, bound);
    }
    if (!dual && famQ.at(1).rows() != mp.cuspidalRank()) {
        Obstruction o;
        o.kind = ObstructionKind::RationalMismatch;
        o.detail = "cuspidal ranks differ: " + std::to_string(mp.cuspidalRank()) + " at " + std::to_string(p) +
                   ", " + std::to_string(famQ.at(1).rows()) + " at " + std::to_string(q);
        j["result"] = "obstruction";
        j["obstruction"] = obstructionJson(o);
        emit(j, cfg, out);
        return kExitObstruction;
    }
    if (mp.cuspidalRank() == 0) {
        IsoCertificate c{IntMatrix(0, 0), Integer(1)};
        j["result"] = "certificate";
        j["note"] = "cuspidal rank 0: the isomorphism is vacuous";
        if (!dual) {
            writeJsonAtomic(certPath, certificateJson(p, q, bound, values(famP), values(famQ), c));
            j["certificate"] = certPath.string();
        }
        emit(j, cfg, out);
        return kExitOk;
    }

    HeckeAlgebra alg = buildHeckeAlgebra(famP, bound, p, q);
    if (gens.empty()) gens = chooseGenerators(alg);
    json g = json::array();
    for (long n : gens) g.push_back(n);
    j["freenessGenerators"] = g;
    j["freeness"] = {{"M_" + std::to_string(p), freenessJson(freenessTest(select(famP, gens), cfg.budget))}};

    auto s = values(famP);
    std::vector<IntMatrix> t;
    if (dual) {
        t = transposed(s);
        std::map<long, IntMatrix> famDual;
        for (const auto& [n, m] : famP) famDual[n] = m.transpose();
        j["freeness"]["M_" + std::to_string(p) + "^*"] = freenessJson(freenessTest(select(famDual, gens), cfg.budget));
    } else {
        t = values(famQ);
        j["freeness"]["M_" + std::to_string(q)] = freenessJson(freenessTest(select(famQ, gens), cfg.budget));
    }
    IsoResult r = findUnimodular(homLattice(s, t), cfg.budget);
    if (auto c = std::get_if<IsoCertificate>(&r)) {
        if (!verifyCertificate(s, t, c->witness)) throw std::logic_error("emitted certificate fails its own check");
        j["result"] = "certificate";
        j["determinant"] = c->determinant.get_str();
        j["witness"] = matrixToJson(c->witness);
        if (!dual) {
            writeJsonAtomic(certPath, certificateJson(p, q, bound, s, t, *c));
            j["certificate"] = certPath.string();
        }
        emit(j, cfg, out);
        return kExitOk;
    }
    const auto& o = std::get<Obstruction>(r);
    j["result"] = o.kind == ObstructionKind::Unknown ? "unknown" : "obstruction";
    j["obstruction"] = obstructionJson(o);
    emit(j, cfg, out);
    return o.kind == ObstructionKind::Unknown ? kExitUnknown : kExitObstruction;
}


json curveJson(const WeierstrassCurve& e) {
    return json::array({e.a1.get_str(), e.a2.get_str(), e.a3.get_str(), e.a4.get_str(), e.a6.get_str()});
}

int cmdOgg(const RunConfig& cfg, long p, long q, bool runIso, std::ostream& out) {
    requirePair(p, q);
    json j = {{"p", p}, {"q", q}, {"M", numeratorM(q).get_str()}};
    if (isOggPrime(p)) {
        auto pred = predictedKernel(p, q);
        j["applicable"] = true;
        j["kernelShape"] = vectorToJson(pred.kernelShape);
    } else {
        j["applicable"] = false;
        j["kernelShape"] = nullptr;
    }
    auto g = groupOrders(p, q);
    j["groupOrders"] = {{"cuspidalShape", vectorToJson(g.cuspidalShape)},
                        {"shimuraSubgroup", g.shimuraOrder.get_str()},
                        {"phiQ", g.phiQOrder.get_str()},
                        {"shimuraCurveComponent",
                         isOggPrime(p) ? json(g.shimuraCurveComponentOrder.get_str()) : json(nullptr)},
                        {"upTo2And3Torsion", g.upTo2And3}};
    bool certified = false;
    if (runIso) {
        std::ostringstream sink;
        int code = cmdIsoCheck(cfg, p, q, false, {}, "", sink);
        certified = code == kExitOk;
        j["isoCheckExit"] = code;
    }
    json primes = json::array();
    std::string report;
    for (const auto& r : eisensteinPrimes(p, q)) {
        primes.push_back({{"ell", r.ell},
                          {"condition", toString(r.condition)},
                          {"ideal", r.idealGenerators},
                          {"theoremApplies", r.theoremApplies}});
        if (r.theoremApplies) report += "ell = " + std::to_string(r.ell) + "\n" + strategyReport(certified, p, q, r.ell).text();
    }
    if (report.empty()) report = "no prime ell >= 5 satisfies either congruence condition\n";
    j["eisensteinPrimes"] = primes;
    j["report"] = report;
    json bundled = json::array();
    for (const auto& c : bundledCurves())
        if (c.conductor == q && c.p == p)
            bundled.push_back({{"label", c.label}, {"ell", c.ell},
                               {"note", "bundled curve gives a counterexample candidate; run detect"}});
    j["bundledCounterexamples"] = bundled;
    emit(j, cfg, out);
    return kExitOk;
}

WeierstrassCurve loadCurve(const std::string& spec) {
    if (const auto* b = findBundledCurve(spec)) {
        std::vector<Integer> c(b->coefficients.begin(), b->coefficients.end());
        return makeCurve(c);
    }
    auto j = readJsonFile(spec);
    if (!j) throw InvalidInput("no such curve file or bundled label: " + spec);
    const json& arr = j->is_array() ? *j : j->at("coefficients");
    std::vector<Integer> c;
    for (const auto& v : arr) c.push_back(v.is_string() ? parseInteger(v.get<std::string>()) : Integer(v.get<long>()));
    return makeCurve(c);
}

int cmdDetect(const RunConfig& cfg, const std::string& curveSpec, long p, long ell, bool assertIrreducible,
              std::ostream& out) {
    WeierstrassCurve e = loadCurve(curveSpec);
    if (!isPrime(ell)) throw UsageError("ell must be prime");
    auto r = detect(e, p, ell, assertIrreducible);
    json j = {{"curve", curveJson(e)},
              {"discriminant", e.discriminant().get_str()},
              {"p", p},
              {"ell", ell},
              {"pointCount", r.pointCount.get_str()},
              {"traceAp", r.traceAp.get_str()},
              {"groupStructure", {r.d1.get_str(), r.d2.get_str()}},
              {"scalarPlus", r.scalarPlus},
              {"scalarMinus", r.scalarMinus},
              {"newnessCongruence", r.newnessCongruence},
              {"mod3IrreducibleSufficient",
               r.mod3IrreducibleSufficient ? json(*r.mod3IrreducibleSufficient) : json(nullptr)},
              {"irreducibleAsserted", r.irreducibleAsserted},
              {"COUNTEREXAMPLE-CANDIDATE", r.candidate},
              {"unprovedHypotheses", r.unprovedHypotheses},
              {"citedFacts", r.citedFacts}};
    emit(j, cfg, out);
    return kExitOk;
}

int cmdVerify(const RunConfig& cfg, const std::string& certFile, std::ostream& out) {
    auto cert = readJsonFile(certFile);
    if (!cert) throw InvalidInput("cannot read certificate " + certFile);
    long p, q, bound;
    IntMatrix witness;
    std::string sourceHash, targetHash;
    try {
        if (cert->at("kind") != "IsoCertificate") throw InvalidInput("not an IsoCertificate");
        p = cert->at("source").at("p").get<long>();
        q = cert->at("source").at("q").get<long>();
        bound = cert->at("bound").get<long>();
        witness = matrixFromJson(cert->at("witness"));
        sourceHash = cert->at("sourceHash").get<std::string>();
        targetHash = cert->at("targetHash").get<std::string>();
    } catch (const json::exception& ex) {
        throw InvalidInput(std::string("malformed certificate: ") + ex.what());
    }
    requirePair(p, q);
    const long sturm = sturmBound(p, q);
    json j = {{"certificate", certFile}, {"p", p}, {"q", q}, {"bound", std::max(bound, sturm)}};
    std::vector<std::string> problems;
    if (bound < sturm) problems.push_back("certificate bound is below the Sturm bound; checked up to the Sturm bound");
    auto loadSide = [&](long a, long b) {
        auto path = brandtCachePath(cfg.cacheDir(), a, b);
        auto cached = readJsonFile(path);
        if (!cached) throw MissingCache("missing cache " + path.string());
        return brandtFromJson(*cached);
    };
    BrandtModule mp = loadSide(p, q);
    BrandtModule mq = loadSide(q, p);
    const long upTo = std::max(bound, sturm);
    auto s = values(cuspidalFamily(mp, upTo));
    auto t = values(cuspidalFamily(mq, upTo));
    std::vector<IntMatrix> sHashed(s.begin(), s.begin() + bound), tHashed(t.begin(), t.begin() + bound);
    if (familyHash(sHashed) != sourceHash) problems.push_back("source Hecke matrices differ from the certificate's hash");
    if (familyHash(tHashed) != targetHash) problems.push_back("target Hecke matrices differ from the certificate's hash");
    bool ok = verifyCertificate(s, t, witness);
    if (!ok) problems.push_back("witness is not unimodular or does not intertwine the Hecke actions");
    j["verified"] = ok;
    j["problems"] = problems;
    emit(j, cfg, out);
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Character groups of J_0(pq) as Hecke modules, and Ogg's predictions", "ogglab"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--cache", cfg.cacheFlag, "cache directory (overrides OGGLAB_CACHE)");
    app.add_option("--budget", cfg.budget, "coefficient bound for certificate searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--sturm", cfg.sturmOverride, "override the Sturm bound")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag_callback("--text", [&cfg] { cfg.format = "text"; }, "same as --format text");

    long p = 0, q = 0, nMax = 0, ell = 0;
    bool dual = false, iso = false, assertIrreducible = false;
    std::vector<long> gens;
    std::string outPath, curve, certFile;

    auto* brandt = app.add_subcommand("brandt", "Brandt module and cuspidal Hecke matrices");
    brandt->add_option("p", p, "ramified prime")->required();
    brandt->add_option("q", q, "level")->required();
    brandt->add_option("--nmax", nMax, "compute S_n up to this n (at least the Sturm bound)");

    auto* hecke = app.add_subcommand("hecke", "Hecke algebra, generation and Eisenstein quotients");
    hecke->add_option("p", p)->required();
    hecke->add_option("q", q)->required();
    hecke->add_option("--gens", gens, "indices to test for generation")->delimiter(',');

    auto* isocheck = app.add_subcommand("isocheck", "decide M_p ~ M_q as Hecke modules");
    isocheck->add_option("p", p)->required();
    isocheck->add_option("q", q)->required();
    isocheck->add_flag("--dual", dual, "compare M_p with its dual instead");
    isocheck->add_option("--gens", gens, "Z-basis indices used for the freeness test")->delimiter(',');
    isocheck->add_option("--out", outPath, "certificate file");

    auto* ogg = app.add_subcommand("ogg", "predicted kernel and Eisenstein primes");
    ogg->add_option("p", p)->required();
    ogg->add_option("q", q)->required();
    ogg->add_flag("--iso", iso, "also run isocheck to feed the report");

    auto* det = app.add_subcommand("detect", "counterexample criteria for a curve at (p, ell)");
    det->add_option("curve", curve, "curve JSON file or bundled label (701a, 571b1)")->required();
    det->add_option("p", p)->required();
    det->add_option("ell", ell)->required();
    det->add_flag("--assert-irreducible", assertIrreducible, "take E[ell] irreducible as given");

    auto* verify = app.add_subcommand("verify", "re-check a certificate against cached Brandt data");
    verify->add_option("certificate", certFile)->required();

    std::vector<std::string> argvStore{"ogglab"};
    argvStore.insert(argvStore.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argvStore) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (brandt->parsed()) return cmdBrandt(cfg, p, q, nMax, out);
        if (hecke->parsed()) return cmdHecke(cfg, p, q, gens, out);
        if (isocheck->parsed()) return cmdIsoCheck(cfg, p, q, dual, gens, outPath, out);
        if (ogg->parsed()) return cmdOgg(cfg, p, q, iso, out);
        if (det->parsed()) return cmdDetect(cfg, curve, p, ell, assertIrreducible, out);
        if (verify->parsed()) return cmdVerify(cfg, certFile, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MissingCache& e) {
        err << "error: " << e.what() << "\n";
        return kExitMissingCache;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const BadReduction& e) {
        err << "bad reduction: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitUsage;
}

}  // namespace ogglab
