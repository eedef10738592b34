#include "ogglab/ogg_predictor.hpp"

#include <algorithm>
#include <sstream>

#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"

namespace ogglab {

const std::vector<long>& oggPrimes() {
    static const std::vector<long> primes = {2, 3, 5, 7, 13};
    return primes;
}

bool isOggPrime(long p) {
    const auto& ps = oggPrimes();
    return std::find(ps.begin(), ps.end(), p) != ps.end();
}

Integer numeratorM(long q) {
    Rational r(Integer(q + 1), Integer(12));
    r.canonicalize();
    return r.get_num();
}

IntVector normalizeCyclic(const IntVector& orders) {
    if (orders.empty()) return {};
    auto s = snf(IntMatrix::diagonal(orders));
    IntVector out;
    for (const auto& d : s.diag)
        if (d != 1) out.push_back(d);
    return out;
}

Integer OggPrediction::kernelOrder() const {
    Integer n = 1;
    for (const auto& d : kernelShape) n *= d;
    return n;
}

OggPrediction predictedKernel(long p, long q) {
    if (!isOggPrime(p)) throw NotApplicable("the prediction only covers p in {2, 3, 5, 7, 13}");
    if (!isPrime(q) || q == p) throw InvalidInput("q must be a prime different from p");
    OggPrediction out;
    out.p = p;
    out.q = q;
    out.M = numeratorM(q);
    out.applicable = true;
    if (p == 7)
        out.kernelShape = normalizeCyclic({2 * out.M});
    else if (p == 13)
        out.kernelShape = normalizeCyclic({Integer(7), out.M});
    else
        out.kernelShape = normalizeCyclic({out.M});
    return out;
}

GroupOrders groupOrders(long p, long q) {
    GroupOrders g;
    const Integer pm(p - 1), pp(p + 1), qm(q - 1), qp(q + 1);
    g.cuspidalShape = {pm * qm, pp * qm, pm * qp};
    g.shimuraOrder = pm * qm;
    g.phiQOrder = qm;
    g.shimuraCurveComponentOrder = isOggPrime(p) ? qp : Integer(0);
    return g;
}

std::string toString(EisensteinCondition c) {
    switch (c) {
        case EisensteinCondition::PPlusOne: return "p+1";
        case EisensteinCondition::QPlusOne: return "q+1";
        case EisensteinCondition::Neither: return "neither";
    }
    return "neither";
}

EisensteinPrimeReport classifyEisensteinPrime(long p, long q, long ell) {
    if (!isPrime(ell)) throw InvalidInput("ell must be prime");
    EisensteinPrimeReport r;
    r.ell = ell;
    auto divides = [ell](long n) { return n % ell == 0; };
    const std::string e = std::to_string(ell), sp = std::to_string(p), sq = std::to_string(q);
    if (divides(p + 1) && !divides(q - 1) && !divides(q + 1)) {
        r.condition = EisensteinCondition::PPlusOne;
        r.idealGenerators = "(T_" + sp + " + 1, T_" + sq + " - 1, E, " + e + ")";
    } else if (divides(q + 1) && !divides(p - 1) && !divides(p + 1)) {
        r.condition = EisensteinCondition::QPlusOne;
        r.idealGenerators = "(T_" + sp + " - 1, T_" + sq + " + 1, E, " + e + ")";
    }
    r.theoremApplies = ell >= 5 && r.condition != EisensteinCondition::Neither;
    return r;
}

std::vector<EisensteinPrimeReport> eisensteinPrimes(long p, long q) {
    std::vector<long> ells;
    for (long n : {p - 1, p + 1, q - 1, q + 1})
        for (const auto& d : primeDivisors(Integer(n)))
            if (long l = d.get_si(); l >= 5 && std::find(ells.begin(), ells.end(), l) == ells.end())
                ells.push_back(l);
    std::sort(ells.begin(), ells.end());
    std::vector<EisensteinPrimeReport> out;
    for (long l : ells) out.push_back(classifyEisensteinPrime(p, q, l));
    return out;
}

ValuationHypotheses valuationHypotheses(long ell, long l1, long l2, long m) {
    ValuationHypotheses h;
    const Integer e(ell);
    h.firstValuation = valuation(Integer(l1) * l1 - 1, e) == m - 1;
    h.secondValuation = valuation(Integer(l2) * l2 - 1, e) == 0;
    h.firstCoprime = (Integer(l1) * (l1 - 1)) % ell != 0;
    h.secondCoprime = (Integer(l2) * (l2 - 1)) % ell != 0;
    return h;
}

std::string StrategyReport::text() const {
    std::ostringstream os;
    for (const auto& h : hypotheses) os << "hypothesis: " << h << "\n";
    for (const auto& a : assumptions) os << "assumption (not checked): " << a << "\n";
    for (const auto& c : citedFacts) os << "cited: " << c << "\n";
    os << "conclusion: " << conclusion << "\n";
    return os.str();
}

StrategyReport strategyReport(bool haveIsoCertificate, long p, long q, long ell) {
    StrategyReport r;
    const std::string sp = std::to_string(p), sq = std::to_string(q), se = std::to_string(ell);
    if (ell < 5) {
        r.conclusion = "ell = " + se + " is outside the theorem's scope (ell >= 5); no conclusion";
        return r;
    }
    r.hypotheses.push_back(std::string("M_") + sp + "(J^new) ~ M_" + sq + "(J^new) as T-modules: " +
                           (haveIsoCertificate ? "certified" : "not certified"));
    auto cls = classifyEisensteinPrime(p, q, ell);
    r.hypotheses.push_back(cls.condition == EisensteinCondition::Neither
                               ? "ell = " + se + " satisfies neither congruence condition (fails)"
                               : "ell = " + se + " satisfies the " + toString(cls.condition) + " condition");
    r.hypotheses.push_back("pi is a T-equivariant isogeny J^new -> J' of minimal degree: taken as given");
    r.assumptions.push_back("J^new / J^new[m] ~ J^new");
    r.citedFacts.push_back("vanishing of the Selmer groups S^Sigma(Q, W_m) (cited, not computed)");
    r.citedFacts.push_back("the ideal of reducibility of the universal deformation ring R is its maximal "
                           "ideal, so no trace-reducible lift of J[m] to T/m^2 exists (cited, not computed)");
    if (!haveIsoCertificate) {
        r.conclusion = "the character-group isomorphism is unverified, so no conclusion is drawn";
        return r;
    }
    if (cls.condition == EisensteinCondition::Neither) {
        r.conclusion = "ell = " + se + " satisfies neither congruence condition; no conclusion";
        return r;
    }
    r.concluded = true;
    r.conclusion = "the " + se + "-primary part of ker(pi) is contained in C[" + se + "] ~ Z/" + se +
                   ", with m = " + cls.idealGenerators;
    return r;
}

std::vector<CandidateLevel> counterexampleCandidates(long p, long qLow, long qHigh) {
    if (!isOggPrime(p)) throw NotApplicable("the prediction only covers p in {2, 3, 5, 7, 13}");
    std::vector<CandidateLevel> out;
    for (long q = std::max(2L, qLow); q <= qHigh; ++q) {
        if (q == p || !isPrime(q)) continue;
        auto pred = predictedKernel(p, q);
        CandidateLevel c;
        c.q = q;
        c.M = pred.M;
        c.kernelShape = pred.kernelShape;
        c.guidance = "need an elliptic curve of conductor " + std::to_string(q) +
                     " with irreducible E[ell] and Frob_" + std::to_string(p) +
                     " acting by +-1 on E[ell]";
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ogglab
