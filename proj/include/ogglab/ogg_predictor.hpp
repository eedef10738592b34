#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogglab/bigint.hpp"

namespace ogglab {

/// Primes p for which the component group of the Shimura curve at q is cyclic of order q + 1.
const std::vector<long>& oggPrimes();
bool isOggPrime(long p);

/// Numerator of (q + 1) / 12.
Integer numeratorM(long q);

/// Invariant factors of a direct sum of cyclic groups, trivial factors dropped.
IntVector normalizeCyclic(const IntVector& orders);

struct OggPrediction {
    long p = 0;
    long q = 0;
    Integer M;
    IntVector kernelShape;  ///< invariant factors; empty means the trivial group
    bool applicable = false;

    Integer kernelOrder() const;
};

/// Throws NotApplicable unless p is one of 2, 3, 5, 7, 13.
OggPrediction predictedKernel(long p, long q);

struct GroupOrders {
    IntVector cuspidalShape;  ///< (p-1)(q-1), (p+1)(q-1), (p-1)(q+1)
    Integer shimuraOrder;     ///< (p-1)(q-1)
    Integer phiQOrder;        ///< q - 1
    Integer shimuraCurveComponentOrder;  ///< q + 1, only for p in the Ogg list
    bool upTo2And3 = true;
};

GroupOrders groupOrders(long p, long q);

enum class EisensteinCondition { PPlusOne, QPlusOne, Neither };
std::string toString(EisensteinCondition c);

struct EisensteinPrimeReport {
    long ell = 0;
    EisensteinCondition condition = EisensteinCondition::Neither;
    /// "(T_p + 1, T_q - 1, E, ell)" or the mirrored ideal; empty when neither holds.
    std::string idealGenerators;
    bool theoremApplies = false;
};

/// ell | p+1, ell does not divide q-1 or q+1 (PPlusOne); or the same with p and q swapped (QPlusOne).
EisensteinPrimeReport classifyEisensteinPrime(long p, long q, long ell);

/// Classifies every prime ell >= 5 dividing (p-1)(p+1)(q-1)(q+1).
std::vector<EisensteinPrimeReport> eisensteinPrimes(long p, long q);

struct ValuationHypotheses {
    bool firstValuation = false;   ///< val_ell(l1^2 - 1) == m - 1
    bool secondValuation = false;  ///< val_ell(l2^2 - 1) == 0
    bool firstCoprime = false;     ///< ell does not divide l1 (l1 - 1)
    bool secondCoprime = false;    ///< ell does not divide l2 (l2 - 1)
    bool all() const { return firstValuation && secondValuation && firstCoprime && secondCoprime; }
};

ValuationHypotheses valuationHypotheses(long ell, long l1, long l2, long m);

struct StrategyReport {
    bool concluded = false;
    std::vector<std::string> hypotheses;  ///< checked, each with its status
    std::vector<std::string> assumptions;  ///< not checked by this library
    std::vector<std::string> citedFacts;   ///< quoted from the literature, never computed
    std::string conclusion;
    std::string text() const;
};

/// Assembles the character-group strategy for one prime ell.
StrategyReport strategyReport(bool haveIsoCertificate, long p, long q, long ell);

struct CandidateLevel {
    long q = 0;
    Integer M;
    IntVector kernelShape;
    std::string guidance;
};

/// Primes q in [qLow, qHigh], q != p, with their predicted kernels.
std::vector<CandidateLevel> counterexampleCandidates(long p, long qLow, long qHigh);

}  // namespace ogglab
