#include <doctest.h>

#include <algorithm>

#include "ogglab/errors.hpp"
#include "ogglab/ogg_predictor.hpp"

using namespace ogglab;

TEST_CASE("numerator M") {
    CHECK(numeratorM(13) == 7);
    CHECK(numeratorM(11) == 1);
    CHECK(numeratorM(193) == 97);
    CHECK(numeratorM(5) == 1);
    CHECK(numeratorM(701) == 117);  // 702 / 12 = 117 / 2
}

TEST_CASE("predicted kernel") {
    auto k = predictedKernel(5, 13);
    CHECK(k.applicable);
    CHECK(k.M == 7);
    CHECK(k.kernelShape == IntVector{7});
    CHECK(predictedKernel(7, 11).kernelShape == IntVector{2});
    CHECK(predictedKernel(13, 5).kernelShape == IntVector{7});
    CHECK(predictedKernel(13, 83).kernelShape == IntVector{7, 7});  // M = 7
    CHECK(predictedKernel(2, 3).kernelShape.empty());
    CHECK(predictedKernel(7, 701).kernelShape == IntVector{234});
    CHECK_THROWS_AS(predictedKernel(11, 193), NotApplicable);
}

TEST_CASE("group orders") {
    auto g = groupOrders(5, 13);
    CHECK(g.cuspidalShape == IntVector{48, 72, 56});
    CHECK(g.shimuraOrder == 48);
    CHECK(g.phiQOrder == 12);
    CHECK(g.shimuraCurveComponentOrder == 14);
    CHECK(g.upTo2And3);
    CHECK(groupOrders(2, 3).cuspidalShape == IntVector{2, 6, 4});
    auto swapped = groupOrders(13, 5);
    CHECK(swapped.phiQOrder == 4);
    CHECK(swapped.cuspidalShape == IntVector{48, 56, 72});
    CHECK(groupOrders(11, 193).shimuraCurveComponentOrder == 0);
}

TEST_CASE("eisenstein prime classification") {
    auto r = classifyEisensteinPrime(5, 13, 7);
    CHECK((r.condition == EisensteinCondition::QPlusOne));
    CHECK(r.idealGenerators == "(T_5 - 1, T_13 + 1, E, 7)");
    CHECK(r.theoremApplies);
    CHECK((classifyEisensteinPrime(5, 13, 5).condition == EisensteinCondition::Neither));
    CHECK((classifyEisensteinPrime(11, 193, 97).condition == EisensteinCondition::QPlusOne));
    CHECK((classifyEisensteinPrime(13, 5, 7).condition == EisensteinCondition::PPlusOne));
    CHECK(classifyEisensteinPrime(13, 5, 7).idealGenerators == "(T_13 + 1, T_5 - 1, E, 7)");

    auto all = eisensteinPrimes(5, 13);
    REQUIRE(all.size() == 1);
    CHECK(all[0].ell == 7);
    CHECK((all[0].condition == EisensteinCondition::QPlusOne));

    auto r193 = eisensteinPrimes(11, 193);
    REQUIRE(r193.size() == 2);
    CHECK(r193[0].ell == 5);
    CHECK((r193[0].condition == EisensteinCondition::Neither));
    CHECK(r193[1].ell == 97);
    CHECK((r193[1].condition == EisensteinCondition::QPlusOne));
}

TEST_CASE("valuation hypotheses") {
    CHECK(valuationHypotheses(7, 13, 5, 2).all());
    auto swapped = valuationHypotheses(7, 5, 13, 2);
    CHECK_FALSE(swapped.all());
    CHECK_FALSE(swapped.firstValuation);
    auto third = valuationHypotheses(5, 7, 11, 2);
    CHECK_FALSE(third.firstValuation);  // val_5(48) = 0
    CHECK_FALSE(third.all());
}

TEST_CASE("character group strategy report") {
    auto r = strategyReport(true, 5, 13, 7);
    CHECK(r.concluded);
    CHECK(r.conclusion.find("Z/7") != std::string::npos);
    REQUIRE(r.assumptions.size() == 1);
    CHECK(r.assumptions[0].find("J^new / J^new[m]") != std::string::npos);
    CHECK(r.text().find("assumption (not checked)") != std::string::npos);

    auto none = strategyReport(false, 5, 13, 7);
    CHECK_FALSE(none.concluded);
    CHECK(none.conclusion.find("unverified") != std::string::npos);

    auto small = strategyReport(true, 5, 13, 2);
    CHECK_FALSE(small.concluded);
    CHECK(small.conclusion.find("ell >= 5") != std::string::npos);
}

TEST_CASE("counterexample candidates") {
    auto c7 = counterexampleCandidates(7, 690, 710);
    CHECK(std::any_of(c7.begin(), c7.end(), [](const CandidateLevel& c) { return c.q == 701; }));
    auto c13 = counterexampleCandidates(13, 560, 580);
    CHECK(std::any_of(c13.begin(), c13.end(), [](const CandidateLevel& c) { return c.q == 571; }));
    CHECK(counterexampleCandidates(7, 24, 28).empty());
    CHECK(counterexampleCandidates(7, 10, 5).empty());
    for (const auto& c : counterexampleCandidates(5, 2, 100)) {
        CHECK(isPrime(c.q));
        CHECK(c.q != 5);
    }
}

TEST_CASE("property: kernel order divides q + 1 for p in {2, 3, 5}") {
    for (long p : {2L, 3L, 5L})
        for (long q : primesUpTo(1000)) {
            if (q == p) continue;
            auto k = predictedKernel(p, q);
            CHECK((q + 1) % k.kernelOrder() == 0);
            CHECK(groupOrders(p, q).shimuraCurveComponentOrder % k.kernelOrder() == 0);
        }
}

TEST_CASE("property: eisenstein conditions are exclusive and pick one cuspidal factor") {
    auto primes = primesUpTo(200);
    for (long p : primes)
        for (long q : primes) {
            if (p == q) continue;
            for (long ell : primes) {
                if (ell < 5) continue;
                auto r = classifyEisensteinPrime(p, q, ell);
                bool pPlus = (p + 1) % ell == 0 && (q - 1) % ell != 0 && (q + 1) % ell != 0;
                bool qPlus = (q + 1) % ell == 0 && (p - 1) % ell != 0 && (p + 1) % ell != 0;
                REQUIRE(!(pPlus && qPlus));
                CHECK((r.condition == EisensteinCondition::PPlusOne) == pPlus);
                CHECK((r.condition == EisensteinCondition::QPlusOne) == qPlus);
                if (r.condition == EisensteinCondition::Neither) continue;
                int divisible = 0;
                for (const auto& n : groupOrders(p, q).cuspidalShape)
                    if (n % ell == 0) ++divisible;
                CHECK(divisible == 1);
            }
        }
}

TEST_CASE("normalize cyclic") {
    CHECK(normalizeCyclic({2, 3}) == IntVector{6});
    CHECK(normalizeCyclic({7, 1}) == IntVector{7});
    CHECK(normalizeCyclic({4, 6}) == IntVector{2, 12});
    CHECK(normalizeCyclic({}).empty());
}
