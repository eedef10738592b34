#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "level65_reference.hpp"
#include "ogglab/brandt.hpp"
#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"
#include "ogglab/hecke_algebra.hpp"
#include "ogglab/ogg_predictor.hpp"
#include "oracles.hpp"

using namespace ogglab;

namespace {

std::map<long, IntMatrix> cuspidalOperators(long p, long q, long upTo) {
    static std::map<std::pair<long, long>, BrandtModule> modules;
    auto it = modules.find({p, q});
    if (it == modules.end()) it = modules.emplace(std::make_pair(p, q), BrandtModule::build(p, q)).first;
    std::map<long, IntMatrix> ops;
    for (long n = 1; n <= upTo; ++n) ops[n] = it->second.cuspidalHecke(n);
    return ops;
}

HeckeAlgebra algebraAt(long p, long q) {
    long b = sturmBound(p, q);
    return buildHeckeAlgebra(cuspidalOperators(p, q, b), b, p, q);
}

Integer traceGramDet(const std::vector<IntMatrix>& basis) {
    IntMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Integer t = 0;
            IntMatrix prod = basis[i] * basis[j];
            for (std::size_t k = 0; k < prod.rows(); ++k) t += prod(k, k);
            g(i, j) = t;
        }
    return oracle::cofactorDet(g);
}

}  // namespace

TEST_CASE("sturm bound") {
    CHECK(sturmBound(5, 13) == 14);
    CHECK(sturmBound(2, 3) == 2);
    for (auto [p, q] : std::vector<std::pair<long, long>>{{7, 13}, {5, 13}, {2, 3}, {11, 193}, {3, 7}}) {
        Rational index = Rational(p * q) * Rational(p + 1, p) * Rational(q + 1, q);
        Rational sixth = index / 6;
        Integer ceil = sixth.get_num() / sixth.get_den();
        if (ceil * sixth.get_den() != sixth.get_num()) ceil += 1;
        CHECK(Integer(sturmBound(p, q)) == ceil);
    }
    CHECK(sturmBound(7, 13) == 19);
}

TEST_CASE("build algebra") {
    HeckeAlgebra alg = algebraAt(5, 13);
    CHECK(alg.rank() == 5);
    CHECK(alg.dimension == 5);

    HeckeAlgebra single = buildHeckeAlgebra({{1, IntMatrix::identity(5)}}, 1);
    CHECK(single.rank() == 1);

    std::map<long, IntMatrix> gens;
    for (long n : reference::kGeneratorIndices) gens[n] = alg.op(n);
    HeckeAlgebra fromGens = buildHeckeAlgebra(gens, 14, 5, 13);
    CHECK(fromGens.span == alg.span);

    std::map<long, IntMatrix> bad{{1, IntMatrix::identity(2)}, {2, {{0, 1}, {0, 0}}}, {3, {{0, 0}, {1, 0}}}};
    CHECK_THROWS_AS(buildHeckeAlgebra(bad, 3), NonCommuting);
}

TEST_CASE("generation check") {
    HeckeAlgebra alg = algebraAt(5, 13);
    auto g = generationCheck(alg, reference::kGeneratorIndices);
    CHECK(g.generates);
    REQUIRE(g.index.has_value());
    CHECK(*g.index == 1);

    auto one = generationCheck(alg, {1});
    CHECK_FALSE(one.generates);
    CHECK_FALSE(one.index.has_value());

    CHECK(generationCheck(alg, {1, 2, 3, 5, 7, 11, 13}).generates);

    auto chosen = chooseGenerators(alg);
    REQUIRE(!chosen.empty());
    CHECK(chosen.front() == 1);
    CHECK(chosen.size() == 5);
    CHECK(generationCheck(alg, chosen).generates);
}

TEST_CASE("discriminant") {
    HeckeAlgebra single = buildHeckeAlgebra({{1, IntMatrix::identity(5)}}, 1);
    CHECK(discriminant(single) == 5);

    HeckeAlgebra alg = algebraAt(5, 13);
    Integer d = discriminant(alg);
    CHECK(d == 6144);
    // {T_1, T_2, T_3, T_5, T_11} is another Z-basis, so the Gram determinant agrees.
    std::vector<IntMatrix> other;
    for (long n : reference::kGeneratorIndices) other.push_back(alg.op(n));
    CHECK(traceGramDet(other) == d);
    CHECK(traceGramDet(reference::level65Family()) == d);
}

TEST_CASE("eisenstein quotients at level 65") {
    HeckeAlgebra alg = algebraAt(5, 13);
    auto plain = eisensteinQuotient(alg, EisensteinVariant::PlainE);
    CHECK(plain.invariantFactors == IntVector{84});
    CHECK(awayFrom6(plain.order()) == 7);

    auto m7 = eisensteinQuotient(alg, EisensteinVariant::MMinusPlus, 7);
    CHECK(m7.maximal);
    CHECK(m7.invariantFactors == IntVector{7});
    CHECK(m7.generatorNames.back() == "7");

    auto m11 = eisensteinQuotient(alg, EisensteinVariant::MMinusPlus, 11);
    CHECK_FALSE(m11.maximal);
    CHECK(m11.invariantFactors.empty());
    CHECK(m11.order() == 1);

    // Residue characteristics 2 and 3, recorded.
    CHECK(eisensteinQuotient(alg, EisensteinVariant::MMinusPlus, 2).invariantFactors == IntVector{2});
    CHECK(eisensteinQuotient(alg, EisensteinVariant::MPlusMinus, 2).invariantFactors == IntVector{2});
    CHECK(eisensteinQuotient(alg, EisensteinVariant::MPlusMinus, 3).invariantFactors == IntVector{3});
    CHECK(eisensteinQuotient(alg, EisensteinVariant::MPlusMinus, 7).invariantFactors.empty());
}

TEST_CASE("property: span is stable past the Sturm bound") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 13}, {3, 7}, {13, 5}}) {
        long b = sturmBound(p, q);
        auto ops = cuspidalOperators(p, q, 2 * b);
        HeckeAlgebra a1 = buildHeckeAlgebra(ops, b, p, q);
        HeckeAlgebra a2 = buildHeckeAlgebra(ops, 2 * b, p, q);
        CHECK(a1.span == a2.span);
        for (const auto& [n, m] : ops) CHECK(a1.coordinates(m).has_value());
    }
}

TEST_CASE("property: algebra rank equals cuspidal rank and acts faithfully") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 13}, {3, 7}, {13, 5}, {2, 13}, {11, 2}}) {
        CAPTURE(p);
        CAPTURE(q);
        HeckeAlgebra alg = algebraAt(p, q);
        CHECK(alg.rank() == alg.dimension);
        IntMatrix flat(0, alg.dimension * alg.dimension);
        for (const auto& b : alg.basis) flat.appendRow(b.flatten());
        CHECK(rank(flat) == alg.rank());
        for (const auto& x : alg.basis)
            for (const auto& y : alg.basis) {
                CHECK(x * y == y * x);
                CHECK(alg.coordinates(x * y).has_value());
            }
    }
}

TEST_CASE("property: eisenstein quotient away from 6 matches the cuspidal group") {
    // (2, 11) itself has no 2-new forms, so the check runs on the other side of J_0(22).
    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 13}, {3, 7}, {11, 2}, {13, 5}, {7, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        HeckeAlgebra alg = algebraAt(p, q);
        auto e = eisensteinQuotient(alg, EisensteinVariant::PlainE);
        IntVector c = groupOrders(p, q).cuspidalShape;
        std::set<long> primes;
        for (const auto& n : c)
            for (const auto& l : primeDivisors(n))
                if (l >= 5) primes.insert(l.get_si());
        for (const auto& n : e.invariantFactors) {
            REQUIRE(n != 0);
            for (const auto& l : primeDivisors(n))
                if (l >= 5) primes.insert(l.get_si());
        }
        for (long l : primes) {
            auto ours = primaryParts(e.invariantFactors, l);
            auto expected = primaryParts(c, l);
            std::sort(ours.begin(), ours.end());
            std::sort(expected.begin(), expected.end());
            CAPTURE(l);
            CHECK(ours == expected);
        }
    }
}

TEST_CASE("degenerate level: (2, 11) has no cuspidal part") {
    auto ops = cuspidalOperators(2, 11, sturmBound(2, 11));
    CHECK(ops.at(1).rows() == 0);
}

TEST_CASE("primary parts and away from 6") {
    CHECK(primaryParts({48, 72, 56}, 7) == IntVector{7});
    CHECK(primaryParts({48, 72, 56}, 2) == IntVector{16, 8, 8});
    CHECK(awayFrom6(84) == 7);
    CHECK(awayFrom6(0) == 0);
}
