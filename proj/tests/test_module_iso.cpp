#include <doctest.h>

#include <map>
#include <random>

#include "level65_reference.hpp"
#include "ogglab/brandt.hpp"
#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"
#include "ogglab/hecke_algebra.hpp"
#include "ogglab/module_iso.hpp"
#include "oracles.hpp"

using namespace ogglab;

namespace {

const BrandtModule& module(long p, long q) {
    static std::map<std::pair<long, long>, BrandtModule> cache;
    auto it = cache.find({p, q});
    if (it == cache.end()) it = cache.emplace(std::make_pair(p, q), BrandtModule::build(p, q)).first;
    return it->second;
}

std::vector<IntMatrix> family(long p, long q, const std::vector<long>& indices) {
    std::vector<IntMatrix> out;
    for (long n : indices) out.push_back(module(p, q).cuspidalHecke(n));
    return out;
}

std::vector<long> upTo(long bound) {
    std::vector<long> out;
    for (long n = 1; n <= bound; ++n) out.push_back(n);
    return out;
}

IntMatrix inverseOfUnimodular(const IntMatrix& u) {
    // The HNF of a unimodular matrix is the identity, so its transform is the inverse.
    auto h = hnfWithTransform(u);
    REQUIRE(h.form == IntMatrix::identity(u.rows()));
    return h.transform;
}

/// Cyclic commuting family {I, M, M^2 - 2M} for a random M.
std::vector<IntMatrix> randomFamily(std::mt19937_64& rng, std::size_t n) {
    IntMatrix m = oracle::randomMatrix(rng, n, n, -3, 3);
    return {IntMatrix::identity(n), m, m * m - m * Integer(2)};
}

std::vector<IntMatrix> conjugate(const std::vector<IntMatrix>& s, const IntMatrix& u) {
    IntMatrix inv = inverseOfUnimodular(u);
    std::vector<IntMatrix> out;
    for (const auto& m : s) out.push_back(inv * m * u);
    return out;
}

}  // namespace

TEST_CASE("hom lattice") {
    auto m5 = family(5, 13, reference::kGeneratorIndices);
    CHECK(homLattice(m5, m5).rank() == 5);
    CHECK(homLattice({IntMatrix::identity(3)}, {IntMatrix::identity(3)}).rank() == 9);
    HomLattice h = homLattice(m5, family(13, 5, reference::kGeneratorIndices));
    CHECK(h.rank() == 5);
    for (const auto& x : h.basis)
        for (std::size_t k = 0; k < m5.size(); ++k)
            CHECK(m5[k] * x == x * family(13, 5, reference::kGeneratorIndices)[k]);
}

TEST_CASE("rational isomorphism test") {
    auto m5 = family(5, 13, reference::kGeneratorIndices);
    auto r = rationalIsoTest(m5, m5);
    CHECK(r.decided);
    CHECK(r.isomorphic);
    CHECK(verifyCertificate(m5, m5, IntMatrix::identity(5)));

    auto mismatch = rationalIsoTest({IntMatrix{{2}}}, {IntMatrix{{3}}});
    CHECK(mismatch.decided);
    CHECK_FALSE(mismatch.isomorphic);
    REQUIRE(mismatch.mismatch.has_value());
    CHECK((mismatch.mismatch->kind == ObstructionKind::RationalMismatch));
}

TEST_CASE("level 65 isomorphism certificate") {
    auto m5 = family(5, 13, reference::kGeneratorIndices);
    auto m13 = family(13, 5, reference::kGeneratorIndices);
    auto result = findUnimodular(homLattice(m5, m13));
    REQUIRE(std::holds_alternative<IsoCertificate>(result));
    const auto& cert = std::get<IsoCertificate>(result);
    CHECK(abs(cert.determinant) == 1);
    long b = sturmBound(5, 13);
    CHECK(verifyCertificate(family(5, 13, upTo(b)), family(13, 5, upTo(b)), cert.witness));

    IntMatrix perturbed = cert.witness;
    perturbed(0, 0) += 1;
    CHECK_FALSE(verifyCertificate(m5, m13, perturbed));
}

TEST_CASE("dual module obstruction") {
    auto m5 = family(5, 13, reference::kGeneratorIndices);
    HomLattice h = homLattice(m5, transposed(m5));
    auto result = findUnimodular(h);
    REQUIRE(std::holds_alternative<Obstruction>(result));
    const auto& o = std::get<Obstruction>(result);
    CHECK((o.kind == ObstructionKind::LocalDetObstruction));
    CHECK(o.prime == 2);
    CHECK(o.pointsChecked == 32);

    // Spot check of the exhaustive proof on 10000 random lattice elements.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-40, 40);
    for (int t = 0; t < 10000; ++t) {
        std::vector<long> coeffs(h.rank());
        for (auto& x : coeffs) x = c(rng);
        Integer d = det(h.combination(coeffs));
        REQUIRE(d % 2 == 0);
    }
    CHECK(detVanishesModPrime(h.basis, 2) == std::optional<bool>(true));
    CHECK(detVanishesModPrime(h.basis, 3) == std::optional<bool>(false));

    auto free = freenessTest(transposed(m5));
    REQUIRE(std::holds_alternative<Obstruction>(free));
    CHECK((std::get<Obstruction>(free).kind == ObstructionKind::LocalDetObstruction));
    CHECK(std::get<Obstruction>(free).prime == 2);

    auto free13 = freenessTest(transposed(reference::level65Family()));
    REQUIRE(std::holds_alternative<Obstruction>(free13));
    CHECK(std::get<Obstruction>(free13).prime == 2);
}

TEST_CASE("identity hom lattice") {
    HomLattice h;
    h.sourceRank = h.targetRank = 3;
    h.basis = {IntMatrix::identity(3)};
    auto r = findUnimodular(h);
    REQUIRE(std::holds_alternative<IsoCertificate>(r));
    CHECK(std::get<IsoCertificate>(r).witness == IntMatrix::identity(3));
}

TEST_CASE("freeness test") {
    auto ref = freenessTest(reference::level65Family(), 1);
    REQUIRE(std::holds_alternative<FreenessCertificate>(ref));
    const auto& c = std::get<FreenessCertificate>(ref);
    CHECK(c.vector == IntVector{1, 0, 0, 0, 0});
    CHECK(c.stacked == reference::stackedA());
    CHECK(c.determinant == 1);

    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 13}, {13, 5}}) {
        auto r = freenessTest(family(p, q, reference::kGeneratorIndices), 1);
        REQUIRE(std::holds_alternative<FreenessCertificate>(r));
        const auto& fc = std::get<FreenessCertificate>(r);
        CHECK(abs(fc.determinant) == 1);
        CHECK(abs(det(fc.stacked)) == 1);
    }
    // Recorded: which sign shows up in our own bases.
    CHECK(std::get<FreenessCertificate>(freenessTest(family(5, 13, reference::kGeneratorIndices), 1)).determinant == -1);
    CHECK(std::get<FreenessCertificate>(freenessTest(family(13, 5, reference::kGeneratorIndices), 1)).determinant == 1);

    CHECK_THROWS_AS(freenessTest(family(5, 13, {1, 2, 3, 5})), GeneratorCountMismatch);
}

TEST_CASE("conjugacy check") {
    IntMatrix a{{0, 1}, {-1, 0}};
    auto same = conjugacyCheck(a, a);
    REQUIRE(std::holds_alternative<IsoCertificate>(same));
    CHECK(abs(std::get<IsoCertificate>(same).determinant) == 1);

    // Oracle: exhaustive search over 2x2 matrices with entries in [-2, 2].
    IntMatrix b = a.transpose();
    bool bruteFound = false;
    for (long x0 = -2; x0 <= 2 && !bruteFound; ++x0)
        for (long x1 = -2; x1 <= 2 && !bruteFound; ++x1)
            for (long x2 = -2; x2 <= 2 && !bruteFound; ++x2)
                for (long x3 = -2; x3 <= 2 && !bruteFound; ++x3) {
                    IntMatrix x{{x0, x1}, {x2, x3}};
                    Integer d = oracle::cofactorDet(x);
                    if ((d == 1 || d == -1) && a * x == x * b) bruteFound = true;
                }
    CHECK(bruteFound);
    auto r = conjugacyCheck(a, b);
    REQUIRE(std::holds_alternative<IsoCertificate>(r));
    CHECK(verifyCertificate({a}, {b}, std::get<IsoCertificate>(r).witness));

    auto mismatch = conjugacyCheck(IntMatrix{{2}}, IntMatrix{{3}});
    REQUIRE(std::holds_alternative<Obstruction>(mismatch));
    CHECK((std::get<Obstruction>(mismatch).kind == ObstructionKind::RationalMismatch));

    // Equal charpolys x^2 + 5: never a rational mismatch, whatever the integral answer.
    auto classes = conjugacyCheck(IntMatrix{{0, -5}, {1, 0}}, IntMatrix{{1, -3}, {2, -1}}, 3);
    if (auto o = std::get_if<Obstruction>(&classes)) CHECK((o->kind != ObstructionKind::RationalMismatch));
    else CHECK(verifyCertificate({IntMatrix{{0, -5}, {1, 0}}}, {IntMatrix{{1, -3}, {2, -1}}},
                                 std::get<IsoCertificate>(classes).witness));
}

TEST_CASE("property: certificates verify at the Sturm bound") {
    long b = sturmBound(5, 13);
    auto full5 = family(5, 13, upTo(b));
    auto full13 = family(13, 5, upTo(b));
    auto ref = reference::level65Family();
    auto ours = family(5, 13, reference::kGeneratorIndices);
    for (const auto& [s, t] : std::vector<std::pair<std::vector<IntMatrix>, std::vector<IntMatrix>>>{
             {ours, family(13, 5, reference::kGeneratorIndices)}, {ours, ref}, {ours, ours}}) {
        auto r = findUnimodular(homLattice(s, t));
        REQUIRE(std::holds_alternative<IsoCertificate>(r));
        CHECK(verifyCertificate(s, t, std::get<IsoCertificate>(r).witness));
    }
    auto r = findUnimodular(homLattice(full5, full13));
    REQUIRE(std::holds_alternative<IsoCertificate>(r));
    CHECK(verifyCertificate(full5, full13, std::get<IsoCertificate>(r).witness));
}

TEST_CASE("property: hom lattice ranks agree under transposition") {
    std::mt19937_64 rng(11);
    auto m5 = family(5, 13, reference::kGeneratorIndices);
    auto m13 = family(13, 5, reference::kGeneratorIndices);
    CHECK(homLattice(m5, m13).rank() == homLattice(m13, m5).rank());
    CHECK(homLattice(m5, transposed(m5)).rank() == homLattice(transposed(m5), m5).rank());
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + rng() % 3;
        auto s = randomFamily(rng, n);
        auto u = randomFamily(rng, n);
        if (t % 2 == 0) u = conjugate(s, oracle::randomUnimodular(rng, n));
        CHECK(homLattice(s, u).rank() == homLattice(u, s).rank());
    }
}

TEST_CASE("property: certificate composition") {
    std::mt19937_64 rng(13);
    int engineCerts = 0;
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + rng() % 3;
        auto s = randomFamily(rng, n);
        IntMatrix u = oracle::randomUnimodular(rng, n);
        IntMatrix v = oracle::randomUnimodular(rng, n);
        auto s1 = conjugate(s, u);
        auto s2 = conjugate(s1, v);
        IntMatrix x = u, y = v;
        auto rx = findUnimodular(homLattice(s, s1), 2);
        auto ry = findUnimodular(homLattice(s1, s2), 2);
        if (auto c = std::get_if<IsoCertificate>(&rx)) {
            x = c->witness;
            ++engineCerts;
        }
        if (auto c = std::get_if<IsoCertificate>(&ry)) {
            y = c->witness;
            ++engineCerts;
        }
        REQUIRE(verifyCertificate(s, s1, x));
        REQUIRE(verifyCertificate(s1, s2, y));
        CHECK(verifyCertificate(s, s2, x * y));
    }
    CHECK(engineCerts > 0);

    // Level 65: our disc-5 basis -> disc-13 basis -> reference basis.
    auto m5 = family(5, 13, reference::kGeneratorIndices);
    auto m13 = family(13, 5, reference::kGeneratorIndices);
    auto ref = reference::level65Family();
    auto x = std::get<IsoCertificate>(findUnimodular(homLattice(m5, m13))).witness;
    auto y = std::get<IsoCertificate>(findUnimodular(homLattice(m13, ref))).witness;
    CHECK(verifyCertificate(m5, ref, x * y));
}

TEST_CASE("family hash") {
    auto ref = reference::level65Family();
    CHECK(familyHash(ref) == familyHash(reference::level65Family()));
    CHECK(familyHash(ref).size() == 16);
    CHECK(familyHash(ref) != familyHash(transposed(ref)));
}
