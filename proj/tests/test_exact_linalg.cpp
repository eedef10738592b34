#include <doctest.h>

#include <random>

#include "level65_reference.hpp"
#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"
#include "oracles.hpp"

using namespace ogglab;

namespace {

IntPoly fromOracle(const IntMatrix& m) { return IntPoly(oracle::interpolatedCharpoly(m)); }

bool sameRowSpan(const IntMatrix& a, const IntMatrix& b) {
    return Lattice::fromGenerators(a) == Lattice::fromGenerators(b);
}

}  // namespace

TEST_CASE("hnf examples") {
    IntMatrix h = hnf({{2, 4}, {6, 8}});
    CHECK(h == IntMatrix{{2, 0}, {0, 4}});
    // Same lattice both ways, checked with Cramer's rule on the 2x2 bases.
    IntMatrix input{{2, 4}, {6, 8}};
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(oracle::inIntegerRowSpan(input.row(i), h));
        CHECK(oracle::inIntegerRowSpan(h.row(i), input));
    }
    CHECK(abs(oracle::cofactorDet(h)) == 8);

    CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
    IntMatrix zero = hnf(IntMatrix(2, 2));
    CHECK(zero.rows() == 0);
    CHECK(Lattice::fromGenerators(IntMatrix(2, 2)).rank() == 0);
}

TEST_CASE("snf examples") {
    CHECK(snf({{2, 0}, {0, 4}}).diag == IntVector{2, 4});
    auto s = snf({{1, 1}, {1, 1}});
    // gcd of the entries is 1 and the rank is 1.
    CHECK(s.diag == IntVector{1, 0});
    CHECK(s.left * IntMatrix{{1, 1}, {1, 1}} * s.right == IntMatrix::diagonal(s.diag));
    CHECK(snf(IntMatrix::identity(5)).diag == IntVector{1, 1, 1, 1, 1});
}

TEST_CASE("det examples") {
    CHECK(det(reference::stackedA()) == 1);
    CHECK(det(reference::stackedAPrime()) == -1);
    CHECK(oracle::cofactorDet(reference::stackedA()) == 1);
    CHECK(oracle::cofactorDet(reference::stackedAPrime()) == -1);
    CHECK(det(IntMatrix::identity(5)) == 1);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), NonSquareError);
}

TEST_CASE("kernel examples") {
    auto k = kernelLattice({{1}, {1}});
    REQUIRE(k.rank() == 1);
    CHECK(k.contains({1, -1}));
    CHECK(k.basis().row(0) == IntVector{1, -1});

    CHECK(kernelLattice(IntMatrix::identity(3)).rank() == 0);

    // Oracle: 2 v1 + 3 v2 = 0 has primitive solution (3, -2) up to sign.
    auto k2 = kernelLattice({{2, 4}, {3, 6}});
    REQUIRE(k2.rank() == 1);
    IntVector v = k2.basis().row(0);
    CHECK((v == IntVector{3, -2} || v == IntVector{-3, 2}));
    CHECK_FALSE(k2.contains({1, 0}));
}

TEST_CASE("charpoly examples") {
    auto family = reference::level65Family();
    IntPoly s5 = charpoly(family[3]);
    CHECK(s5 == fromOracle(family[3]));
    CHECK(s5 == IntPoly{1, 1, -2, -2, 1, 1});
    for (const auto& m : family) CHECK(charpoly(m) == fromOracle(m));
    CHECK(charpoly(IntMatrix::identity(2)) == IntPoly{1, -2, 1});
    CHECK(charpoly({{0, 1}, {1, 0}}) == IntPoly{-1, 0, 1});
    CHECK_THROWS_AS(charpoly(IntMatrix(1, 2)), NonSquareError);
}

TEST_CASE("property: hnf idempotent and span preserving") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m = oracle::randomMatrix(rng, r, c, -9, 9);
        IntMatrix h = hnf(m);
        CHECK(hnf(h) == h);
        CHECK(h.rows() == rank(m));
        CHECK(sameRowSpan(m, h));
        auto ht = hnfWithTransform(m);
        CHECK(ht.transform * m == ht.form);
        CHECK(abs(det(ht.transform)) == 1);
    }
}

TEST_CASE("property: hnf span preserved, checked by Cramer") {
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 100) {
        std::size_t n = 2 + rng() % 3;
        IntMatrix m = oracle::randomMatrix(rng, n, n, -9, 9);
        if (oracle::cofactorDet(m) == 0) continue;
        IntMatrix h = hnf(m);
        REQUIRE(h.rows() == n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(oracle::inIntegerRowSpan(m.row(i), h));
            CHECK(oracle::inIntegerRowSpan(h.row(i), m));
        }
        Integer pivots = 1;
        for (std::size_t i = 0; i < n; ++i) pivots *= h(i, i);
        CHECK(pivots == abs(oracle::cofactorDet(m)));
        ++checked;
    }
}

TEST_CASE("property: snf reconstruction") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m = oracle::randomMatrix(rng, r, c, -9, 9);
        auto s = snf(m);
        IntMatrix d(r, c);
        for (std::size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
        CHECK(s.left * m * s.right == d);
        CHECK(abs(det(s.left)) == 1);
        CHECK(abs(det(s.right)) == 1);
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
            CHECK(s.diag[i] >= 0);
            if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
            else CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
    }
}

TEST_CASE("property: det agrees with cofactor expansion") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
        IntMatrix m = oracle::randomMatrix(rng, 4, 4, -9, 9);
        CHECK(det(m) == oracle::cofactorDet(m));
    }
}

TEST_CASE("property: charpoly agrees with interpolation") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix m = oracle::randomMatrix(rng, n, n, -5, 5);
        CHECK(charpoly(m) == fromOracle(m));
    }
}

TEST_CASE("property: kernel lattice is saturated and annihilating") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 4;
        IntMatrix m = oracle::randomMatrix(rng, r, c, -4, 4);
        // Force dependencies now and then.
        if (r >= 2 && t % 3 == 0) m.setRow(r - 1, IntVector(m.row(0)));
        Lattice k = kernelLattice(m);
        CHECK(k.rank() == r - rank(m));
        for (std::size_t i = 0; i < k.rank(); ++i) {
            IntVector image = k.basis().row(i) * m;
            for (const auto& x : image) CHECK(x == 0);
        }
        if (k.rank() > 0) {
            auto s = snf(k.basis());
            for (const auto& d : s.diag) CHECK(d == 1);
        }
        CHECK(hnf(k.basis()) == k.basis());
    }
}

TEST_CASE("big entries do not overflow") {
    Integer big("123456789012345678901234567890");
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = 1;
    m(1, 0) = 0;
    m(1, 1) = big;
    CHECK(det(m) == big * big);
    CHECK(det(m) == oracle::cofactorDet(m));
}
