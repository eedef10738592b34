#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ogglab/bigint.hpp"
#include "ogglab/int_matrix.hpp"
#include "ogglab/lattice.hpp"

namespace ogglab {

/// Coordinates (x0, x1, x2, x3) of x0 + x1*i + x2*j + x3*k.
using Quaternion = std::array<Rational, 4>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Hilbert symbol (a, b)_l for nonzero integers a, b and a prime l.
int hilbertSymbol(const Integer& a, const Integer& b, const Integer& l);

/// The algebra with i^2 = a, j^2 = b, ij = -ji = k.
class QuaternionAlgebra {
public:
    QuaternionAlgebra(Integer a, Integer b);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    Quaternion multiply(const Quaternion& x, const Quaternion& y) const;
    Quaternion conjugate(const Quaternion& x) const;
    Rational reducedNorm(const Quaternion& x) const;
    Rational reducedTrace(const Quaternion& x) const;

    bool isDefinite() const { return a_ < 0 && b_ < 0; }
    /// Finite primes where the algebra ramifies, increasing.
    std::vector<Integer> ramifiedPrimes() const;

private:
    Integer a_;
    Integer b_;
};

/// Definite algebra ramified exactly at {p, infinity}. The recipe is
/// re-checked with Hilbert symbols; a failed check throws std::logic_error.
QuaternionAlgebra buildAlgebra(long p);

Quaternion quaternionOne();

/// Full-rank Z-lattice in the algebra: (1/denominator) * rowspan(numerators)
/// in the coordinates 1, i, j, k. Stored in a canonical form, so equal
/// lattices compare equal.
class QLattice {
public:
    QLattice() = default;
    static QLattice fromGenerators(const std::vector<Quaternion>& gens);
    static QLattice fromIntegerBasis(const IntMatrix& numerators, const Integer& denominator);

    const Lattice& numerators() const { return numerators_; }
    const Integer& denominator() const { return denominator_; }
    std::vector<Quaternion> basis() const;
    std::size_t rank() const { return numerators_.rank(); }

    /// |det(basis)| relative to Z<1, i, j, k>.
    Rational covolume() const;
    bool contains(const Quaternion& x) const;
    std::optional<IntVector> coordinates(const Quaternion& x) const;
    QLattice conjugate(const QuaternionAlgebra& alg) const;
    QLattice scaled(const Rational& s) const;

    bool operator==(const QLattice& other) const {
        return denominator_ == other.denominator_ && numerators_ == other.numerators_;
    }

private:
    Lattice numerators_{4};
    Integer denominator_ = 1;
};

QLattice product(const QuaternionAlgebra& alg, const QLattice& x, const QLattice& y);

/// det(trd(e_a * e_b)) on the lattice basis.
Rational discriminant(const QuaternionAlgebra& alg, const QLattice& l);
/// trd(e_a * e_b) for a lattice basis.
RationalMatrix traceForm(const QuaternionAlgebra& alg, const QLattice& l);
/// Gram matrix of x -> nrd(x) / scale in the lattice basis.
RationalMatrix normForm(const QuaternionAlgebra& alg, const QLattice& l, const Rational& scale);
/// Integer matrix trd(e_a * conj(e_b)) / scale; twice the Gram of nrd/scale.
IntMatrix integralNormGram(const QuaternionAlgebra& alg, const QLattice& l, const Rational& scale);

bool isOrder(const QuaternionAlgebra& alg, const QLattice& l);

/// A maximal order, found by saturating Z<1, i, j, k> until |disc| = p^2.
QLattice maximalOrder(const QuaternionAlgebra& alg, long p);

/// {y in order : y * lattice is contained in lattice}.
QLattice leftStabilizer(const QuaternionAlgebra& alg, const QLattice& order, const QLattice& lattice);

/// Eichler order of level q inside the maximal order (q unramified).
QLattice eichlerOrderOfLevel(const QuaternionAlgebra& alg, const QLattice& maximal, long q);

/// Reduced norm of an invertible right ideal of the given right order.
Rational idealNorm(const QLattice& ideal, const QLattice& rightOrder);

/// Left order I * conj(I) / nrd(I) of an invertible ideal.
QLattice leftOrder(const QuaternionAlgebra& alg, const QLattice& ideal, const Rational& norm);

/// Two-sided ideal of an order lying over a prime l dividing its
/// discriminant: the kernel of the trace pairing modulo l.
QLattice twoSidedPrime(const QuaternionAlgebra& alg, const QLattice& order, long l);

Rational rationalDet(RationalMatrix m);

}  // namespace ogglab
