#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ogglab/int_matrix.hpp"
#include "ogglab/lattice.hpp"
#include "ogglab/quaternion.hpp"

namespace ogglab {

/// Eichler order of level q in the definite algebra of discriminant p.
struct EichlerOrder {
    long p = 0;
    long q = 0;
    QuaternionAlgebra algebra{-1, -1};
    QLattice maximal;
    QLattice order;
};

EichlerOrder buildEichlerOrder(long p, long q);

/// Sum over right ideal classes of 1 / #(units of the left order),
/// which equals (p - 1)(q + 1) / 24.
Rational eichlerMass(long p, long q);

/// Right ideal class representatives with their unit data.
struct IdealClassSet {
    std::vector<QLattice> ideals;
    std::vector<Rational> norms;
    /// Half the number of units of the left order.
    std::vector<long> weights;
    /// trd(e_a * conj(e_b)) / nrd(I) on each ideal's basis.
    std::vector<IntMatrix> grams;

    std::size_t size() const { return ideals.size(); }
    /// Sum of 1 / (2 w_i).
    Rational mass() const;
};

/// Half the number of reduced-norm-one elements of an order.
long unitHalfOrder(const QuaternionAlgebra& alg, const QLattice& order);

/// I ~ J iff I * conj(J) represents nrd(I) * nrd(J) by the reduced norm.
bool isEquivalent(const QuaternionAlgebra& alg, const QLattice& i, const Rational& normI,
                  const QLattice& j, const Rational& normJ);

/// Right ideals K of the given order with I > K > rI and nrd(K) = r nrd(I).
std::vector<QLattice> neighbors(const QuaternionAlgebra& alg, const QLattice& order,
                                const QLattice& ideal, const Rational& norm, long r);

/// Breadth-first search over r-neighbours until the mass formula closes.
/// Throws BudgetExceeded if more than `budget` ideals get expanded.
IdealClassSet enumerateClasses(const EichlerOrder& order, std::size_t budget = 20000);

/// Brandt module of an Eichler order of level q in the algebra ramified at p.
///
/// Entry (i, j) of B(n) counts the sub-ideals K of I_i with nrd(K) = n nrd(I_i)
/// that lie in class j, so rows sum to sigma_1(n) when gcd(n, pq) = 1 and the
/// module acts on row vectors. For the level prime q, T_q is taken to be
/// -W_q, where W_q is the permutation induced by the two-sided prime over q;
/// this is U_q on the q-new part of the module.
class BrandtModule {
public:
    BrandtModule(EichlerOrder order, IdealClassSet classes);
    static BrandtModule build(long p, long q);

    long p() const { return order_.p; }
    long q() const { return order_.q; }
    const EichlerOrder& order() const { return order_; }
    const IdealClassSet& classes() const { return classes_; }
    std::size_t classCount() const { return classes_.size(); }

    IntMatrix brandtMatrix(long n) const;
    /// Permutation matrix of I -> I * P for the two-sided prime P over l | pq.
    IntMatrix atkinLehner(long l) const;

    /// Coefficients of the degree map whose kernel is the cuspidal lattice.
    const IntVector& degreeFunctional() const { return degree_; }
    const Lattice& cuspidalBasis() const { return cuspidal_; }
    std::size_t cuspidalRank() const { return cuspidal_.rank(); }
    /// B(n) restricted to the cuspidal lattice, in its stored HNF basis.
    IntMatrix cuspidalHecke(long n) const;

    /// Every B(n) computed so far.
    std::map<long, IntMatrix> computedMatrices() const;
    /// Pre-load a matrix (from a cache). It is trusted as-is.
    void seedMatrix(long n, const IntMatrix& m) const;

private:
    IntMatrix countedMatrix(long n) const;
    void ensureTheta(long bound) const;
    long classOf(const QLattice& ideal, const Rational& norm) const;

    EichlerOrder order_;
    IdealClassSet classes_;
    IntVector degree_;
    Lattice cuspidal_;
    std::map<long, IntMatrix> atkinLehner_;

    std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
    mutable long thetaBound_ = 0;
    mutable std::vector<std::vector<std::vector<Integer>>> theta_;
    mutable std::map<long, IntMatrix> hecke_;
};

}  // namespace ogglab
