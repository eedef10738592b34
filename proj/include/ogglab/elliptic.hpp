#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogglab/bigint.hpp"
#include "ogglab/polynomial.hpp"

namespace ogglab {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z.
struct WeierstrassCurve {
    Integer a1, a2, a3, a4, a6;

    WeierstrassCurve() = default;
    WeierstrassCurve(Integer a1_, Integer a2_, Integer a3_, Integer a4_, Integer a6_);

    Integer b2() const;
    Integer b4() const;
    Integer b6() const;
    Integer b8() const;
    Integer discriminant() const;
    std::string toString() const;
};

/// Validates the coefficients and a nonzero discriminant.
WeierstrassCurve makeCurve(const std::vector<Integer>& coeffs);

struct PointCount {
    Integer count;  ///< including the point at infinity
    Integer trace;  ///< p + 1 - count
};

/// Throws BadReduction when p divides the discriminant.
PointCount reduceAndCount(const WeierstrassCurve& e, long p);

/// Number of points P in E(F_p) with [n] P = O.
long torsionCount(const WeierstrassCurve& e, long p, long n);

/// (d1, d2) with E(F_p) ~ Z/d1 x Z/d2 and d1 | d2.
std::pair<Integer, Integer> groupStructure(const WeierstrassCurve& e, long p);

/// Quadratic twist by the least non-residue mod p, written with coefficients in [0, p).
/// Only odd p are supported.
WeierstrassCurve quadraticTwist(const WeierstrassCurve& e, long p);

struct ScalarFrobenius {
    bool plus = false;   ///< E[ell] is F_p-rational
    bool minus = false;  ///< E[ell] of the twist is F_p-rational
};

ScalarFrobenius scalarFrobenius(const WeierstrassCurve& e, long p, long ell);

/// trace == +-(p + 1) mod ell.
bool newnessCongruence(const Integer& trace, long p, long ell);

/// 3 psi_3 coefficients, low degree first: 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
IntPoly divisionPolynomial3(const WeierstrassCurve& e);

/// True when psi_3 has no rational root and no quadratic factor over Q, which rules
/// out a rational 3-isogeny. False only means "not shown".
bool mod3IrreducibleSufficient(const WeierstrassCurve& e);

struct FrobeniusReport {
    long p = 0;
    long ell = 0;
    Integer pointCount;
    Integer traceAp;
    Integer d1, d2;
    bool scalarPlus = false;
    bool scalarMinus = false;
    bool newnessCongruence = false;
    std::optional<bool> mod3IrreducibleSufficient;  ///< computed only for ell = 3
    bool irreducibleAsserted = false;
    bool candidate = false;
    std::vector<std::string> unprovedHypotheses;
    std::vector<std::string> citedFacts;
};

/// Runs the chain of tests. For ell != 3 irreducibility of E[ell] is not
/// computed; pass irreducibleAsserted = true to take it as given.
FrobeniusReport detect(const WeierstrassCurve& e, long p, long ell, bool irreducibleAsserted = false);

}  // namespace ogglab

namespace ogglab {

/// Curves shipped with the library, together with the (p, ell) they are used at.
struct BundledCurve {
    std::string label;
    long conductor;
    std::vector<long> coefficients;
    long p;
    long ell;
};

const std::vector<BundledCurve>& bundledCurves();
const BundledCurve* findBundledCurve(const std::string& label);

}  // namespace ogglab
