#pragma once

#include <string>
#include <vector>

#include "ogglab/bigint.hpp"

namespace ogglab {

/// Dense integer polynomial, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient list.
struct IntPoly {
    std::vector<Integer> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c);
    IntPoly(std::initializer_list<long> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool isZero() const { return coeffs.empty(); }
    Integer leading() const { return coeffs.empty() ? Integer(0) : coeffs.back(); }
    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    bool operator==(const IntPoly& rhs) const { return coeffs == rhs.coeffs; }

    std::string toString(const char* var = "x") const;
    void trim();
};

/// Polynomial whose roots are the squares of the roots of f, i.e.
/// (-1)^deg f(x) f(-x) rewritten in y = x^2.
IntPoly squaredRootsPoly(const IntPoly& f);

/// Number of distinct real roots of f in the closed interval [lo, hi],
/// computed with a Sturm sequence over the rationals.
long countRealRootsIn(const IntPoly& f, const Rational& lo, const Rational& hi);
/// Number of distinct complex roots of f (degree of its squarefree part).
long distinctRootCount(const IntPoly& f);
/// True iff every complex root of f is real and lies in [lo, hi].
bool allRootsRealIn(const IntPoly& f, const Rational& lo, const Rational& hi);

}  // namespace ogglab
