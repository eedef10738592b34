#pragma once

#include <vector>

#include "ogglab/int_matrix.hpp"
#include "ogglab/lattice.hpp"
#include "ogglab/polynomial.hpp"

namespace ogglab {

struct HnfResult {
    IntMatrix form;       ///< same shape as the input; zero rows at the bottom
    IntMatrix transform;  ///< unimodular U with U * input == form
    std::size_t rank = 0;
};

/// Row Hermite normal form with the transformation tracked.
HnfResult hnfWithTransform(const IntMatrix& m);

/// Row Hermite normal form: upper echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hnf(const IntMatrix& m);

struct SnfResult {
    IntVector diag;  ///< min(rows, cols) entries, each dividing the next (0 last)
    IntMatrix left;
    IntMatrix right;
};

/// Smith normal form: left * m * right == diagonal(diag).
SnfResult snf(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);

/// Saturated left kernel {v : v * m == 0}, basis in HNF.
Lattice kernelLattice(const IntMatrix& m);

/// Monic characteristic polynomial det(xI - m).
IntPoly charpoly(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Lattice {v in Z^n : v * m lies in the row span of target}.
Lattice preimageLattice(const IntMatrix& m, const IntMatrix& target);

}  // namespace ogglab
