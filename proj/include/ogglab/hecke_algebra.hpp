#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogglab/int_matrix.hpp"
#include "ogglab/lattice.hpp"

namespace ogglab {

/// ceil(index of Gamma_0(pq) in SL_2(Z) / 6).
long sturmBound(long p, long q);

/// Commutative matrix algebra spanned over Z by a family of Hecke matrices.
struct HeckeAlgebra {
    long p = 0;
    long q = 0;
    std::size_t dimension = 0;           ///< size of the matrices
    std::map<long, IntMatrix> operators;  ///< S_n, n <= bound
    long bound = 0;
    Lattice span{0};                      ///< flattened matrices, HNF basis
    std::vector<IntMatrix> basis;

    std::size_t rank() const { return basis.size(); }
    /// Coordinates of a matrix in `basis`, if it lies in the algebra.
    std::optional<IntVector> coordinates(const IntMatrix& m) const;
    const IntMatrix& op(long n) const;
};

/// Z-span of {S_n : n <= bound}. Throws NonCommuting if two of them fail to commute.
HeckeAlgebra buildHeckeAlgebra(const std::map<long, IntMatrix>& operators, long bound,
                               long p = 0, long q = 0);

struct GenerationResult {
    bool generates = false;
    /// Lattice index of the subspan; empty when the subspan has lower rank.
    std::optional<Integer> index;
};

GenerationResult generationCheck(const HeckeAlgebra& algebra, const std::vector<long>& indices);

/// Smallest list of indices, starting with 1, whose operators form a Z-basis of
/// the algebra: greedy by rank first, then the first generating subset in
/// lexicographic order. Empty when no subset of supplied operators is a Z-basis.
std::vector<long> chooseGenerators(const HeckeAlgebra& algebra);

/// det(Tr(b_i b_j)) on the Z-basis.
Integer discriminant(const HeckeAlgebra& algebra);

enum class EisensteinVariant { PlainE, MPlusMinus, MMinusPlus };

struct EisensteinData {
    EisensteinVariant variant = EisensteinVariant::PlainE;
    long ell = 0;
    std::vector<std::string> generatorNames;
    std::vector<IntMatrix> generators;
    /// Invariant factors of T / I other than 1; a 0 stands for a copy of Z.
    IntVector invariantFactors;
    /// True when T / I is the field with ell elements.
    bool maximal = false;

    Integer order() const;  ///< 0 when infinite
};

/// T modulo the Eisenstein ideal (PlainE) or modulo m = (T_p +- 1, T_q -+ 1, E, ell).
EisensteinData eisensteinQuotient(const HeckeAlgebra& algebra, EisensteinVariant variant,
                                  long ell = 0);

/// ell-parts of a list of cyclic orders, dropping trivial ones.
IntVector primaryParts(const IntVector& orders, long ell);
/// Part of n prime to 6.
Integer awayFrom6(Integer n);

}  // namespace ogglab
