#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ogglab/int_matrix.hpp"
#include "ogglab/polynomial.hpp"

namespace ogglab {

/// Saturated lattice of X with S_n X = X S'_n for every generator pair.
/// A module map is v -> v X on row vectors.
struct HomLattice {
    std::size_t sourceRank = 0;
    std::size_t targetRank = 0;
    std::vector<IntMatrix> basis;

    std::size_t rank() const { return basis.size(); }
    IntMatrix combination(const std::vector<long>& coeffs) const;
};

HomLattice homLattice(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t);

struct IsoCertificate {
    IntMatrix witness;
    Integer determinant;
};

enum class ObstructionKind { RationalMismatch, LocalDetObstruction, Unknown };

struct Obstruction {
    ObstructionKind kind = ObstructionKind::Unknown;
    long prime = 0;   ///< LocalDetObstruction
    long budget = 0;  ///< Unknown
    /// RationalMismatch: index into the generator list and both charpolys.
    std::optional<std::size_t> generatorIndex;
    IntPoly leftCharpoly;
    IntPoly rightCharpoly;
    /// LocalDetObstruction: number of points of F_ell^rank checked.
    Integer pointsChecked = 0;
    std::string detail;
};

std::string toString(ObstructionKind kind);

using IsoResult = std::variant<IsoCertificate, Obstruction>;

struct RationalIsoResult {
    bool isomorphic = false;
    /// False when neither a nonsingular Hom element nor a mismatch was found.
    bool decided = false;
    std::optional<IntMatrix> witness;
    std::optional<Obstruction> mismatch;
};

RationalIsoResult rationalIsoTest(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t);

/// Primes checked by the exhaustive local test.
const std::vector<long>& localObstructionPrimes();

/// Largest ell^rank the local test will enumerate.
inline constexpr std::uint64_t kLocalSearchCap = 50'000'000;

/// True when det(sum c_i X_i) vanishes mod ell for every c in F_ell^rank.
/// Returns nullopt when ell^rank exceeds kLocalSearchCap.
std::optional<bool> detVanishesModPrime(const std::vector<IntMatrix>& basis, long ell);

/// Local obstruction test, then search over |c_i| <= budget in the fixed order:
/// basis elements first, then boxes of increasing max-norm.
IsoResult findUnimodular(const HomLattice& h, long budget = 5);

struct FreenessCertificate {
    IntVector vector;
    IntMatrix stacked;  ///< rows v g_1, ..., v g_r
    Integer determinant;
};

using FreenessResult = std::variant<FreenessCertificate, Obstruction>;

/// Looks for v with |det(v g_1; ...; v g_r)| = 1, i.e. v generating the module.
/// Throws GeneratorCountMismatch unless there are exactly r generators.
FreenessResult freenessTest(const std::vector<IntMatrix>& generators, long budget = 5);

/// det X = +-1 and S_n X = X S'_n for every supplied pair.
bool verifyCertificate(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t,
                       const IntMatrix& witness);

/// GL_n(Z)-conjugacy of two single matrices through the same engine.
IsoResult conjugacyCheck(const IntMatrix& a, const IntMatrix& b, long budget = 5);

std::vector<IntMatrix> transposed(const std::vector<IntMatrix>& family);

/// FNV-1a over the decimal entries of a generator list.
std::string familyHash(const std::vector<IntMatrix>& family);

}  // namespace ogglab
