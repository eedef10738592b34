#pragma once

#include <optional>

#include "ogglab/int_matrix.hpp"

namespace ogglab {

/// Sublattice of Z^n stored by the row HNF of a basis. Only independent
/// rows are kept, so the zero lattice has an empty basis.
class Lattice {
public:
    explicit Lattice(std::size_t ambientRank = 0);
    static Lattice fromGenerators(const IntMatrix& generators);
    static Lattice full(std::size_t n);

    std::size_t ambientRank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntVector& v) const;
    /// Integer coordinates of v in the stored basis, if v lies in the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    Lattice operator+(const Lattice& other) const;
    bool isSubsetOf(const Lattice& other) const;
    /// True when the lattice equals its rational span intersected with Z^n.
    bool isSaturated() const;

    bool operator==(const Lattice& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

}  // namespace ogglab
