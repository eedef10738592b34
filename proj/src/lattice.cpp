#include "ogglab/lattice.hpp"

#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"

namespace ogglab {

Lattice::Lattice(std::size_t ambientRank) : ambient_(ambientRank), basis_(0, ambientRank) {}

Lattice Lattice::fromGenerators(const IntMatrix& generators) {
    Lattice l(generators.cols());
    l.basis_ = hnf(generators);
    if (l.basis_.rows() == 0) l.basis_ = IntMatrix(0, generators.cols());
    return l;
}

Lattice Lattice::full(std::size_t n) { return fromGenerators(IntMatrix::identity(n)); }

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
    IntVector rest = v;
    IntVector coords(rank(), Integer(0));
    std::size_t col = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        while (basis_(i, col) == 0) {
            if (rest[col] != 0) return std::nullopt;
            ++col;
        }
        const Integer& pivot = basis_(i, col);
        if (rest[col] % pivot != 0) return std::nullopt;
        Integer c = rest[col] / pivot;
        coords[i] = c;
        if (c != 0)
            for (std::size_t j = col; j < ambient_; ++j) rest[j] -= c * basis_(i, j);
        ++col;
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

Lattice Lattice::operator+(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("lattice sum ambient mismatch");
    return fromGenerators(IntMatrix::vstack(basis_, other.basis_));
}

bool Lattice::isSubsetOf(const Lattice& other) const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (!other.contains(basis_.row(i))) return false;
    return true;
}

bool Lattice::isSaturated() const {
    if (rank() == 0) return true;
    for (const auto& d : snf(basis_).diag)
        if (d != 1) return false;
    return true;
}

}  // namespace ogglab
