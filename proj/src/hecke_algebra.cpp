#include "ogglab/hecke_algebra.hpp"

#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"

namespace ogglab {

long sturmBound(long p, long q) {
    long index = (p + 1) * (q + 1);
    return (index + 5) / 6;
}

std::optional<IntVector> HeckeAlgebra::coordinates(const IntMatrix& m) const {
    return span.coordinates(m.flatten());
}

const IntMatrix& HeckeAlgebra::op(long n) const {
    auto it = operators.find(n);
    if (it == operators.end())
        throw InvalidInput("Hecke operator T_" + std::to_string(n) + " was not supplied");
    return it->second;
}

HeckeAlgebra buildHeckeAlgebra(const std::map<long, IntMatrix>& operators, long bound, long p,
                               long q) {
    HeckeAlgebra alg;
    alg.p = p;
    alg.q = q;
    alg.bound = bound;
    if (operators.empty()) throw InvalidInput("no Hecke operators supplied");
    alg.dimension = operators.begin()->second.rows();
    for (const auto& [n, m] : operators) {
        if (n > bound) continue;
        if (!m.isSquare() || m.rows() != alg.dimension)
            throw DimensionMismatch("Hecke matrices must be square of one size");
        alg.operators[n] = m;
    }
    for (auto a = alg.operators.begin(); a != alg.operators.end(); ++a)
        for (auto b = std::next(a); b != alg.operators.end(); ++b)
            if (a->second * b->second != b->second * a->second)
                throw NonCommuting("T_" + std::to_string(a->first) + " and T_" +
                                   std::to_string(b->first) + " do not commute");
    const std::size_t d = alg.dimension;
    IntMatrix flat(0, d * d);
    for (const auto& [n, m] : alg.operators) flat.appendRow(m.flatten());
    alg.span = Lattice::fromGenerators(flat);
    for (std::size_t i = 0; i < alg.span.rank(); ++i)
        alg.basis.push_back(IntMatrix::unflatten(alg.span.basis().row(i), d, d));
    return alg;
}

GenerationResult generationCheck(const HeckeAlgebra& algebra, const std::vector<long>& indices) {
    if (indices.empty()) throw InvalidInput("generating subset must be nonempty");
    IntMatrix coords(0, algebra.rank());
    for (long n : indices) {
        auto c = algebra.coordinates(algebra.op(n));
        if (!c) throw std::logic_error("operator outside its own algebra");
        coords.appendRow(*c);
    }
    GenerationResult out;
    if (rank(coords) < algebra.rank()) return out;
    IntMatrix h = hnf(coords);
    Integer index = 1;
    for (std::size_t i = 0; i < h.rows(); ++i) index *= h(i, i);
    out.index = abs(index);
    out.generates = out.index == 1;
    return out;
}

std::vector<long> chooseGenerators(const HeckeAlgebra& algebra) {
    const std::size_t r = algebra.rank();
    std::vector<long> greedy;
    IntMatrix rows(0, algebra.dimension * algebra.dimension);
    for (const auto& [n, m] : algebra.operators) {
        IntMatrix trial = IntMatrix::vstack(rows, IntMatrix::fromRows({m.flatten()}, rows.cols()));
        if (rank(trial) > greedy.size()) {
            rows = trial;
            greedy.push_back(n);
        }
        if (greedy.size() == r) break;
    }
    if (r == 0 || generationCheck(algebra, greedy).generates) return greedy;
    std::vector<long> indices;
    for (const auto& [n, m] : algebra.operators)
        if (n != 1) indices.push_back(n);
    if (!algebra.operators.count(1) || indices.size() < r - 1) return {};
    // Lexicographic walk over (r-1)-subsets of the remaining indices.
    std::vector<std::size_t> pick(r - 1);
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    while (true) {
        std::vector<long> subset{1};
        for (auto i : pick) subset.push_back(indices[i]);
        if (generationCheck(algebra, subset).generates) return subset;
        std::size_t i = pick.size();
        while (i > 0 && pick[i - 1] == indices.size() - pick.size() + i - 1) --i;
        if (i == 0) return {};
        ++pick[i - 1];
        for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
}

Integer discriminant(const HeckeAlgebra& algebra) {
    const std::size_t r = algebra.rank();
    IntMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            gram(i, j) = (algebra.basis[i] * algebra.basis[j]).trace();
            gram(j, i) = gram(i, j);
        }
    return det(gram);
}

Integer EisensteinData::order() const {
    Integer n = 1;
    for (const auto& f : invariantFactors) n *= f;
    return n;
}

EisensteinData eisensteinQuotient(const HeckeAlgebra& algebra, EisensteinVariant variant,
                                  long ell) {
    EisensteinData out;
    out.variant = variant;
    out.ell = ell;
    const std::size_t d = algebra.dimension;
    const IntMatrix one = IntMatrix::identity(d);
    for (long r : primesUpTo(algebra.bound)) {
        if (algebra.p % r == 0 || algebra.q % r == 0) continue;
        out.generators.push_back(algebra.op(r) - one * Integer(r + 1));
        out.generatorNames.push_back("T_" + std::to_string(r) + " - " + std::to_string(r + 1));
    }
    if (variant != EisensteinVariant::PlainE) {
        if (ell < 2 || !isPrime(ell)) throw InvalidInput("maximal-ideal variants need a prime ell");
        const bool plusMinus = variant == EisensteinVariant::MPlusMinus;
        const long sp = plusMinus ? 1 : -1;
        out.generators.push_back(algebra.op(algebra.p) + one * Integer(sp));
        out.generators.push_back(algebra.op(algebra.q) - one * Integer(sp));
        out.generators.push_back(one * Integer(ell));
        auto sign = [](long s) { return s > 0 ? std::string(" + 1") : std::string(" - 1"); };
        out.generatorNames.push_back("T_" + std::to_string(algebra.p) + sign(sp));
        out.generatorNames.push_back("T_" + std::to_string(algebra.q) + sign(-sp));
        out.generatorNames.push_back(std::to_string(ell));
    }
    const std::size_t r = algebra.rank();
    IntMatrix ideal(0, r);
    for (const auto& g : out.generators)
        for (const auto& b : algebra.basis) {
            auto c = algebra.coordinates(g * b);
            if (!c) throw std::logic_error("ideal element outside the algebra");
            ideal.appendRow(*c);
        }
    if (r > 0 && ideal.rows() > 0) {
        auto s = snf(ideal);
        for (std::size_t i = 0; i < r; ++i) {
            Integer f = i < s.diag.size() ? s.diag[i] : Integer(0);
            if (f != 1) out.invariantFactors.push_back(f);
        }
    } else {
        out.invariantFactors.assign(r, Integer(0));
    }
    out.maximal = ell > 0 && out.invariantFactors.size() == 1 && out.invariantFactors[0] == ell;
    return out;
}

IntVector primaryParts(const IntVector& orders, long ell) {
    IntVector out;
    for (const auto& n : orders) {
        if (n == 0) continue;
        Integer part = 1;
        Integer m = n;
        while (m % ell == 0) {
            m /= ell;
            part *= ell;
        }
        if (part != 1) out.push_back(part);
    }
    return out;
}

Integer awayFrom6(Integer n) {
    if (n == 0) return n;
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return abs(n);
}

}  // namespace ogglab
