#include "ogglab/module_iso.hpp"

#include <random>
#include <sstream>

#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"

namespace ogglab {

namespace {

void requireFamilies(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t) {
    if (s.size() != t.size()) throw DimensionMismatch("generator lists differ in length");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!s[k].isSquare() || !t[k].isSquare()) throw NonSquareError();
        if (s[k].rows() != s[0].rows() || t[k].rows() != t[0].rows())
            throw DimensionMismatch("generators of one module differ in size");
    }
}

long detModPrime(std::vector<long> a, std::size_t n, long ell) {
    long result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[c * n + k]);
            result = (ell - result) % ell;
        }
        long inv = 1;
        for (long e = ell - 2, b = a[c * n + c]; e > 0; e >>= 1, b = b * b % ell)
            if (e & 1) inv = inv * b % ell;
        result = result * a[c * n + c] % ell;
        for (std::size_t r = c + 1; r < n; ++r) {
            long f = a[r * n + c] * inv % ell;
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k)
                a[r * n + k] = ((a[r * n + k] - f * a[c * n + k]) % ell + ell) % ell;
        }
    }
    return result;
}

// Calls visit on every c with max |c_i| == k, in lexicographic order.
template <class F>
bool forEachShell(std::size_t dim, long k, F&& visit) {
    std::vector<long> c(dim, -k);
    while (true) {
        long m = 0;
        for (long x : c) m = std::max(m, std::abs(x));
        if (m == k && visit(c)) return true;
        std::size_t i = dim;
        while (i > 0) {
            --i;
            if (c[i] < k) {
                ++c[i];
                for (std::size_t j = i + 1; j < dim; ++j) c[j] = -k;
                break;
            }
            if (i == 0) return false;
        }
        if (dim == 0) return false;
    }
}

// Deterministic search: unit vectors, then shells 1..budget.
template <class F>
bool searchCoefficients(std::size_t dim, long budget, F&& visit) {
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<long> e(dim, 0);
        e[i] = 1;
        if (visit(e)) return true;
    }
    for (long k = 1; k <= budget; ++k)
        if (forEachShell(dim, k, visit)) return true;
    return false;
}

std::uint64_t powCapped(long base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= static_cast<std::uint64_t>(base);
        if (r > kLocalSearchCap) return kLocalSearchCap + 1;
    }
    return r;
}

// Reduces integer matrices mod ell once; combos are formed in machine words.
struct ModPrimeBasis {
    long ell;
    std::size_t n;
    std::vector<std::vector<long>> mats;

    ModPrimeBasis(const std::vector<IntMatrix>& basis, long l) : ell(l), n(basis.at(0).rows()) {
        for (const auto& m : basis) {
            std::vector<long> r(n * n);
            for (std::size_t i = 0; i < n * n; ++i)
                r[i] = modPositive(m.data()[i], Integer(ell)).get_si();
            mats.push_back(std::move(r));
        }
    }

    // Walks F_ell^k as an odometer; stops at the first c with visit(c) true.
    template <class F>
    bool anyPoint(F&& visit) const {
        const std::size_t k = mats.size();
        std::vector<long> c(k, 0);
        std::vector<long> acc(n * n, 0);
        while (true) {
            if (visit(acc)) return true;
            std::size_t i = 0;
            while (i < k) {
                for (std::size_t t = 0; t < n * n; ++t) acc[t] = (acc[t] + mats[i][t]) % ell;
                if (++c[i] < ell) break;
                c[i] = 0;  // acc wrapped back by ell * mats[i] == 0 mod ell
                ++i;
            }
            if (i == k) return false;
        }
    }
};

}  // namespace

std::string toString(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::RationalMismatch: return "RationalMismatch";
        case ObstructionKind::LocalDetObstruction: return "LocalDetObstruction";
        case ObstructionKind::Unknown: return "Unknown";
    }
    return "Unknown";
}

IntMatrix HomLattice::combination(const std::vector<long>& coeffs) const {
    IntMatrix x(sourceRank, targetRank);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0) x = x + basis[i] * Integer(coeffs[i]);
    return x;
}

HomLattice homLattice(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t) {
    requireFamilies(s, t);
    HomLattice h;
    if (s.empty()) throw InvalidInput("empty generator list");
    const std::size_t r = s[0].rows();
    const std::size_t c = t[0].rows();
    h.sourceRank = r;
    h.targetRank = c;
    if (r == 0 || c == 0) return h;
    // Row a*c+b of the system is the coefficient of X_ab in every S X - X S' entry.
    IntMatrix system(r * c, r * c * s.size());
    for (std::size_t g = 0; g < s.size(); ++g) {
        const std::size_t off = g * r * c;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const std::size_t col = off + i * c + j;
                for (std::size_t a = 0; a < r; ++a) system(a * c + j, col) += s[g](i, a);
                for (std::size_t b = 0; b < c; ++b) system(i * c + b, col) -= t[g](b, j);
            }
    }
    Lattice k = kernelLattice(system);
    for (std::size_t i = 0; i < k.rank(); ++i)
        h.basis.push_back(IntMatrix::unflatten(k.basis().row(i), r, c));
    return h;
}

RationalIsoResult rationalIsoTest(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t) {
    requireFamilies(s, t);
    RationalIsoResult out;
    if (!s.empty() && s[0].rows() != t[0].rows()) {
        Obstruction o;
        o.kind = ObstructionKind::RationalMismatch;
        o.detail = "modules have different ranks";
        out.decided = true;
        out.mismatch = o;
        return out;
    }
    for (std::size_t g = 0; g < s.size(); ++g) {
        IntPoly a = charpoly(s[g]);
        IntPoly b = charpoly(t[g]);
        if (a != b) {
            Obstruction o;
            o.kind = ObstructionKind::RationalMismatch;
            o.generatorIndex = g;
            o.leftCharpoly = a;
            o.rightCharpoly = b;
            o.detail = "characteristic polynomials differ";
            out.decided = true;
            out.mismatch = o;
            return out;
        }
    }
    HomLattice h = homLattice(s, t);
    if (h.sourceRank == 0) {
        out.isomorphic = out.decided = true;
        out.witness = IntMatrix(0, 0);
        return out;
    }
    if (h.rank() == 0) {
        Obstruction o;
        o.kind = ObstructionKind::RationalMismatch;
        o.detail = "no nonzero module maps";
        out.decided = true;
        out.mismatch = o;
        return out;
    }
    auto tryCoeffs = [&](const std::vector<long>& c) {
        IntMatrix x = h.combination(c);
        if (det(x) != 0) {
            out.isomorphic = out.decided = true;
            out.witness = x;
            return true;
        }
        return false;
    };
    if (searchCoefficients(h.rank(), 2, tryCoeffs)) return out;
    std::mt19937_64 rng(0x6f67676cULL);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> c(h.rank());
        for (auto& x : c) x = coeff(rng);
        if (tryCoeffs(c)) return out;
    }
    return out;
}

const std::vector<long>& localObstructionPrimes() {
    static const std::vector<long> primes = {2, 3, 5, 7, 11, 13};
    return primes;
}

std::optional<bool> detVanishesModPrime(const std::vector<IntMatrix>& basis, long ell) {
    if (basis.empty()) return true;
    if (powCapped(ell, basis.size()) > kLocalSearchCap) return std::nullopt;
    ModPrimeBasis mb(basis, ell);
    bool nonzero = mb.anyPoint([&](const std::vector<long>& m) { return detModPrime(m, mb.n, ell) != 0; });
    return !nonzero;
}

IsoResult findUnimodular(const HomLattice& h, long budget) {
    if (h.sourceRank != h.targetRank) {
        Obstruction o;
        o.kind = ObstructionKind::RationalMismatch;
        o.detail = "modules have different ranks";
        return o;
    }
    if (h.sourceRank == 0) return IsoCertificate{IntMatrix(0, 0), Integer(1)};
    if (h.rank() == 0) {
        Obstruction o;
        o.kind = ObstructionKind::RationalMismatch;
        o.detail = "no nonzero module maps";
        return o;
    }
    for (long ell : localObstructionPrimes()) {
        auto vanishes = detVanishesModPrime(h.basis, ell);
        if (vanishes && *vanishes) {
            Obstruction o;
            o.kind = ObstructionKind::LocalDetObstruction;
            o.prime = ell;
            o.pointsChecked = Integer(static_cast<unsigned long>(powCapped(ell, h.rank())));
            o.detail = "determinant vanishes on every point of the Hom lattice mod " +
                       std::to_string(ell);
            return o;
        }
    }
    std::optional<IsoCertificate> found;
    searchCoefficients(h.rank(), budget, [&](const std::vector<long>& c) {
        IntMatrix x = h.combination(c);
        Integer d = det(x);
        if (d == 1 || d == -1) {
            found = IsoCertificate{x, d};
            return true;
        }
        return false;
    });
    if (found) return *found;
    Obstruction o;
    o.kind = ObstructionKind::Unknown;
    o.budget = budget;
    o.detail = "no unimodular element with coefficients up to the budget";
    return o;
}

FreenessResult freenessTest(const std::vector<IntMatrix>& generators, long budget) {
    if (generators.empty()) throw GeneratorCountMismatch("no generators supplied");
    const std::size_t r = generators[0].rows();
    for (const auto& g : generators)
        if (!g.isSquare() || g.rows() != r) throw DimensionMismatch("generators differ in size");
    if (generators.size() != r)
        throw GeneratorCountMismatch("need exactly " + std::to_string(r) + " generators, got " +
                                     std::to_string(generators.size()));
    auto stack = [&](const IntVector& v) {
        IntMatrix m(0, r);
        for (const auto& g : generators) m.appendRow(v * g);
        return m;
    };
    std::optional<FreenessCertificate> found;
    auto tryVector = [&](const std::vector<long>& c) {
        IntVector v(c.begin(), c.end());
        IntMatrix m = stack(v);
        Integer d = det(m);
        if (d == 1 || d == -1) {
            found = FreenessCertificate{v, m, d};
            return true;
        }
        return false;
    };
    if (r == 0) return FreenessCertificate{{}, IntMatrix(0, 0), Integer(1)};
    for (std::size_t i = 0; i < r && !found; ++i) {
        std::vector<long> e(r, 0);
        e[i] = 1;
        tryVector(e);
    }
    if (found) return *found;
    // v -> stack(v) is linear, so its images of e_1..e_r play the role of a Hom basis.
    std::vector<IntMatrix> images;
    for (std::size_t i = 0; i < r; ++i) {
        IntVector e(r, Integer(0));
        e[i] = 1;
        images.push_back(stack(e));
    }
    for (long ell : localObstructionPrimes()) {
        auto vanishes = detVanishesModPrime(images, ell);
        if (vanishes && *vanishes) {
            Obstruction o;
            o.kind = ObstructionKind::LocalDetObstruction;
            o.prime = ell;
            o.pointsChecked = Integer(static_cast<unsigned long>(powCapped(ell, r)));
            o.detail = "no vector generates the module mod " + std::to_string(ell);
            return o;
        }
    }
    if (searchCoefficients(r, budget, tryVector)) return *found;
    Obstruction o;
    o.kind = ObstructionKind::Unknown;
    o.budget = budget;
    o.detail = "no generating vector with entries up to the budget";
    return o;
}

bool verifyCertificate(const std::vector<IntMatrix>& s, const std::vector<IntMatrix>& t,
                       const IntMatrix& witness) {
    if (s.size() != t.size()) return false;
    if (!witness.isSquare()) return false;
    if (witness.rows() > 0) {
        Integer d = det(witness);
        if (d != 1 && d != -1) return false;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k].rows() != witness.rows() || t[k].rows() != witness.rows()) return false;
        if (s[k] * witness != witness * t[k]) return false;
    }
    return true;
}

IsoResult conjugacyCheck(const IntMatrix& a, const IntMatrix& b, long budget) {
    if (!a.isSquare() || !b.isSquare()) throw NonSquareError();
    RationalIsoResult rational = rationalIsoTest({a}, {b});
    if (rational.mismatch) return *rational.mismatch;
    return findUnimodular(homLattice({a}, {b}), budget);
}

std::vector<IntMatrix> transposed(const std::vector<IntMatrix>& family) {
    std::vector<IntMatrix> out;
    for (const auto& m : family) out.push_back(m.transpose());
    return out;
}

std::string familyHash(const std::vector<IntMatrix>& family) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& m : family) {
        feed(std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":");
        for (const auto& e : m.data()) feed(e.get_str() + ",");
        feed(";");
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace ogglab
