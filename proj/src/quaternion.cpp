#include "ogglab/quaternion.hpp"

#include <algorithm>
#include <stdexcept>

#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"

namespace ogglab {

namespace {

int epsilon2(const Integer& u) { return modPositive(u, 4) == 3 ? 1 : 0; }

int omega2(const Integer& u) {
    Integer r = modPositive(u, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool isIntegral(const Rational& x) { return x.get_den() == 1; }

Quaternion scaleQ(const Quaternion& x, const Rational& s) {
    return {x[0] * s, x[1] * s, x[2] * s, x[3] * s};
}

}  // namespace

int hilbertSymbol(const Integer& a, const Integer& b, const Integer& l) {
    if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
    long alpha = valuation(a, l);
    long beta = valuation(b, l);
    Integer u = a, v = b;
    for (long k = 0; k < alpha; ++k) u /= l;
    for (long k = 0; k < beta; ++k) v /= l;
    if (l == 2) {
        int e = epsilon2(u) * epsilon2(v) + static_cast<int>(alpha % 2) * omega2(v) +
                static_cast<int>(beta % 2) * omega2(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int sign = 1;
    Integer half = (l - 1) / 2;
    if ((alpha * beta) % 2 != 0 && half % 2 != 0) sign = -sign;
    if (beta % 2 != 0) sign *= legendre(u, l);
    if (alpha % 2 != 0) sign *= legendre(v, l);
    return sign;
}

QuaternionAlgebra::QuaternionAlgebra(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 || b_ == 0) throw InvalidInput("quaternion algebra needs nonzero a, b");
}

Quaternion QuaternionAlgebra::multiply(const Quaternion& x, const Quaternion& y) const {
    const Rational a(a_), b(b_);
    return {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

Quaternion QuaternionAlgebra::conjugate(const Quaternion& x) const { return {x[0], -x[1], -x[2], -x[3]}; }

Rational QuaternionAlgebra::reducedNorm(const Quaternion& x) const {
    const Rational a(a_), b(b_);
    return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

Rational QuaternionAlgebra::reducedTrace(const Quaternion& x) const { return 2 * x[0]; }

std::vector<Integer> QuaternionAlgebra::ramifiedPrimes() const {
    std::vector<Integer> candidates = primeDivisors(a_ * b_);
    if (std::find(candidates.begin(), candidates.end(), Integer(2)) == candidates.end())
        candidates.insert(candidates.begin(), Integer(2));
    std::vector<Integer> out;
    for (const auto& l : candidates)
        if (hilbertSymbol(a_, b_, l) == -1) out.push_back(l);
    return out;
}

QuaternionAlgebra buildAlgebra(long p) {
    if (!isPrime(p)) throw InvalidInput("ramified prime must be prime");
    Integer a, b;
    if (p == 2) {
        a = -1;
        b = -1;
    } else if (p % 4 == 3) {
        a = -1;
        b = -p;
    } else if (p % 8 == 5) {
        a = -2;
        b = -p;
    } else {
        long r = 3;
        while (!(isPrime(r) && r % 4 == 3 && legendre(Integer(r), Integer(p)) == -1)) ++r;
        a = -r;
        b = -p;
    }
    QuaternionAlgebra alg(a, b);
    if (!alg.isDefinite() || alg.ramifiedPrimes() != std::vector<Integer>{Integer(p)})
        throw std::logic_error("algebra recipe failed its ramification check");
    return alg;
}

Quaternion quaternionOne() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }

QLattice QLattice::fromIntegerBasis(const IntMatrix& numerators, const Integer& denominator) {
    IntMatrix h = hnf(numerators);
    Integer g = abs(denominator);
    for (const auto& x : h.data()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    QLattice l;
    if (g != 1) {
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) /= g;
    }
    l.numerators_ = Lattice::fromGenerators(h);
    l.denominator_ = abs(denominator) / g;
    return l;
}

QLattice QLattice::fromGenerators(const std::vector<Quaternion>& gens) {
    Integer d = 1;
    for (const auto& x : gens)
        for (const auto& c : x) d = lcm(d, c.get_den());
    IntMatrix m(gens.size(), 4);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            Rational v = gens[i][k] * d;
            m(i, k) = v.get_num();
        }
    return fromIntegerBasis(m, d);
}

std::vector<Quaternion> QLattice::basis() const {
    std::vector<Quaternion> out;
    const IntMatrix& b = numerators_.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Quaternion x;
        for (std::size_t k = 0; k < 4; ++k) {
            x[k] = Rational(b(i, k), denominator_);
            x[k].canonicalize();
        }
        out.push_back(x);
    }
    return out;
}

Rational QLattice::covolume() const {
    if (rank() != 4) throw std::logic_error("covolume of a degenerate lattice");
    Integer d = abs(det(numerators_.basis()));
    Integer den = denominator_ * denominator_ * denominator_ * denominator_;
    Rational out(d, den);
    out.canonicalize();
    return out;
}

std::optional<IntVector> QLattice::coordinates(const Quaternion& x) const {
    IntVector v(4);
    for (std::size_t k = 0; k < 4; ++k) {
        Rational s = x[k] * denominator_;
        if (!isIntegral(s)) return std::nullopt;
        v[k] = s.get_num();
    }
    return numerators_.coordinates(v);
}

bool QLattice::contains(const Quaternion& x) const { return coordinates(x).has_value(); }

QLattice QLattice::conjugate(const QuaternionAlgebra& alg) const {
    std::vector<Quaternion> gens;
    for (const auto& x : basis()) gens.push_back(alg.conjugate(x));
    return fromGenerators(gens);
}

QLattice QLattice::scaled(const Rational& s) const {
    std::vector<Quaternion> gens;
    for (const auto& x : basis()) gens.push_back(scaleQ(x, s));
    return fromGenerators(gens);
}

QLattice product(const QuaternionAlgebra& alg, const QLattice& x, const QLattice& y) {
    std::vector<Quaternion> gens;
    auto bx = x.basis();
    auto by = y.basis();
    for (const auto& u : bx)
        for (const auto& v : by) gens.push_back(alg.multiply(u, v));
    return QLattice::fromGenerators(gens);
}

Rational rationalDet(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational result = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            result = -result;
        }
        result *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return result;
}

RationalMatrix traceForm(const QuaternionAlgebra& alg, const QLattice& l) {
    auto b = l.basis();
    RationalMatrix t(b.size(), std::vector<Rational>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) t[i][j] = alg.reducedTrace(alg.multiply(b[i], b[j]));
    return t;
}

Rational discriminant(const QuaternionAlgebra& alg, const QLattice& l) {
    return rationalDet(traceForm(alg, l));
}

RationalMatrix normForm(const QuaternionAlgebra& alg, const QLattice& l, const Rational& scale) {
    auto b = l.basis();
    RationalMatrix g(b.size(), std::vector<Rational>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            g[i][j] = alg.reducedTrace(alg.multiply(b[i], alg.conjugate(b[j]))) / (2 * scale);
    return g;
}

IntMatrix integralNormGram(const QuaternionAlgebra& alg, const QLattice& l, const Rational& scale) {
    RationalMatrix g = normForm(alg, l, scale);
    IntMatrix out(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            Rational v = 2 * g[i][j];
            if (!isIntegral(v)) throw std::logic_error("norm form is not integral at this scale");
            out(i, j) = v.get_num();
        }
    return out;
}

bool isOrder(const QuaternionAlgebra& alg, const QLattice& l) {
    if (l.rank() != 4 || !l.contains(quaternionOne())) return false;
    auto b = l.basis();
    for (const auto& x : b) {
        if (!isIntegral(alg.reducedNorm(x)) || !isIntegral(alg.reducedTrace(x))) return false;
        for (const auto& y : b)
            if (!l.contains(alg.multiply(x, y))) return false;
    }
    return true;
}

namespace {

bool traceFormIntegral(const QuaternionAlgebra& alg, const QLattice& l) {
    for (const auto& row : traceForm(alg, l))
        for (const auto& x : row)
            if (!isIntegral(x)) return false;
    return true;
}

// Smallest ring containing the order and y, if every element stays integral.
std::optional<QLattice> adjoin(const QuaternionAlgebra& alg, const QLattice& order, const Quaternion& y) {
    std::vector<Quaternion> gens = order.basis();
    gens.push_back(y);
    QLattice cur = QLattice::fromGenerators(gens);
    for (int iter = 0; iter < 64; ++iter) {
        if (!traceFormIntegral(alg, cur)) return std::nullopt;
        auto b = cur.basis();
        std::vector<Quaternion> next = b;
        for (const auto& u : b)
            for (const auto& v : b) next.push_back(alg.multiply(u, v));
        QLattice grown = QLattice::fromGenerators(next);
        if (grown == cur) {
            return isOrder(alg, cur) ? std::optional<QLattice>(cur) : std::nullopt;
        }
        cur = grown;
    }
    return std::nullopt;
}

}  // namespace

QLattice maximalOrder(const QuaternionAlgebra& alg, long p) {
    QLattice order = QLattice::fromGenerators({quaternionOne(),
                                               {Rational(0), Rational(1), Rational(0), Rational(0)},
                                               {Rational(0), Rational(0), Rational(1), Rational(0)},
                                               {Rational(0), Rational(0), Rational(0), Rational(1)}});
    const Rational target(Integer(p) * p);
    while (true) {
        Rational disc = abs(discriminant(alg, order));
        if (disc == target) return order;
        Rational ratio = disc / target;
        if (!isIntegral(ratio) || ratio < 1) throw std::logic_error("order discriminant is inconsistent");
        Integer index = sqrt(ratio.get_num());
        bool grown = false;
        auto basis = order.basis();
        for (const auto& lpz : primeDivisors(index)) {
            long l = lpz.get_si();
            long total = l * l * l * l;
            for (long code = 1; code < total && !grown; ++code) {
                long c[4] = {code % l, (code / l) % l, (code / (l * l)) % l, code / (l * l * l)};
                Quaternion y{};
                for (int k = 0; k < 4; ++k)
                    for (int t = 0; t < 4; ++t) y[t] += basis[k][t] * Rational(c[k], l);
                for (auto& v : y) v.canonicalize();
                if (!isIntegral(alg.reducedNorm(y)) || !isIntegral(alg.reducedTrace(y))) continue;
                if (auto bigger = adjoin(alg, order, y)) {
                    order = *bigger;
                    grown = true;
                }
            }
            if (grown) break;
        }
        if (!grown) throw std::logic_error("could not enlarge a non-maximal order");
    }
}

QLattice leftStabilizer(const QuaternionAlgebra& alg, const QLattice& order, const QLattice& lattice) {
    // Work in coordinates of `order`; lattice is assumed to sit inside it.
    auto ob = order.basis();
    auto lb = lattice.basis();
    IntMatrix rel(4, 16);
    IntMatrix target(16, 16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t t = 0; t < 4; ++t) {
            auto c = order.coordinates(alg.multiply(ob[a], lb[t]));
            if (!c) throw std::logic_error("lattice is not contained in the order");
            for (std::size_t k = 0; k < 4; ++k) rel(a, 4 * t + k) = (*c)[k];
        }
    for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t r = 0; r < 4; ++r) {
            auto c = order.coordinates(lb[r]);
            if (!c) throw std::logic_error("lattice is not contained in the order");
            for (std::size_t k = 0; k < 4; ++k) target(4 * t + r, 4 * t + k) = (*c)[k];
        }
    Lattice coords = preimageLattice(rel, target);
    std::vector<Quaternion> gens;
    for (std::size_t i = 0; i < coords.rank(); ++i) {
        Quaternion y{};
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t t = 0; t < 4; ++t) y[t] += ob[a][t] * coords.basis()(i, a);
        gens.push_back(y);
    }
    return QLattice::fromGenerators(gens);
}

QLattice eichlerOrderOfLevel(const QuaternionAlgebra& alg, const QLattice& maximal, long q) {
    auto ob = maximal.basis();
    const long total = q * q * q * q;
    std::optional<Quaternion> zeroDivisor;
    for (long code = 1; code < total; ++code) {
        long c[4] = {code % q, (code / q) % q, (code / (q * q)) % q, code / (q * q * q)};
        Quaternion x{};
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 4; ++t) x[t] += ob[k][t] * c[k];
        Rational n = alg.reducedNorm(x);
        if (n.get_num() % q == 0) {
            zeroDivisor = x;
            break;
        }
    }
    if (!zeroDivisor) throw std::logic_error("no zero divisor modulo q in the maximal order");
    std::vector<Quaternion> gens;
    for (const auto& e : ob) {
        gens.push_back(alg.multiply(*zeroDivisor, e));
        gens.push_back(scaleQ(e, Rational(q)));
    }
    QLattice ideal = QLattice::fromGenerators(gens);
    QLattice eichler = leftStabilizer(alg, maximal, ideal);
    Rational expected(Integer(alg.ramifiedPrimes().front()) * q);
    if (abs(discriminant(alg, eichler)) != expected * expected || !isOrder(alg, eichler))
        throw std::logic_error("Eichler order has the wrong discriminant");
    return eichler;
}

Rational idealNorm(const QLattice& ideal, const QLattice& rightOrder) {
    Rational ratio = ideal.covolume() / rightOrder.covolume();
    Integer num = ratio.get_num(), den = ratio.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw std::logic_error("ideal index is not a square");
    Rational out(Integer(sqrt(num)), Integer(sqrt(den)));
    out.canonicalize();
    return out;
}

QLattice leftOrder(const QuaternionAlgebra& alg, const QLattice& ideal, const Rational& norm) {
    return product(alg, ideal, ideal.conjugate(alg)).scaled(1 / norm);
}

QLattice twoSidedPrime(const QuaternionAlgebra& alg, const QLattice& order, long l) {
    RationalMatrix tf = traceForm(alg, order);
    IntMatrix t(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t(i, j) = tf[i][j].get_num();
    Lattice coords = preimageLattice(t, IntMatrix::identity(4) * Integer(l));
    auto ob = order.basis();
    std::vector<Quaternion> gens;
    for (std::size_t i = 0; i < coords.rank(); ++i) {
        Quaternion y{};
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t k = 0; k < 4; ++k) y[k] += ob[a][k] * coords.basis()(i, a);
        gens.push_back(y);
    }
    return QLattice::fromGenerators(gens);
}

}  // namespace ogglab
