#include "ogglab/elliptic.hpp"

#include <sstream>

#include "ogglab/errors.hpp"

namespace ogglab {

WeierstrassCurve::WeierstrassCurve(Integer a1_, Integer a2_, Integer a3_, Integer a4_, Integer a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {}

Integer WeierstrassCurve::b2() const { return a1 * a1 + 4 * a2; }
Integer WeierstrassCurve::b4() const { return 2 * a4 + a1 * a3; }
Integer WeierstrassCurve::b6() const { return a3 * a3 + 4 * a6; }
Integer WeierstrassCurve::b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

Integer WeierstrassCurve::discriminant() const {
    const Integer c2 = b2(), c4 = b4(), c6 = b6(), c8 = b8();
    return -c2 * c2 * c8 - 8 * c4 * c4 * c4 - 27 * c6 * c6 + 9 * c2 * c4 * c6;
}

std::string WeierstrassCurve::toString() const {
    std::ostringstream os;
    os << "[" << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6 << "]";
    return os.str();
}

WeierstrassCurve makeCurve(const std::vector<Integer>& c) {
    if (c.size() != 5) throw InvalidInput("a curve needs exactly five coefficients [a1,a2,a3,a4,a6]");
    WeierstrassCurve e(c[0], c[1], c[2], c[3], c[4]);
    if (e.discriminant() == 0) throw InvalidInput("singular curve: discriminant is zero");
    return e;
}

namespace {

struct ModCurve {
    long p;
    long a1, a2, a3, a4, a6;

    ModCurve(const WeierstrassCurve& e, long p_) : p(p_) {
        const Integer m(p);
        a1 = modPositive(e.a1, m).get_si();
        a2 = modPositive(e.a2, m).get_si();
        a3 = modPositive(e.a3, m).get_si();
        a4 = modPositive(e.a4, m).get_si();
        a6 = modPositive(e.a6, m).get_si();
    }

    long mul(long x, long y) const { return static_cast<long>((__int128)x * y % p); }
    long add(long x, long y) const { return (x + y) % p; }
    long sub(long x, long y) const { return ((x - y) % p + p) % p; }
    long inv(long x) const {
        long r = 1;
        for (long e = p - 2, b = x; e > 0; e >>= 1, b = mul(b, b))
            if (e & 1) r = mul(r, b);
        return r;
    }

    struct Pt {
        long x = 0, y = 0;
        bool inf = true;
    };

    Pt neg(const Pt& a) const {
        if (a.inf) return a;
        return {a.x, sub(sub(0, a.y), add(mul(a1, a.x), a3)), false};
    }

    Pt addPts(const Pt& a, const Pt& b) const {
        if (a.inf) return b;
        if (b.inf) return a;
        long lambda, nu;
        if (a.x == b.x) {
            long ysum = add(add(a.y, b.y), add(mul(a1, b.x), a3));
            if (ysum == 0) return Pt{};
            long num = add(add(mul(3, mul(a.x, a.x)), mul(2, mul(a2, a.x))), sub(a4, mul(a1, a.y)));
            lambda = mul(num, inv(ysum));
        } else {
            lambda = mul(sub(b.y, a.y), inv(sub(b.x, a.x)));
        }
        nu = sub(a.y, mul(lambda, a.x));
        long x3 = sub(sub(sub(add(mul(lambda, lambda), mul(a1, lambda)), a2), a.x), b.x);
        long y3 = sub(sub(0, mul(add(lambda, a1), x3)), add(nu, a3));
        return {x3, y3, false};
    }

    Pt multiply(Pt a, long n) const {
        Pt r;
        while (n > 0) {
            if (n & 1) r = addPts(r, a);
            a = addPts(a, a);
            n >>= 1;
        }
        return r;
    }

    bool onCurve(long x, long y) const {
        long lhs = add(mul(y, y), add(mul(mul(a1, x), y), mul(a3, y)));
        long rhs = add(add(mul(mul(x, x), x), mul(a2, mul(x, x))), add(mul(a4, x), a6));
        return lhs == rhs;
    }

    std::vector<Pt> affinePoints() const {
        std::vector<Pt> pts;
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y)
                if (onCurve(x, y)) pts.push_back({x, y, false});
        return pts;
    }
};

void requireGood(const WeierstrassCurve& e, long p) {
    if (p < 2 || !isPrime(p)) throw InvalidInput("p must be prime");
    if (e.discriminant() % p == 0)
        throw BadReduction("p = " + std::to_string(p) + " divides the discriminant");
}

}  // namespace

PointCount reduceAndCount(const WeierstrassCurve& e, long p) {
    requireGood(e, p);
    ModCurve c(e, p);
    long count = 1;
    if (p == 2) {
        count += static_cast<long>(c.affinePoints().size());
    } else {
        // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
        std::vector<char> square(p, 0);
        for (long y = 0; y < p; ++y) square[c.mul(y, y)] = 1;
        const long b2 = modPositive(e.b2(), Integer(p)).get_si();
        const long b4 = modPositive(e.b4(), Integer(p)).get_si();
        const long b6 = modPositive(e.b6(), Integer(p)).get_si();
        for (long x = 0; x < p; ++x) {
            long f = c.add(c.add(c.mul(4, c.mul(x, c.mul(x, x))), c.mul(b2, c.mul(x, x))),
                           c.add(c.mul(2, c.mul(b4, x)), b6));
            count += f == 0 ? 1 : (square[f] ? 2 : 0);
        }
    }
    PointCount out;
    out.count = count;
    out.trace = Integer(p + 1) - count;
    return out;
}

long torsionCount(const WeierstrassCurve& e, long p, long n) {
    requireGood(e, p);
    ModCurve c(e, p);
    long total = 1;
    for (const auto& pt : c.affinePoints())
        if (c.multiply(pt, n).inf) ++total;
    return total;
}

std::pair<Integer, Integer> groupStructure(const WeierstrassCurve& e, long p) {
    const Integer count = reduceAndCount(e, p).count;
    Integer d1 = 1;
    for (const auto& lz : primeDivisors(count)) {
        const long l = lz.get_si();
        const long v = valuation(count, lz);
        if (v < 2) continue;
        // E[l^k](F_p) has l^(min(k,a)+min(k,b)) points; a is the largest k with l^(2k).
        long a = 0;
        long power = 1;
        for (long k = 1; 2 * k <= v; ++k) {
            power *= l;
            Integer full = Integer(power) * power;
            if (Integer(torsionCount(e, p, power)) != full) break;
            a = k;
        }
        for (long k = 0; k < a; ++k) d1 *= l;
    }
    return {d1, count / d1};
}

WeierstrassCurve quadraticTwist(const WeierstrassCurve& e, long p) {
    requireGood(e, p);
    if (p == 2) throw NotApplicable("quadratic twists at p = 2 are not supported");
    const Integer m(p);
    long d = 2;
    while (legendre(Integer(d), m) != -1) ++d;
    // y^2 = x^3 + A x^2 + B x + C with A = b2/4, B = b4/2, C = b6/4 over F_p.
    Integer inv4, inv2;
    mpz_invert(inv4.get_mpz_t(), Integer(4).get_mpz_t(), m.get_mpz_t());
    mpz_invert(inv2.get_mpz_t(), Integer(2).get_mpz_t(), m.get_mpz_t());
    const Integer a = modPositive(e.b2() * inv4, m);
    const Integer b = modPositive(e.b4() * inv2, m);
    const Integer c = modPositive(e.b6() * inv4, m);
    const Integer dz(d);
    return WeierstrassCurve(0, modPositive(dz * a, m), 0, modPositive(dz * dz * b, m),
                            modPositive(dz * dz * dz * c, m));
}

ScalarFrobenius scalarFrobenius(const WeierstrassCurve& e, long p, long ell) {
    requireGood(e, p);
    if (ell == p) throw InvalidInput("ell must differ from p");
    ScalarFrobenius s;
    s.plus = torsionCount(e, p, ell) == ell * ell;
    s.minus = torsionCount(quadraticTwist(e, p), p, ell) == ell * ell;
    return s;
}

bool newnessCongruence(const Integer& trace, long p, long ell) {
    const Integer m(ell);
    return modPositive(trace - (p + 1), m) == 0 || modPositive(trace + (p + 1), m) == 0;
}

IntPoly divisionPolynomial3(const WeierstrassCurve& e) {
    return IntPoly({e.b8(), 3 * e.b6(), 3 * e.b4(), e.b2(), Integer(3)});
}

namespace {

std::vector<Integer> positiveDivisors(const Integer& n) {
    std::vector<Integer> out;
    Integer m = abs(n);
    if (m == 0) return out;
    std::vector<std::pair<Integer, long>> factors;
    for (const auto& p : primeDivisors(m)) factors.push_back({p, valuation(m, p)});
    out.push_back(1);
    for (const auto& [p, v] : factors) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (long k = 1; k <= v; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Exact division over Q; true when the remainder vanishes.
bool dividesOverQ(const IntPoly& f, const std::vector<Integer>& g) {
    std::vector<Rational> r(f.coeffs.begin(), f.coeffs.end());
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = r.size(); i-- > dg;) {
        Rational factor = r[i] / Rational(g[dg]);
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= factor * Rational(g[j]);
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (r[i] != 0) return false;
    return true;
}

}  // namespace

bool mod3IrreducibleSufficient(const WeierstrassCurve& e) {
    const IntPoly f = divisionPolynomial3(e);
    const Integer& constant = f.coeffs[0];
    if (constant == 0) return false;
    const auto cDivs = positiveDivisors(constant);
    for (const auto& r : cDivs)
        for (long s : {1L, 3L})
            for (int sign : {1, -1}) {
                Rational x(r * sign, Integer(s));
                x.canonicalize();
                if (f.eval(x) == 0) return false;
            }
    // Roots of f are bounded by 1 + max |f_i| / 3, so a quadratic factor a x^2 + b x + c
    // with a in {1, 3} has |b| <= 2 a (1 + max |f_i| / 3).
    Integer maxCoeff = 0;
    for (std::size_t i = 0; i < 4; ++i) maxCoeff = std::max(maxCoeff, Integer(abs(f.coeffs[i])));
    const Integer rootBound = 1 + (maxCoeff + 2) / 3;
    for (long a : {1L, 3L}) {
        const Integer bMax = 2 * a * rootBound;
        for (const auto& cAbs : cDivs)
            for (int sign : {1, -1}) {
                const Integer c = cAbs * sign;
                for (Integer b = -bMax; b <= bMax; ++b)
                    if (dividesOverQ(f, {c, b, Integer(a)})) return false;
            }
    }
    return true;
}

FrobeniusReport detect(const WeierstrassCurve& e, long p, long ell, bool irreducibleAsserted) {
    FrobeniusReport r;
    r.p = p;
    r.ell = ell;
    auto pc = reduceAndCount(e, p);
    r.pointCount = pc.count;
    r.traceAp = pc.trace;
    std::tie(r.d1, r.d2) = groupStructure(e, p);
    auto s = scalarFrobenius(e, p, ell);
    r.scalarPlus = s.plus;
    r.scalarMinus = s.minus;
    r.newnessCongruence = ogglab::newnessCongruence(pc.trace, p, ell);
    r.irreducibleAsserted = irreducibleAsserted;
    bool irreducible = irreducibleAsserted;
    if (ell == 3) {
        r.mod3IrreducibleSufficient = mod3IrreducibleSufficient(e);
        irreducible = irreducible || *r.mod3IrreducibleSufficient;
    } else if (!irreducibleAsserted) {
        r.unprovedHypotheses.push_back("irreducibility of E[" + std::to_string(ell) +
                                       "] is neither computed nor asserted");
    }
    r.candidate = irreducible && (s.plus || s.minus) && r.newnessCongruence;
    r.unprovedHypotheses.push_back("the conductor of E is the prime q paired with p");
    r.unprovedHypotheses.push_back("the maximal ideal m cut out by E[" + std::to_string(ell) +
                                   "] is new (follows from the congruence by a cited theorem)");
    if (irreducibleAsserted) r.unprovedHypotheses.push_back("irreducibility of E[ell] was asserted, not proved");
    r.citedFacts.push_back("dim J^{pq}[m] = 4 (cited, not computed)");
    r.citedFacts.push_back("dim J_0(pq)^new[m] = 2 (cited, not computed)");
    return r;
}

}  // namespace ogglab

namespace ogglab {

const std::vector<BundledCurve>& bundledCurves() {
    static const std::vector<BundledCurve> curves = {
        {"701a1", 701, {0, -1, 1, -2, 1}, 7, 3},
        {"571b1", 571, {0, 1, 1, -4, 2}, 13, 3},
    };
    return curves;
}

const BundledCurve* findBundledCurve(const std::string& label) {
    for (const auto& c : bundledCurves())
        if (c.label == label || c.label.substr(0, c.label.size() - 1) == label) return &c;
    return nullptr;
}

}  // namespace ogglab
