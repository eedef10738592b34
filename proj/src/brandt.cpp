#include "ogglab/brandt.hpp"

#include <deque>
#include <stdexcept>

#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"
#include "ogglab/short_vectors.hpp"

namespace ogglab {

EichlerOrder buildEichlerOrder(long p, long q) {
    if (!isPrime(p) || !isPrime(q) || p == q) throw InvalidInput("p and q must be distinct primes");
    EichlerOrder e;
    e.p = p;
    e.q = q;
    e.algebra = buildAlgebra(p);
    e.maximal = maximalOrder(e.algebra, p);
    e.order = eichlerOrderOfLevel(e.algebra, e.maximal, q);
    return e;
}

Rational eichlerMass(long p, long q) {
    Rational m(Integer(p - 1) * (q + 1), Integer(24));
    m.canonicalize();
    return m;
}

Rational IdealClassSet::mass() const {
    Rational total = 0;
    for (long w : weights) total += Rational(1, 2 * w);
    return total;
}

long unitHalfOrder(const QuaternionAlgebra& alg, const QLattice& order) {
    auto counts = thetaCounts(normForm(alg, order, Rational(1)), 1);
    return counts[1].get_si() / 2;
}

bool isEquivalent(const QuaternionAlgebra& alg, const QLattice& i, const Rational& normI,
                  const QLattice& j, const Rational& normJ) {
    QLattice connecting = product(alg, i, j.conjugate(alg));
    return findVectorOfValue(normForm(alg, connecting, normI * normJ), Rational(1)).has_value();
}

std::vector<QLattice> neighbors(const QuaternionAlgebra& alg, const QLattice& order,
                                const QLattice& ideal, const Rational& norm, long r) {
    auto ib = ideal.basis();
    auto ob = order.basis();
    std::vector<QLattice> out;
    const long total = r * r * r * r;
    for (long code = 1; code < total; ++code) {
        long c[4] = {code % r, (code / r) % r, (code / (r * r)) % r, code / (r * r * r)};
        Quaternion x{};
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 4; ++t) x[t] += ib[k][t] * c[k];
        Rational n = alg.reducedNorm(x) / norm;
        if (n.get_den() != 1 || n.get_num() % r != 0) continue;
        std::vector<Quaternion> gens;
        for (const auto& e : ob) gens.push_back(alg.multiply(x, e));
        for (const auto& f : ib) gens.push_back({f[0] * r, f[1] * r, f[2] * r, f[3] * r});
        QLattice k = QLattice::fromGenerators(gens);
        if (k.covolume() != ideal.covolume() * r * r) continue;
        bool seen = false;
        for (const auto& prev : out)
            if (prev == k) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(k);
        if (static_cast<long>(out.size()) == r + 1) break;
    }
    return out;
}

IdealClassSet enumerateClasses(const EichlerOrder& e, std::size_t budget) {
    const auto& alg = e.algebra;
    const Rational target = eichlerMass(e.p, e.q);
    long r = 2;
    while ((e.p * e.q) % r == 0 || !isPrime(r)) ++r;

    IdealClassSet set;
    auto addClass = [&](const QLattice& ideal, const Rational& norm) {
        QLattice left = leftOrder(alg, ideal, norm);
        set.ideals.push_back(ideal);
        set.norms.push_back(norm);
        set.weights.push_back(unitHalfOrder(alg, left));
        set.grams.push_back(integralNormGram(alg, ideal, norm));
    };
    addClass(e.order, Rational(1));

    std::deque<std::size_t> queue{0};
    std::size_t expanded = 0;
    while (set.mass() < target && !queue.empty()) {
        if (++expanded > budget) throw BudgetExceeded("ideal class search budget exhausted");
        std::size_t i = queue.front();
        queue.pop_front();
        const Rational childNorm = set.norms[i] * r;
        for (const auto& k : neighbors(alg, e.order, set.ideals[i], set.norms[i], r)) {
            bool known = false;
            for (std::size_t c = 0; c < set.size() && !known; ++c)
                known = isEquivalent(alg, k, childNorm, set.ideals[c], set.norms[c]);
            if (known) continue;
            addClass(k, childNorm);
            queue.push_back(set.size() - 1);
            if (set.mass() >= target) break;
        }
    }
    if (set.mass() > target) throw std::logic_error("ideal classes overshoot the mass formula");
    if (set.mass() != target) throw BudgetExceeded("neighbour search ended before the mass closed");
    return set;
}

BrandtModule::BrandtModule(EichlerOrder order, IdealClassSet classes)
    : order_(std::move(order)), classes_(std::move(classes)) {
    if (classes_.mass() != eichlerMass(order_.p, order_.q))
        throw InvalidInput("ideal classes do not satisfy the mass formula");
    const std::size_t h = classes_.size();
    degree_.assign(h, Integer(1));
    IntMatrix column(h, 1);
    for (std::size_t i = 0; i < h; ++i) column(i, 0) = degree_[i];
    cuspidal_ = kernelLattice(column);
    for (long l : {order_.p, order_.q}) {
        QLattice prime = twoSidedPrime(order_.algebra, order_.order, l);
        IntMatrix perm(h, h);
        for (std::size_t i = 0; i < h; ++i) {
            QLattice image = product(order_.algebra, classes_.ideals[i], prime);
            perm(i, static_cast<std::size_t>(classOf(image, classes_.norms[i] * l))) = 1;
        }
        atkinLehner_[l] = perm;
    }
}

BrandtModule BrandtModule::build(long p, long q) {
    EichlerOrder e = buildEichlerOrder(p, q);
    IdealClassSet classes = enumerateClasses(e);
    return BrandtModule(std::move(e), std::move(classes));
}

long BrandtModule::classOf(const QLattice& ideal, const Rational& norm) const {
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (isEquivalent(order_.algebra, ideal, norm, classes_.ideals[c], classes_.norms[c]))
            return static_cast<long>(c);
    throw std::logic_error("ideal is not equivalent to any class representative");
}

IntMatrix BrandtModule::atkinLehner(long l) const {
    auto it = atkinLehner_.find(l);
    if (it == atkinLehner_.end()) throw InvalidInput("Atkin-Lehner operator only exists for l | pq");
    return it->second;
}

void BrandtModule::ensureTheta(long bound) const {
    if (bound <= thetaBound_) return;
    long target = std::max(bound, std::max(2 * thetaBound_, 20L));
    const auto& alg = order_.algebra;
    const std::size_t h = classes_.size();
    theta_.assign(h, std::vector<std::vector<Integer>>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            QLattice connecting = product(alg, classes_.ideals[i], classes_.ideals[j].conjugate(alg));
            auto counts =
                thetaCounts(normForm(alg, connecting, classes_.norms[i] * classes_.norms[j]), target);
            theta_[i][j] = counts;
            theta_[j][i] = counts;
        }
    thetaBound_ = target;
}

IntMatrix BrandtModule::countedMatrix(long n) const {
    ensureTheta(n);
    const std::size_t h = classes_.size();
    IntMatrix b(h, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            const Integer& c = theta_[i][j][static_cast<std::size_t>(n)];
            long denom = 2 * classes_.weights[j];
            if (c % denom != 0) throw std::logic_error("Brandt entry is not integral");
            b(i, j) = c / denom;
        }
    return b;
}

IntMatrix BrandtModule::brandtMatrix(long n) const {
    if (n < 1) throw InvalidInput("Hecke index must be positive");
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = hecke_.find(n);
    if (it != hecke_.end()) return it->second;
    long rest = n;
    long levelPower = 0;
    while (rest % order_.q == 0) {
        rest /= order_.q;
        ++levelPower;
    }
    IntMatrix b = rest == 1 ? IntMatrix::identity(classes_.size()) : countedMatrix(rest);
    const IntMatrix tq = -atkinLehner_.at(order_.q);
    for (long k = 0; k < levelPower; ++k) b = b * tq;
    hecke_[n] = b;
    return b;
}

IntMatrix BrandtModule::cuspidalHecke(long n) const {
    IntMatrix b = brandtMatrix(n);
    const IntMatrix& c = cuspidal_.basis();
    IntMatrix s(c.rows(), c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i) {
        auto coords = cuspidal_.coordinates(c.row(i) * b);
        if (!coords) throw std::logic_error("Hecke operator does not preserve the cuspidal lattice");
        s.setRow(i, *coords);
    }
    return s;
}

std::map<long, IntMatrix> BrandtModule::computedMatrices() const {
    std::lock_guard<std::mutex> lock(*mutex_);
    return hecke_;
}

void BrandtModule::seedMatrix(long n, const IntMatrix& m) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    hecke_[n] = m;
}

}  // namespace ogglab
