#include "ogglab/exact_linalg.hpp"

#include "ogglab/errors.hpp"

namespace ogglab {

namespace {

// row_a <- s*row_a + u*row_b ; row_b <- v*row_a + w*row_b (simultaneously)
void combineRows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                 const Integer& u, const Integer& v, const Integer& w) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer x = m(a, j);
        Integer y = m(b, j);
        m(a, j) = s * x + u * y;
        m(b, j) = v * x + w * y;
    }
}

void addRowMultiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void addColMultiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negateRow(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HnfResult hnfWithTransform(const IntMatrix& m) {
    HnfResult res;
    res.form = m;
    res.transform = IntMatrix::identity(m.rows());
    IntMatrix& h = res.form;
    IntMatrix& u = res.transform;
    const std::size_t r = m.rows();
    std::size_t t = 0;
    for (std::size_t j = 0; j < m.cols() && t < r; ++j) {
        for (std::size_t i = t + 1; i < r; ++i) {
            if (h(i, j) == 0) continue;
            if (h(t, j) == 0) {
                h.swapRows(t, i);
                u.swapRows(t, i);
                continue;
            }
            Integer g, s, v;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), v.get_mpz_t(), h(t, j).get_mpz_t(),
                       h(i, j).get_mpz_t());
            Integer a = h(t, j) / g;
            Integer b = h(i, j) / g;
            combineRows(h, t, i, s, v, -b, a);
            combineRows(u, t, i, s, v, -b, a);
        }
        if (h(t, j) == 0) continue;
        if (h(t, j) < 0) {
            negateRow(h, t);
            negateRow(u, t);
        }
        for (std::size_t k = 0; k < t; ++k) {
            Integer q = floorDiv(h(k, j), h(t, j));
            addRowMultiple(h, k, t, -q);
            addRowMultiple(u, k, t, -q);
        }
        ++t;
    }
    res.rank = t;
    return res;
}

IntMatrix hnf(const IntMatrix& m) {
    HnfResult res = hnfWithTransform(m);
    return res.form.rowRange(0, res.rank);
}

SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(m.rows());
    IntMatrix right = IntMatrix::identity(m.cols());
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        bool allZero = false;
        while (true) {
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (d(i, j) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) {
                allZero = true;
                break;
            }
            d.swapRows(t, pi);
            left.swapRows(t, pi);
            d.swapCols(t, pj);
            right.swapCols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                Integer q = d(i, t) / d(t, t);
                addRowMultiple(d, i, t, -q);
                addRowMultiple(left, i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                Integer q = d(t, j) / d(t, t);
                addColMultiple(d, j, t, -q);
                addColMultiple(right, j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        addRowMultiple(d, t, i, Integer(1));
                        addRowMultiple(left, t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (allZero) break;
        if (d(t, t) < 0) {
            negateRow(d, t);
            negateRow(left, t);
        }
    }
    SnfResult res;
    res.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.diag[i] = d(i, i);
    res.left = std::move(left);
    res.right = std::move(right);
    return res;
}

Integer det(const IntMatrix& m) {
    if (!m.isSquare()) throw NonSquareError();
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap == n) return 0;
            a.swapRows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Lattice kernelLattice(const IntMatrix& m) {
    HnfResult res = hnfWithTransform(m);
    IntMatrix gens = res.transform.rowRange(res.rank, m.rows());
    if (gens.rows() == 0) return Lattice(m.rows());
    return Lattice::fromGenerators(gens);
}

IntPoly charpoly(const IntMatrix& m) {
    if (!m.isSquare()) throw NonSquareError();
    const std::size_t n = m.rows();
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    IntMatrix mk(n, n);
    const IntMatrix id = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + id * c[n - k + 1];
        Integer tr = (m * mk).trace();
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
        c[n - k] = -q;
    }
    return IntPoly(c);
}

std::size_t rank(const IntMatrix& m) { return hnfWithTransform(m).rank; }

Lattice preimageLattice(const IntMatrix& m, const IntMatrix& target) {
    const std::size_t n = m.rows();
    IntMatrix stacked = IntMatrix::vstack(m, target);
    Lattice k = kernelLattice(stacked);
    IntMatrix gens(k.rank(), n);
    for (std::size_t i = 0; i < k.rank(); ++i)
        for (std::size_t j = 0; j < n; ++j) gens(i, j) = k.basis()(i, j);
    if (gens.rows() == 0) return Lattice(n);
    return Lattice::fromGenerators(gens);
}

}  // namespace ogglab
