#include "ogglab/short_vectors.hpp"

#include <stdexcept>

namespace ogglab {

namespace {

struct Enumerator {
    std::size_t n;
    RationalMatrix q;  // q[i][i] pivots, q[i][j] (j > i) multipliers
    const std::function<bool(const std::vector<long>&, const Rational&)>* visit;
    std::vector<long> x;
    Rational total;
    bool stopped = false;

    // Visits levels n-1 down to 0; `remaining` is what the lower levels may use.
    void descend(long level, const Rational& remaining, const Rational& used) {
        if (stopped) return;
        if (level < 0) {
            bool zero = true;
            for (long v : x)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (!zero && !(*visit)(x, used)) stopped = true;
            return;
        }
        const auto i = static_cast<std::size_t>(level);
        Rational center = 0;
        for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * x[j];
        Rational t = remaining / q[i][i];
        Integer tfloor = floorDiv(t.get_num(), t.get_den());
        Integer spread = sqrt(tfloor) + 1;
        Integer lo = floorDiv(center.get_num(), center.get_den()) - spread;
        Integer hi = lo + 2 * spread + 1;
        for (Integer v = lo; v <= hi && !stopped; ++v) {
            Rational diff = Rational(v) - center;
            Rational term = q[i][i] * diff * diff;
            if (term > remaining) continue;
            x[i] = v.get_si();
            descend(level - 1, remaining - term, used + term);
        }
        x[i] = 0;
    }
};

RationalMatrix decompose(const RationalMatrix& gram) {
    const std::size_t n = gram.size();
    RationalMatrix q = gram;
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 0) throw std::invalid_argument("form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return q;
}

}  // namespace

void forEachShortVector(const RationalMatrix& gram, const Rational& bound,
                        const std::function<bool(const std::vector<long>&, const Rational&)>& visit) {
    Enumerator e;
    e.n = gram.size();
    e.q = decompose(gram);
    e.visit = &visit;
    e.x.assign(e.n, 0);
    e.descend(static_cast<long>(e.n) - 1, bound, Rational(0));
}

std::vector<Integer> thetaCounts(const RationalMatrix& gram, long maxValue) {
    std::vector<Integer> counts(static_cast<std::size_t>(maxValue) + 1, Integer(0));
    counts[0] = 1;
    forEachShortVector(gram, Rational(maxValue), [&](const std::vector<long>&, const Rational& v) {
        if (v.get_den() != 1) throw std::logic_error("norm form takes a non-integral value");
        counts[v.get_num().get_ui()] += 1;
        return true;
    });
    return counts;
}

std::optional<std::vector<long>> findVectorOfValue(const RationalMatrix& gram, const Rational& value) {
    std::optional<std::vector<long>> found;
    forEachShortVector(gram, value, [&](const std::vector<long>& c, const Rational& v) {
        if (v == value) {
            found = c;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace ogglab
