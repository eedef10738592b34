#include "ogglab/polynomial.hpp"

#include <sstream>

namespace ogglab {

namespace {

using RPoly = std::vector<Rational>;

void trimR(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly toRational(const IntPoly& f) {
    RPoly r(f.coeffs.begin(), f.coeffs.end());
    trimR(r);
    return r;
}

RPoly derivative(const RPoly& p) {
    RPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trimR(d);
    return d;
}

RPoly remainder(RPoly a, const RPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trimR(a);
    }
    return a;
}

RPoly quotient(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) return {};
    RPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trimR(a);
    }
    trimR(q);
    return q;
}

RPoly gcdR(RPoly a, RPoly b) {
    while (!b.empty()) {
        RPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Rational evalR(const RPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<RPoly> sturmSequence(const RPoly& f) {
    std::vector<RPoly> seq{f, derivative(f)};
    while (!seq.back().empty()) {
        RPoly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    if (seq.back().empty()) seq.pop_back();
    return seq;
}

long signChanges(const std::vector<RPoly>& seq, const Rational& x) {
    long changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sgn(evalR(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

RPoly squarefreePart(const RPoly& f) {
    RPoly g = gcdR(f, derivative(f));
    if (g.size() <= 1) return f;
    return quotient(f, g);
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> c) : coeffs(std::move(c)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> c) {
    for (long v : c) coeffs.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (isZero() || rhs.isZero()) return IntPoly();
    std::vector<Integer> out(coeffs.size() + rhs.coeffs.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs.size(); ++j) out[i + j] += coeffs[i] * rhs.coeffs[j];
    return IntPoly(out);
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Integer> out(std::max(coeffs.size(), rhs.coeffs.size()), Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) out[i] += rhs.coeffs[i];
    return IntPoly(out);
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<Integer> out(std::max(coeffs.size(), rhs.coeffs.size()), Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) out[i] -= rhs.coeffs[i];
    return IntPoly(out);
}

std::string IntPoly::toString(const char* var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) os << mag;
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

IntPoly squaredRootsPoly(const IntPoly& f) {
    IntPoly neg = f;
    for (std::size_t k = 1; k < neg.coeffs.size(); k += 2) neg.coeffs[k] = -neg.coeffs[k];
    IntPoly g = f * neg;
    if (f.degree() % 2 != 0) {
        for (auto& c : g.coeffs) c = -c;
    }
    std::vector<Integer> h;
    for (std::size_t k = 0; k < g.coeffs.size(); k += 2) h.push_back(g.coeffs[k]);
    return IntPoly(h);
}

long countRealRootsIn(const IntPoly& f, const Rational& lo, const Rational& hi) {
    RPoly p = toRational(f);
    if (p.size() <= 1 || lo > hi) return 0;
    p = squarefreePart(p);
    auto seq = sturmSequence(p);
    long count = signChanges(seq, lo) - signChanges(seq, hi);
    if (evalR(p, lo) == 0) ++count;
    return count;
}

long distinctRootCount(const IntPoly& f) {
    RPoly p = toRational(f);
    if (p.size() <= 1) return 0;
    return static_cast<long>(squarefreePart(p).size()) - 1;
}

bool allRootsRealIn(const IntPoly& f, const Rational& lo, const Rational& hi) {
    return countRealRootsIn(f, lo, hi) == distinctRootCount(f);
}

}  // namespace ogglab
