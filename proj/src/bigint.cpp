#include "ogglab/bigint.hpp"

#include <stdexcept>

#include "ogglab/errors.hpp"

namespace ogglab {

Integer parseInteger(const std::string& text) {
    Integer x;
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty() || x.set_str(t, 10) != 0) {
        throw InvalidInput("not a decimal integer: '" + text + "'");
    }
    return x;
}

std::string toString(const Integer& x) { return x.get_str(10); }

std::string toString(const Rational& x) { return x.get_str(10); }

Integer floorDiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer modPositive(const Integer& a, const Integer& b) {
    Integer r;
    Integer absb = abs(b);
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), absb.get_mpz_t());
    return r;
}

bool isPrime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool isPrime(long n) { return isPrime(Integer(n)); }

std::vector<long> primesUpTo(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<Integer> primeDivisors(Integer n) {
    std::vector<Integer> out;
    n = abs(n);
    if (n <= 1) return out;
    for (Integer d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long valuation(Integer n, const Integer& l) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    n = abs(n);
    while (n % l == 0) {
        n /= l;
        ++v;
    }
    return v;
}

int legendre(const Integer& a, const Integer& p) {
    return mpz_legendre(modPositive(a, p).get_mpz_t(), p.get_mpz_t());
}

Integer sigma1(long n) {
    Integer s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) s += d;
    }
    return s;
}

}  // namespace ogglab
