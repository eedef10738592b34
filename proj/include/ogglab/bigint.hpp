#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ogglab {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

Integer parseInteger(const std::string& text);
std::string toString(const Integer& x);
std::string toString(const Rational& x);

/// floor(a / b) for b != 0.
Integer floorDiv(const Integer& a, const Integer& b);
/// Non-negative remainder of a modulo |b|.
Integer modPositive(const Integer& a, const Integer& b);

bool isPrime(const Integer& n);
bool isPrime(long n);
std::vector<long> primesUpTo(long bound);
/// Distinct prime divisors of |n| in increasing order; empty for n in {-1,0,1}.
std::vector<Integer> primeDivisors(Integer n);
/// Exponent of the prime l in n (n != 0).
long valuation(Integer n, const Integer& l);
/// Legendre symbol (a | p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);
/// Sum of divisors of n >= 1.
Integer sigma1(long n);

}  // namespace ogglab
