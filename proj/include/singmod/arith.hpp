#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace singmod {

using Integer = mpz_class;
using Rational = mpq_class;

long isqrt(long n);
bool isSquare(long n);
bool isPrime(long n);
std::vector<long> divisors(long n);
std::vector<std::pair<long, int>> factorize(long n);
Integer divisorSigma(long n, int k);
int mobius(long n);
// Kronecker symbol (a/n) for n >= 1.
int kronecker(long a, long n);
long modInverse(long a, long m);
long floorDiv(long a, long b);
long positiveMod(long a, long m);
// Generalized binomial coefficient x choose k for rational x.
Rational binomial(const Rational& x, long k);
Integer binomial(const Integer& x, long k);
bool isIntegral(const Rational& x);
Rational makeRational(long num, long den);
std::string toString(const Rational& x);

}  // namespace singmod
