#include "singmod/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace singmod {

long isqrt(long n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool isSquare(long n) {
  if (n < 0) return false;
  long r = isqrt(n);
  return r * r == n;
}

bool isPrime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<long> divisors(long n) {
  if (n <= 0) throw std::domain_error("divisors of nonpositive");
  std::vector<long> lo, hi;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    lo.push_back(k);
    if (k * k != n) hi.push_back(n / k);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Integer divisorSigma(long n, int k) {
  Integer s = 0;
  for (long d : divisors(n)) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    s += t;
  }
  return s;
}

int mobius(long n) {
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

int kronecker(long a, long n) {
  Integer A = a;
  return mpz_kronecker_si(A.get_mpz_t(), n);
}

long modInverse(long a, long m) {
  if (m == 1) return 0;
  Integer r, A = positiveMod(a, m), M = m;
  if (!mpz_invert(r.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t()))
    throw std::domain_error("not invertible");
  return r.get_si();
}

long floorDiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long positiveMod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

Integer binomial(const Integer& x, long k) {
  if (k < 0) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

bool isIntegral(const Rational& x) { return x.get_den() == 1; }

Rational makeRational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string toString(const Rational& x) { return x.get_str(); }

}  // namespace singmod
