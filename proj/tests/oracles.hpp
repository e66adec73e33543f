#pragma once

// Independent reference computations used as test oracles. These avoid the
// library's algorithms and favour the most direct definition.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline mpz_class sigma(long n, int k) {
  mpz_class s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    s += t;
  }
  return s;
}

using Poly = std::map<long, mpq_class>;

inline Poly mul(const Poly& a, const Poly& b, long prec) {
  Poly r;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b)
      if (i + j < prec) r[i + j] += x * y;
  for (auto it = r.begin(); it != r.end();)
    it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);
  return r;
}

// prod_{n>=1}(1-q^n) by literal multiplication.
inline Poly eulerNaive(long prec) {
  Poly r{{0, 1}};
  for (long n = 1; n < prec; ++n) r = mul(r, Poly{{0, 1}, {n, -1}}, prec);
  return r;
}

inline int mobius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// Kloosterman sum by the definition.
inline double kloosterman(long m, long n, long c) {
  double s = 0;
  for (long d = 0; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    long dbar = 0;
    for (long x = 0; x < c; ++x)
      if ((d * x) % c == 1 % c) dbar = x;
    s += std::cos(2 * M_PI * static_cast<double>(m * d + n * dbar) / static_cast<double>(c));
  }
  return s;
}

inline double besselI1(double x, int terms = 40) {
  double s = 0;
  for (int k = 0; k < terms; ++k) s += std::pow(x / 2, 2 * k + 1) / (std::tgamma(k + 1) * std::tgamma(k + 2));
  return s;
}

// Exponents e(n) with f = prod (1-q^n)^{e(n)} from the log derivative:
// q f'/f = -sum_n n e(n) q^n/(1-q^n), so sum_{d|n} d e(d) = -[q^n](q f'/f).
inline std::map<long, mpq_class> productExponents(const Poly& f, long prec) {
  std::vector<mpq_class> a(static_cast<size_t>(prec)), inv(static_cast<size_t>(prec)), ld(static_cast<size_t>(prec));
  for (auto& [k, v] : f)
    if (k < prec) a[static_cast<size_t>(k)] = v;
  inv[0] = 1 / a[0];
  for (long k = 1; k < prec; ++k) {
    mpq_class s = 0;
    for (long i = 1; i <= k; ++i) s += a[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
    inv[static_cast<size_t>(k)] = -s / a[0];
  }
  for (long k = 1; k < prec; ++k) {
    mpq_class s = 0;
    for (long i = 1; i <= k; ++i) s += i * a[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
    ld[static_cast<size_t>(k)] = s;
  }
  std::map<long, mpq_class> e;
  for (long n = 1; n < prec; ++n) {
    mpq_class s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s += mobius(n / d) * (-ld[static_cast<size_t>(d)]);
    e[n] = s / n;
  }
  return e;
}

}  // namespace oracle
