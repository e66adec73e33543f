#include "singmod/fricke.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <map>
#include <mutex>
#include <stdexcept>

#include "singmod/forms.hpp"
#include "singmod/jacobi.hpp"

namespace singmod {

namespace {

constexpr long kMonster[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};

long hauptmodulConstant(long p) {
  switch (p) {
    case 2: return 24;
    case 3: return 12;
    case 5: return 6;
    case 7: return 4;
    case 13: return 2;
    default: throw std::domain_error("eta method unavailable; use rademacher");
  }
}

// y^-1 mod n for gcd(y, n) = 1.
long inverseMod(long y, long n) {
  long r0 = positiveMod(y, n), r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return positiveMod(s0, n);
}

struct Accumulator {
  long double sum = 0;
  std::vector<long double> partial;
  void add(long double t) {
    sum += t;
    partial.push_back(sum);
  }
  // Mean distance of the last-decade partial sums from the final value.
  double tail() const {
    if (partial.size() < 10) return 0;
    size_t from = partial.size() - partial.size() / 10;
    long double acc = 0;
    for (size_t i = from; i < partial.size(); ++i) acc += std::fabs(partial[i] - sum);
    return static_cast<double>(acc / static_cast<long double>(partial.size() - from));
  }
};

const HauptmodulSpec& cachedHauptmodul(long p, long prec) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, HauptmodulSpec> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, prec});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, prec), hauptmodulEta(p, prec)).first;
  return it->second;
}

// (a tau + b) / (c tau + d)
BigComplex mobius(const BigComplex& tau, long a, long b, long c, long d) {
  BigComplex num = tau * BigFloat(a);
  num.re += b;
  BigComplex den = tau * BigFloat(c);
  den.re += d;
  return num / den;
}

std::pair<long, long> bezout(long x, long y) {
  // returns (s, t) with s x + t y = 1; requires gcd(x, y) = 1
  long r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = floorDiv(r0, r1);
    long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return {s0 * r0, t0 * r0};
}

// Sum of j_p over the Gamma0(p)-classes of Q_{d,p,beta} with Gamma0(p)-stabilizer weights.
BigComplex weightedSum(const ClassList& cl, const std::function<BigComplex(const BigComplex&)>& f) {
  BigComplex sum;
  for (const auto& r : cl.reps) sum += f(root(r.form)) * (BigFloat(1) / r.levelWeight);
  return sum;
}

std::vector<long> admissibleBetas(long d, long p) {
  std::vector<long> out;
  for (long x = 0; x < 2 * p; ++x)
    if (positiveMod(x * x + d, 4 * p) == 0) out.push_back(x);
  return out;
}

}  // namespace

bool isMonsterPrime(long p) {
  for (long q : kMonster)
    if (q == p) return true;
  return false;
}

HauptmodulSpec hauptmodulEta(long p, long prec) {
  long c = hauptmodulConstant(p);
  HauptmodulSpec h;
  h.p = p;
  h.method = HauptmodulMethod::Eta;
  h.exponent = 24 / (p - 1);
  h.prefactorPower = h.exponent / 2;
  Integer pre = 1;
  for (long i = 0; i < h.prefactorPower; ++i) pre *= p;
  QSeries up = etaQuotient({{p, h.exponent}, {1, -h.exponent}}, prec);
  QSeries down = etaQuotient({{1, h.exponent}, {p, -h.exponent}}, prec);
  QSeries f = (up * Rational(pre) + down).simplified();
  f += QSeries(Rational(c));
  h.constantRemoved = c;
  if (f.denom() != 1 || f.coeff(-1) != 1 || f.coeff(0) != 0) throw std::logic_error("hauptmodul not canonical");
  if (!f.hasIntegerCoefficients()) throw std::logic_error("hauptmodul not integral");
  h.series = f.truncated(prec);
  return h;
}

HauptmodulSpec hauptmodulRademacher(long p, long count, long cMax, long dMax) {
  if (!isMonsterPrime(p)) throw std::domain_error("p is not a Monster prime");
  HauptmodulSpec h;
  h.p = p;
  h.method = HauptmodulMethod::Rademacher;
  h.exponent = (24 % (p - 1) == 0) ? 24 / (p - 1) : 0;
  std::vector<long> nus;
  for (long nu = 1; nu <= count; ++nu) nus.push_back(nu);
  for (const auto& r : rademacherCoeffs(p, nus, cMax, dMax)) h.estimates.push_back(r.estimate);
  return h;
}

double kloosterman(long m, long n, long c) {
  if (c < 1) throw std::domain_error("modulus must be positive");
  long double s = 0;
  for (long d = 0; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    long dbar = c == 1 ? 0 : inverseMod(d, c);
    long e = positiveMod(positiveMod(m, c) * d % c + positiveMod(n, c) * dbar % c, c);
    s += std::cos(2 * M_PI * static_cast<long double>(e) / static_cast<long double>(c));
  }
  return static_cast<double>(s);
}

double besselI1(double x) {
  if (x < 0) throw std::domain_error("bessel_I1 needs x >= 0");
  double h = x / 2, t = h, s = 0;
  for (long k = 0; t != 0; ++k) {
    double next = s + t;
    if (next == s) break;
    s = next;
    t *= h * h / static_cast<double>((k + 1) * (k + 2));
  }
  return s;
}

std::vector<RademacherResult> rademacherCoeffs(long p, const std::vector<long>& nus, long cMax, long dMax) {
  if (!isMonsterPrime(p)) throw std::domain_error("p is not a Monster prime");
  for (long nu : nus)
    if (nu < 1) throw std::domain_error("nu must be positive");
  size_t k = nus.size();
  std::vector<Accumulator> fam1(k), fam2(k);
  std::vector<long double> cosTable;
  std::vector<long double> K(k);
  auto kloostermanMany = [&](long c, long twist) {
    cosTable.resize(static_cast<size_t>(c));
    for (long i = 0; i < c; ++i) cosTable[static_cast<size_t>(i)] = std::cos(2 * M_PI * static_cast<long double>(i) / c);
    std::fill(K.begin(), K.end(), 0.0L);
    for (long d = 0; d < c; ++d) {
      if (std::gcd(d, c) != 1) continue;
      long dbar = c == 1 ? 0 : inverseMod(d, c);
      for (size_t i = 0; i < k; ++i) {
        long m = (nus[i] % c) * twist % c;
        long e = positiveMod(m * d - dbar, c);
        K[i] += cosTable[static_cast<size_t>(e)];
      }
    }
  };
  for (long c = 1; c <= cMax; ++c) {
    long mod = c * p;
    kloostermanMany(mod, 1);
    for (size_t i = 0; i < k; ++i) {
      long double snu = std::sqrt(static_cast<long double>(nus[i]));
      long double arg = 4 * M_PI * snu / mod;
      fam1[i].add(K[i] * 2 * M_PI / (mod * snu) * besselI1(static_cast<double>(arg)));
    }
  }
  for (long d = 1; d <= dMax; ++d) {
    if (d % p == 0) continue;
    long pbar = d == 1 ? 0 : inverseMod(p, d);
    kloostermanMany(d, d == 1 ? 0 : pbar);
    for (size_t i = 0; i < k; ++i) {
      long double s = std::sqrt(static_cast<long double>(nus[i]) * p);
      long double arg = 4 * M_PI * std::sqrt(static_cast<long double>(nus[i])) / (d * std::sqrt(static_cast<long double>(p)));
      fam2[i].add(K[i] * 2 * M_PI / (d * s) * besselI1(static_cast<double>(arg)));
    }
  }
  std::vector<RademacherResult> out;
  for (size_t i = 0; i < k; ++i) {
    RademacherResult r;
    r.p = p;
    r.nu = nus[i];
    r.estimate = static_cast<double>(fam1[i].sum + fam2[i].sum);
    r.cMax = cMax;
    r.dMax = dMax;
    r.tailEstimate = fam1[i].tail() + fam2[i].tail();
    out.push_back(r);
  }
  return out;
}

RademacherResult rademacherCoeff(long p, long nu, long cMax, long dMax) {
  return rademacherCoeffs(p, {nu}, cMax, dMax).front();
}

BigComplex reduceFricke(const BigComplex& tau, long p) {
  BigComplex z = tau;
  for (int iter = 0; iter < 200; ++iter) {
    long shift = static_cast<long>(std::floor(toDouble(z.re) + 0.5));
    z.re -= shift;
    double x = toDouble(z.re), y = toDouble(z.im);
    // Gamma0(p): Im / |c tau + d|^2 with p | c. Fricke coset: Im / (p |z tau + w|^2).
    double best = 1 - 1e-12;
    long bc = 0, bd = 0;
    bool fricke = false;
    long cmax = static_cast<long>(std::ceil(1 / y)) + 2;
    for (long c = 1; c <= cmax; ++c) {
      long d0 = static_cast<long>(std::floor(-c * x));
      for (long d = d0 - 1; d <= d0 + 2; ++d) {
        double s = (c * x + d) * (c * x + d) + c * c * y * y;
        if (c % p == 0 && std::gcd(c, std::labs(d)) == 1 && s < best) {
          best = s;
          bc = c;
          bd = d;
          fricke = false;
        }
        double sf = p * s;
        if (std::gcd(c, p * std::labs(d)) == 1 && sf < best) {
          best = sf;
          bc = c;
          bd = d;
          fricke = true;
        }
      }
    }
    if (bc == 0) return z;
    if (!fricke) {
      auto [s, t] = bezout(bd, bc);  // s d + t c = 1 -> a = s, b = -t
      z = mobius(z, s, -t, bc, bd);
    } else {
      // p x w - y z = 1 with (z, w) = (bc, bd): tau -> (p x tau + y) / (p z tau + p w)
      auto [s, t] = bezout(p * bd, -bc);
      z = mobius(z, p * s, t, p * bc, p * bd);
    }
  }
  throw std::runtime_error("point reduction did not converge");
}

namespace {

void fillTrace(FrickeTraceRecord& rec) {
  rec.classes = levelClasses(rec.d, rec.p, rec.beta);
  const ClassList& cl = rec.classes;
  long p = rec.p;
  RoundedValue v = roundWithEscalation(digitsForDiscriminant(static_cast<double>(rec.d)), 40, [&](long prec) {
    const QSeries& f = cachedHauptmodul(p, prec).series;
    return weightedSum(cl, [&](const BigComplex& a) { return evalSeries(f, reduceFricke(a, p), 15).value; });
  });
  rec.value = v.value;
  rec.raw = v.raw;
  rec.residual = v.residual;
  rec.digits = v.digits;
  rec.seriesPrec = v.seriesPrec;
}

}  // namespace

FrickeTraceRecord frickeTraceBeta(long p, long d, long beta) {
  FrickeTraceRecord rec;
  rec.p = p;
  rec.d = d;
  rec.beta = beta;
  if (d == -1 || d == 0) {
    rec.value = d == -1 ? -1 : 2;
    rec.raw = rec.value.get_str();
    rec.starConvention = Rational(rec.value);
    return rec;
  }
  hauptmodulConstant(p);
  fillTrace(rec);
  // Mass formula: Gamma0(p)* has index 2 over Gamma0(p), so weighting the
  // Gamma0(p)*-orbits on all of Q_{d,p} by their stabilizers halves the sum
  // over Gamma0(p)-classes.
  Rational star = 0;
  for (long b : admissibleBetas(d, p)) {
    if (b == beta) {
      star += Rational(rec.value);
      continue;
    }
    FrickeTraceRecord other;
    other.p = p;
    other.d = d;
    other.beta = b;
    fillTrace(other);
    star += Rational(other.value);
  }
  rec.starConvention = star / 2;
  return rec;
}

FrickeTraceRecord frickeTrace(long p, long d) {
  long beta = d > 0 ? smallestBeta(d, p) : 0;
  return frickeTraceBeta(p, d, beta);
}

QSeries heckeWeight0(const QSeries& f, long m, bool requireCanonical) {
  if (m < 1) throw std::domain_error("m must be positive");
  QSeries g = f.simplified();
  if (g.denom() != 1) throw std::domain_error("hecke_weight0 needs integral exponents");
  bool canonical = g.valuationNum() == -1 && g.coeff(-1) == 1 && g.coeff(0) == 0;
  if (requireCanonical && !canonical) throw std::domain_error("input not a canonical hauptmodul");
  long P = g.precNum();
  long outPrec = -floorDiv(-P, m);
  long lo = g.valuationNum().value_or(0);
  std::map<long, Rational> t;
  for (long n = std::min(lo * m, floorDiv(lo, m)); n < outPrec; ++n) {
    if (n == 0) continue;
    Rational v = 0;
    for (long a : divisors(m)) {
      if (n % a != 0) continue;
      long k = m * n / (a * a);
      if (k < lo) continue;
      v += Rational(m / a) * g.coeff(k);
    }
    if (sgn(v) != 0) t[n] = v;
  }
  QSeries out = QSeries::fromTerms(t, outPrec);
  if (canonical && (out.valuationNum() != -m || out.coeff(-m) != 1))
    throw std::domain_error("input not a canonical hauptmodul");
  return out;
}

std::vector<Integer> faberPolynomial(const QSeries& f, long m) {
  if (m < 1) throw std::domain_error("m must be positive");
  std::vector<QSeries> powers{QSeries(Rational(1))};
  for (long k = 1; k <= m; ++k) powers.push_back(powers.back() * f);
  std::vector<Integer> c(static_cast<size_t>(m + 1));
  c[static_cast<size_t>(m)] = 1;
  QSeries acc = powers[static_cast<size_t>(m)];
  for (long k = m - 1; k >= 0; --k) {
    Rational v = acc.coeff(-k);
    if (!isIntegral(v)) throw std::domain_error("input not a canonical hauptmodul");
    c[static_cast<size_t>(k)] = -v.get_num();
    acc -= powers[static_cast<size_t>(k)] * v;
  }
  return c;
}

GeneralizedFrickeTrace frickeGeneralizedTrace(long p, long m, long d) {
  if (p != 2 && p != 3 && p != 5) throw std::domain_error("generalized Fricke traces need p in {2, 3, 5}");
  if (m < 1) throw std::domain_error("m must be positive");
  GeneralizedFrickeTrace out;
  ClassList cl = levelClasses(d, p, smallestBeta(d, p));
  std::vector<Integer> poly = faberPolynomial(cachedHauptmodul(p, m + 2).series, m);
  unsigned digits = digitsForDiscriminant(static_cast<double>(d) * static_cast<double>(m * m));
  RoundedValue v = roundWithEscalation(digits, 40, [&](long prec) {
    const QSeries& f = cachedHauptmodul(p, prec).series;
    return weightedSum(cl, [&](const BigComplex& a) {
      BigComplex x = evalSeries(f, reduceFricke(a, p), 15).value;
      BigComplex s;
      for (size_t k = poly.size(); k-- > 0;) {
        s *= x;
        s.re += toBig(poly[k]);
      }
      return s;
    });
  });
  out.value = v.value;
  out.residual = v.residual;
  Integer rhs = 0;
  for (long u : divisors(m)) rhs += (u % p == 0 ? 2 : 1) * u * coeffBLevelP(p, u * u, d);
  out.jacobi = -rhs;
  if (out.value != out.jacobi)
    throw std::runtime_error("theorem check failed: numeric " + out.value.get_str() + " vs " + out.jacobi.get_str());
  return out;
}

}  // namespace singmod
