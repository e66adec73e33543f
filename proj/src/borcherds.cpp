#include "singmod/borcherds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "singmod/forms.hpp"
#include "singmod/fricke.hpp"
#include "singmod/moduli.hpp"
#include "singmod/quadforms.hpp"

namespace singmod {

namespace {

// c <- c * (1 - q^n)^e on exponents 0..c.size()-1.
void mulBinomialPower(std::vector<Rational>& c, long n, const Rational& e) {
  long P = static_cast<long>(c.size());
  std::vector<Rational> b;
  for (long j = 0; j * n < P; ++j) {
    Rational v = binomial(e, j);
    b.push_back(j % 2 == 0 ? v : Rational(-v));
  }
  for (long i = P - 1; i >= 0; --i) {
    Rational acc = 0;
    for (long j = 0; j < static_cast<long>(b.size()) && j * n <= i; ++j)
      if (sgn(b[static_cast<size_t>(j)]) != 0) acc += b[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j * n)];
    c[static_cast<size_t>(i)] = acc;
  }
}

ProductCheck compare(const QSeries& lhs, const ProductExpansion& rhs, long prec) {
  ProductCheck out;
  QSeries r = rhs.expand();
  auto lv = lhs.valuationNum();
  long lo = lv.value_or(0);
  long hi = lo + prec;
  if (lhs.precNum() < hi || r.precNum() < hi) throw std::logic_error("verification series too short");
  out.ok = true;
  for (long e = std::min(lo, r.valuationNum().value_or(lo)); e < hi; ++e)
    if (lhs.coeff(e) != r.coeff(e)) {
      out.ok = false;
      out.firstMismatch = e;
      break;
    }
  out.prec = prec;
  return out;
}

long lcmOf(const std::vector<long>& v) {
  long l = 1;
  for (long x : v) l = std::lcm(l, x);
  return l;
}

}  // namespace

QSeries ProductExpansion::expand() const {
  if (!isIntegral(h)) throw std::domain_error("fractional leading exponent; raise to a power first");
  std::vector<Rational> c(static_cast<size_t>(std::max(prec, 1L)), Rational(0));
  c[0] = 1;
  for (const auto& [n, e] : exponents)
    if (n < prec && sgn(e) != 0) mulBinomialPower(c, n, e);
  long s = h.get_num().get_si();
  return QSeries::fromDense(s, std::move(c), s + prec);
}

ProductExpansion ProductExpansion::scaled(long k) const {
  ProductExpansion r = *this;
  r.h *= k;
  r.weight *= k;
  for (auto& [n, e] : r.exponents) e *= k;
  return r;
}

QSeries xiSeries(long prec) {
  std::map<long, Rational> t;
  t[0] = Rational(-1, 12);
  for (long d = 1; d < prec; ++d) {
    Rational h = hurwitz(d);
    if (sgn(h) != 0) t[d] = h;
  }
  return QSeries::fromTerms(t, prec);
}

ProductExpansion psiLift(const HalfIntForm& f, long prec) {
  if (f.weight2 != 1 || f.p != 1) throw std::domain_error("psi lift needs a weight 1/2 level 4 form");
  ProductExpansion out;
  long pole = f.coeffs.empty() ? 0 : -std::min(0L, f.coeffs.begin()->first);
  QSeries xi = xiSeries(pole + 4);
  Rational h = 0;
  for (const auto& [e, v] : f.coeffs) {
    if (e > 0) break;
    h += Rational(v) * xi.coeff(-e);
  }
  // psi(f) = q^{-h} prod (1 - q^n)^{A(n^2)}
  out.h = -h;
  out.weight = Rational(f.coeff(0));
  out.prec = prec;
  if ((prec - 1) * (prec - 1) >= f.prec) throw std::domain_error("form known to too few terms for this precision");
  for (long n = 1; n < prec; ++n) {
    Integer a = f.coeff(n * n);
    if (sgn(a) != 0) out.exponents[n] = Rational(a);
  }
  return out;
}

ProductExpansion productExponents(const QSeries& series, bool requireIntegral) {
  QSeries s = series.simplified();
  if (s.denom() != 1) throw std::domain_error("product exponents need integral exponents");
  auto v = s.valuationNum();
  if (!v) throw std::domain_error("zero series");
  if (s.coeff(*v) != 1) throw std::domain_error("leading coefficient must be 1");
  ProductExpansion out;
  out.h = *v;
  out.prec = s.precNum() - *v;
  std::vector<Rational> c(static_cast<size_t>(out.prec));
  for (long i = 0; i < out.prec; ++i) c[static_cast<size_t>(i)] = s.coeff(*v + i);
  for (long n = 1; n < out.prec; ++n) {
    Rational e = -c[static_cast<size_t>(n)];
    if (sgn(e) == 0) continue;
    if (requireIntegral && !isIntegral(e)) throw std::domain_error("not a Borcherds product at this precision");
    out.exponents[n] = e;
    mulBinomialPower(c, n, -e);
  }
  return out;
}

ProductCheck verifyProductLevel1(long d, long prec) {
  HilbertPoly hp = hilbertPoly(d);
  long L = hp.tag == FracTag::CubeRootX ? 3 : hp.tag == FracTag::SqrtXMinus1728 ? 2 : 1;
  HalfIntForm f = basisF(d, (prec - 1) * (prec - 1) + 1);
  ProductExpansion rhs = psiLift(f, prec);
  if (rhs.h != -hurwitz(d)) throw std::logic_error("leading exponent differs from H(d)");
  long deg = static_cast<long>(hp.coeffs.size()) - 1;
  long jp = prec + L * (deg + 1) + 4;
  QSeries j = standardForm(StandardForm::J, jp);
  QSeries lhs = composePoly(hp.coeffs, j).pow(L);
  if (hp.tag == FracTag::CubeRootX) lhs = lhs * j;
  if (hp.tag == FracTag::SqrtXMinus1728) lhs = lhs * (j - QSeries(Rational(1728)));
  ProductExpansion r = rhs.scaled(L);
  r.prec = prec;
  ProductCheck out = compare(lhs, r, prec);
  out.h = hurwitz(d);
  out.power = L;
  out.exponents = rhs.exponents;
  return out;
}

ProductCheck verifyProductFricke(long p, long d, long prec) {
  if (p != 2 && p != 3 && p != 5) throw std::domain_error("Fricke products need p in {2, 3, 5}");
  ClassList cl = levelClasses(d, p, smallestBeta(d, p));
  std::vector<long> ws;
  Rational h = 0;
  for (const auto& r : cl.reps) {
    ws.push_back(r.levelWeight);
    h += Rational(1, r.levelWeight);
  }
  long L = lcmOf(ws);
  // Polynomial prod (X - j_p(alpha_Q))^{L / w_Q}, rounded.
  std::vector<Integer> poly;
  double mag = 0;
  for (const auto& r : cl.reps)
    mag += (L / r.levelWeight) * (2 * M_PI * toDouble(root(r.form).im) / std::log(10.0) + 2);
  unsigned digits = static_cast<unsigned>(mag) + 30;
  long sprec = 40;
  for (int attempt = 0; attempt <= 3 && poly.empty(); ++attempt, digits *= 2, sprec *= 2) {
    DigitsScope scope(digits);
    const QSeries f = hauptmodulEta(p, sprec).series;
    std::vector<BigComplex> roots;
    try {
      for (const auto& r : cl.reps) {
        BigComplex v = evalSeries(f, reduceFricke(root(r.form), p), 15).value;
        for (long k = 0; k < L / r.levelWeight; ++k) roots.push_back(v);
      }
    } catch (const std::runtime_error&) {
      continue;
    }
    double res = 0;
    std::vector<Integer> c = roundedPolyFromRoots(roots, &res);
    if (res < 1e-6) poly = c;
  }
  if (poly.empty()) throw std::runtime_error("precision failure");
  long deg = static_cast<long>(poly.size()) - 1;
  QSeries jp = hauptmodulEta(p, prec + deg + 4).series;
  QSeries lhs = composePoly(poly, jp);

  HalfIntForm f = basisFLevelP(p, d, (prec - 1) * (prec - 1) + 1);
  ProductExpansion rhs;
  rhs.h = -h;
  rhs.prec = prec;
  for (long n = 1; n < prec; ++n) {
    Integer a = f.coeff(n * n);
    if (n % p == 0) a *= 2;
    if (sgn(a) != 0) rhs.exponents[n] = Rational(a);
  }
  ProductExpansion r = rhs.scaled(L);
  r.prec = prec;
  ProductCheck out = compare(lhs, r, prec);
  out.h = h;
  out.power = L;
  out.exponents = rhs.exponents;
  return out;
}

ExponentTraceCheck exponentTraceCheck(long u, long d) {
  ExponentTraceCheck out;
  out.lhs = u * coeffA(1, u * u, d);
  for (long v : divisors(u)) {
    int mu = mobius(u / v);
    if (mu != 0) out.rhs += mu * generalizedTrace(v, d);
  }
  out.ok = out.lhs == out.rhs;
  return out;
}

}  // namespace singmod
