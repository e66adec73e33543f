#include "singmod/moduli.hpp"

#include <cmath>
#include <mutex>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "singmod/forms.hpp"

namespace singmod {

namespace {

struct InsufficientPrecision : std::runtime_error {
  InsufficientPrecision() : std::runtime_error("insufficient series precision") {}
};

double log10Abs(const Rational& x) {
  if (sgn(x) == 0) return -1e300;
  long e1 = 0, e2 = 0;
  double n = mpz_get_d_2exp(&e1, x.get_num_mpz_t());
  double d = mpz_get_d_2exp(&e2, x.get_den_mpz_t());
  return std::log10(std::fabs(n / d)) + static_cast<double>(e1 - e2) * std::log10(2.0);
}

double logSumExp10(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log10(1 + std::pow(10.0, b - a));
}

}  // namespace

std::string formatBig(const BigFloat& x, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << x;
  return os.str();
}

EvalResult evalSeries(const QSeries& f, const BigComplex& tau, int guard) {
  EvalResult r;
  long D = f.denom();
  double y = toDouble(tau.im);
  if (y <= 0) throw std::domain_error("tau must lie in the upper half-plane");
  if (!f.isExact()) {
    const auto& c = f.dense();
    long lo = f.loNum();
    long P = f.precNum();
    double pole = lo < 0 ? -static_cast<double>(lo) / static_cast<double>(D) : 0.0;
    double kappa = 4 * M_PI * std::sqrt(std::max(pole, 1.0));
    double ln10 = std::log(10.0);
    double M = 0;
    bool any = false;
    for (size_t i = 0; i < c.size(); ++i) {
      long n = lo + static_cast<long>(i);
      if (sgn(c[i]) == 0 || n <= 0 || 2 * n < P) continue;
      double x = static_cast<double>(n) / static_cast<double>(D);
      double v = log10Abs(c[i]) - kappa * std::sqrt(x) / ln10;
      if (!any || v > M) M = v;
      any = true;
    }
    double tail = -1e300;
    for (long n = std::max(P, 1L);; ++n) {
      double x = static_cast<double>(n) / static_cast<double>(D);
      double t = M + (kappa * std::sqrt(x) - 2 * M_PI * x * y) / ln10;
      tail = logSumExp10(tail, t);
      if (t < tail - 20 && 2 * M_PI * y * std::sqrt(x) > kappa) break;
      if (n > P + 1000000) break;
    }
    r.log10Tail = tail;
    if (tail > -guard) throw InsufficientPrecision();
  } else {
    r.log10Tail = -1e300;
  }
  BigComplex w = expTwoPiI(BigComplex(tau.re / D, tau.im / D));
  BigComplex acc;
  const auto& c = f.dense();
  for (size_t i = c.size(); i-- > 0;) {
    acc *= w;
    if (sgn(c[i]) != 0) acc.re += toBig(c[i]);
  }
  r.value = acc * complexPow(w, f.loNum());
  return r;
}

RoundedValue roundWithEscalation(unsigned digits, long prec, const std::function<BigComplex(long)>& compute) {
  for (int attempt = 0; attempt <= 3; ++attempt) {
    DigitsScope scope(digits);
    BigComplex z;
    try {
      z = compute(prec);
    } catch (const InsufficientPrecision&) {
      digits *= 2;
      prec *= 2;
      continue;
    }
    RoundedValue out;
    out.value = roundToInteger(z.re);
    BigFloat res = abs(z.re - toBig(out.value)) + abs(z.im);
    out.residual = toDouble(res);
    out.raw = formatBig(z.re, 30);
    out.digits = digits;
    out.seriesPrec = prec;
    if (out.residual < 1e-6) return out;
    digits *= 2;
    prec *= 2;
  }
  throw std::runtime_error("precision failure");
}

const QSeries& bigJSeries(long prec) {
  static std::mutex mu;
  static std::map<long, QSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, standardForm(StandardForm::BigJ, prec)).first;
  return it->second;
}

TraceRecord trace(long d) {
  TraceRecord rec;
  rec.d = d;
  if (d == -1 || d == 0) {
    rec.value = d == -1 ? -1 : 2;
    rec.raw = rec.value.get_str();
    return rec;
  }
  if (d < 0 || (d % 4 != 0 && d % 4 != 3)) throw std::domain_error("d not ≡ 0,3 mod 4");
  rec.classes = enumerateClasses(d, false);
  const ClassList& cl = rec.classes;
  RoundedValue v = roundWithEscalation(digitsForDiscriminant(static_cast<double>(d)), 40, [&](long prec) {
    const QSeries& J = bigJSeries(prec);
    BigComplex sum;
    for (const auto& r : cl.reps) {
      BigComplex val = evalSeries(J, root(r.form), 15).value;
      sum += val * (BigFloat(1) / r.w);
    }
    return sum;
  });
  rec.value = v.value;
  rec.raw = v.raw;
  rec.residual = v.residual;
  rec.digits = v.digits;
  rec.seriesPrec = v.seriesPrec;
  return rec;
}

std::string fracTagName(FracTag t) {
  switch (t) {
    case FracTag::None: return "none";
    case FracTag::CubeRootX: return "X^(1/3)";
    case FracTag::SqrtXMinus1728: return "(X-1728)^(1/2)";
  }
  return "none";
}

std::vector<Integer> roundedPolyFromRoots(const std::vector<BigComplex>& roots, double* residual) {
  std::vector<BigComplex> c{BigComplex(BigFloat(1))};
  for (const auto& r : roots) {
    std::vector<BigComplex> n(c.size() + 1);
    for (size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= c[i] * r;
    }
    c = std::move(n);
  }
  std::vector<Integer> out(c.size());
  double worst = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    out[i] = roundToInteger(c[i].re);
    double res = toDouble(abs(c[i].re - toBig(out[i])) + abs(c[i].im));
    worst = std::max(worst, res);
  }
  if (residual) *residual = worst;
  return out;
}

HilbertPoly hilbertPoly(long d) {
  if (d <= 0 || (d % 4 != 0 && d % 4 != 3)) throw std::domain_error("d not ≡ 0,3 mod 4");
  HilbertPoly hp;
  hp.d = d;
  ClassList cl = enumerateClasses(d, false);
  double mag = 0;
  std::vector<BQF> forms;
  for (const auto& r : cl.reps) {
    if (r.w == 3) hp.tag = FracTag::CubeRootX;
    if (r.w == 2) hp.tag = FracTag::SqrtXMinus1728;
    if (r.w != 1) continue;
    forms.push_back(r.form);
    mag += M_PI * std::sqrt(static_cast<double>(d)) / r.form.a / std::log(10.0) + 1;
  }
  unsigned digits = static_cast<unsigned>(mag) + 25;
  long prec = 40;
  for (int attempt = 0; attempt <= 3; ++attempt, digits *= 2, prec *= 2) {
    DigitsScope scope(digits);
    const QSeries& J = bigJSeries(prec);
    std::vector<BigComplex> roots;
    try {
      for (const auto& f : forms) {
        BigComplex v = evalSeries(J, root(f), 15).value;
        v.re += 744;
        roots.push_back(v);
      }
    } catch (const std::runtime_error&) {
      continue;
    }
    hp.coeffs = roundedPolyFromRoots(roots, &hp.residual);
    if (hp.residual < 1e-6) return hp;
  }
  throw std::runtime_error("precision failure");
}

QSeries composePoly(const std::vector<Integer>& coeffs, const QSeries& x) {
  QSeries acc;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (first) {
      acc = QSeries(Rational(coeffs[i]));
      first = false;
    } else {
      acc = acc * x + QSeries(Rational(coeffs[i]));
    }
  }
  return acc;
}

FaberPoly faber(long m, long prec) {
  if (m < 0) throw std::domain_error("m must be nonnegative");
  FaberPoly fp;
  fp.m = m;
  fp.jCoeffs.assign(static_cast<size_t>(m + 1), 0);
  fp.jCoeffs[static_cast<size_t>(m)] = 1;
  if (m == 0) {
    fp.series = QSeries(Rational(1)).truncated(prec);
    return fp;
  }
  QSeries j = standardForm(StandardForm::J, prec + m);
  std::vector<QSeries> powers{QSeries(Rational(1))};
  for (long k = 1; k <= m; ++k) powers.push_back(powers.back() * j);
  QSeries s = powers[static_cast<size_t>(m)];
  for (long k = m - 1; k >= 0; --k) {
    Rational c = s.coeff(-k);
    if (sgn(c) == 0) continue;
    if (c.get_den() != 1) throw std::logic_error("non-integral Faber coefficient");
    s -= powers[static_cast<size_t>(k)] * c;
    fp.jCoeffs[static_cast<size_t>(k)] -= c.get_num();
  }
  fp.series = s.truncated(prec);
  return fp;
}

Integer generalizedTrace(long m, long d, double* residual) {
  if (m < 1) throw std::domain_error("m must be positive");
  ClassList cl = enumerateClasses(d, false);
  unsigned digits = digitsForDiscriminant(static_cast<double>(d) * static_cast<double>(m * m));
  std::map<long, QSeries> cache;
  RoundedValue v = roundWithEscalation(digits, 40 + 4 * m, [&](long prec) {
    auto it = cache.find(prec);
    if (it == cache.end()) it = cache.emplace(prec, faber(m, prec).series).first;
    BigComplex sum;
    for (const auto& r : cl.reps) sum += evalSeries(it->second, root(r.form), 15).value * (BigFloat(1) / r.w);
    return sum;
  });
  if (residual) *residual = v.residual;
  return v.value;
}

QSeries lambdaSeries(long d, long prec) {
  HilbertPoly hp = hilbertPoly(d);
  long deg = static_cast<long>(hp.coeffs.size()) - 1;
  long jp = prec + 2 * deg + 4;
  QSeries j = standardForm(StandardForm::J, jp);
  QSeries dj = qDerivative(j);
  QSeries lam = QSeries::zero(prec);
  if (deg > 0) {
    QSeries P = composePoly(hp.coeffs, j);
    std::vector<Integer> der;
    for (size_t k = 1; k < hp.coeffs.size(); ++k) der.push_back(hp.coeffs[k] * static_cast<long>(k));
    QSeries dP = composePoly(der, j) * dj;
    lam = -(dP / P);
  }
  if (hp.tag == FracTag::CubeRootX) lam -= dj / j * Rational(1, 3);
  if (hp.tag == FracTag::SqrtXMinus1728) lam -= dj / (j - QSeries(Rational(1728))) * Rational(1, 2);
  if (lam.precNum() < prec) throw std::logic_error("lambda series precision shortfall");
  return lam.truncated(prec);
}

}  // namespace singmod
