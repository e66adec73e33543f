#include <stdexcept>

#include "singmod/forms.hpp"
#include "singmod/moduli.hpp"

namespace singmod {

namespace {

// Elements of Z[zeta_N] for prime N, stored modulo the cyclotomic
// polynomial 1 + x + ... + x^(N-1) as N-1 integer coefficients.
class Cyclo {
 public:
  explicit Cyclo(long N = 2) : c_(static_cast<size_t>(N - 1)) {}
  static Cyclo fromZetaPower(long N, long k, const Integer& v) {
    std::vector<Integer> full(static_cast<size_t>(N));
    full[static_cast<size_t>(positiveMod(k, N))] = v;
    return reduce(full);
  }
  long N() const { return static_cast<long>(c_.size()) + 1; }
  bool isZero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }
  // Integer value if the element lies in Z.
  bool isRationalInteger(Integer* v) const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    *v = c_.empty() ? Integer(0) : c_[0];
    return true;
  }
  Cyclo& operator+=(const Cyclo& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long N = a.N();
    std::vector<Integer> full(static_cast<size_t>(N));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(full[(i + j) % static_cast<size_t>(N)].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return reduce(full);
  }

 private:
  static Cyclo reduce(const std::vector<Integer>& full) {
    long N = static_cast<long>(full.size());
    Cyclo r(N);
    const Integer& top = full[static_cast<size_t>(N - 1)];
    for (long i = 0; i < N - 1; ++i) r.c_[static_cast<size_t>(i)] = full[static_cast<size_t>(i)] - top;
    return r;
  }
  std::vector<Integer> c_;
};

// Series in q^(1/N) with Z[zeta_N] coefficients, known below precNum.
struct CycloSeries {
  long N = 2;
  long precNum = 0;
  std::map<long, Cyclo> terms;

  CycloSeries mul(const CycloSeries& o) const {
    CycloSeries r;
    r.N = N;
    long va = terms.empty() ? precNum : terms.begin()->first;
    long vb = o.terms.empty() ? o.precNum : o.terms.begin()->first;
    r.precNum = std::min(precNum + vb, o.precNum + va);
    for (const auto& [e1, x] : terms)
      for (const auto& [e2, y] : o.terms) {
        if (e1 + e2 >= r.precNum) break;
        auto it = r.terms.try_emplace(e1 + e2, Cyclo(N)).first;
        it->second += x * y;
      }
    r.prune();
    return r;
  }
  void add(const CycloSeries& o, bool subtract) {
    precNum = std::min(precNum, o.precNum);
    for (const auto& [e, x] : o.terms) {
      if (e >= precNum) break;
      auto it = terms.try_emplace(e, Cyclo(N)).first;
      if (subtract)
        it->second -= x;
      else
        it->second += x;
    }
    prune();
  }
  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = (it->second.isZero() || it->first >= precNum) ? terms.erase(it) : std::next(it);
  }
};

QSeries toIntegralSeries(const CycloSeries& s) {
  std::map<long, Rational> t;
  for (const auto& [e, x] : s.terms) {
    Integer v;
    if (!x.isRationalInteger(&v)) throw std::logic_error("symmetric function has non-rational coefficient");
    if (e % s.N != 0) throw std::logic_error("symmetric function has fractional exponent");
    t.emplace(e / s.N, Rational(v));
  }
  return QSeries::fromTerms(t, -floorDiv(-s.precNum, s.N), 1);
}

}  // namespace

long ModularPolynomial::degreeX() const {
  long m = 0;
  for (const auto& [ik, v] : coeffs) m = std::max(m, ik.first);
  return m;
}

long ModularPolynomial::degreeY() const {
  long m = 0;
  for (const auto& [ik, v] : coeffs) m = std::max(m, ik.second);
  return m;
}

std::vector<Integer> ModularPolynomial::diagonal() const {
  std::vector<Integer> out(static_cast<size_t>(degreeX() + degreeY() + 1));
  for (const auto& [ik, v] : coeffs) out[static_cast<size_t>(ik.first + ik.second)] += v;
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

ModularPolynomial modularPolynomial(long n, long prec) {
  if (n != 2 && n != 3) throw std::domain_error("unsupported degree");
  long sigma = n + 1;
  // Roots need exponents below prec + n * sigma to leave prec after the
  // products lose up to the total pole order.
  long target = prec + n * sigma + 2;
  long jPrec = target * n + 2;
  QSeries j = standardForm(StandardForm::J, jPrec);
  auto jTerms = j.terms();
  std::vector<CycloSeries> roots;
  for (long a : {1L, n}) {
    long d = n / a;
    for (long b = 0; b < d; ++b) {
      CycloSeries r;
      r.N = n;
      // Exponent a*k/d written over denominator n.
      r.precNum = std::min(target * n, a * jPrec * (n / d));
      for (const auto& [k, v] : jTerms) {
        long e = a * k * (n / d);
        if (e >= r.precNum) continue;
        long zeta = d == 1 ? 0 : b * k * (n / d);
        r.terms.emplace(e, Cyclo::fromZetaPower(n, zeta, v.get_num()));
      }
      roots.push_back(std::move(r));
    }
  }
  // Coefficients of prod (X - r), ascending in X.
  CycloSeries one;
  one.N = n;
  one.precNum = QSeries::kExact;
  Cyclo unit = Cyclo::fromZetaPower(n, 0, 1);
  one.terms.emplace(0, unit);
  std::vector<CycloSeries> c{one};
  for (const auto& r : roots) {
    std::vector<CycloSeries> next(c.size() + 1);
    for (auto& x : next) {
      x.N = n;
      x.precNum = QSeries::kExact;
    }
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1].add(c[i], false);
      next[i].add(c[i].mul(r), true);
    }
    c = std::move(next);
  }
  ModularPolynomial psi;
  psi.n = n;
  std::vector<QSeries> jp{QSeries(Rational(1))};
  for (size_t i = 0; i < c.size(); ++i) {
    QSeries s = toIntegralSeries(c[i]);
    if (s.precNum() < 1) throw std::logic_error("modular polynomial precision shortfall");
    long pole = s.valuationNum() ? std::max(0L, -*s.valuationNum()) : 0;
    while (static_cast<long>(jp.size()) <= pole) jp.push_back(jp.back() * j);
    for (long k = pole; k >= 0; --k) {
      Rational v = s.coeff(-k);
      if (sgn(v) == 0) continue;
      s -= jp[static_cast<size_t>(k)] * v;
      psi.coeffs[{static_cast<long>(i), k}] = v.get_num();
    }
    for (const auto& [e, v] : s.terms())
      if (e < s.precNum()) throw std::logic_error("symmetric function is not a polynomial in j");
  }
  return psi;
}

QSeries evalModularPolynomial(const ModularPolynomial& psi, const QSeries& x, const QSeries& y) {
  std::map<long, QSeries> xp, yp;
  auto power = [](std::map<long, QSeries>& cache, const QSeries& s, long k) -> const QSeries& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, s.pow(k)).first;
    return it->second;
  };
  QSeries acc;
  for (const auto& [ik, v] : psi.coeffs) acc += power(xp, x, ik.first) * power(yp, y, ik.second) * Rational(v);
  return acc;
}

}  // namespace singmod
