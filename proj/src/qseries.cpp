#include "singmod/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace singmod {

namespace {

long addPrec(long p, long v) { return p >= QSeries::kExact ? QSeries::kExact : p + v; }

// Integer numerators and a common denominator for dense rational data.
Integer commonDenominator(const std::vector<Rational>& c) {
  Integer L = 1;
  for (const auto& x : c)
    if (x.get_den() != 1) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
  return L;
}

std::vector<Integer> scaledNumerators(const std::vector<Rational>& c, const Integer& L) {
  std::vector<Integer> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    out[i] = c[i].get_num() * (L / c[i].get_den());
  }
  return out;
}

}  // namespace

QSeries::QSeries(const Rational& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

QSeries QSeries::zero(long precNum, long denom) {
  QSeries s;
  s.denom_ = denom;
  s.prec_ = precNum;
  s.lo_ = 0;
  return s;
}

QSeries QSeries::monomial(const Rational& c, long expNum, long denom) {
  QSeries s;
  s.denom_ = denom;
  s.lo_ = expNum;
  if (sgn(c) != 0) s.c_.push_back(c);
  s.normalize();
  return s;
}

QSeries QSeries::fromTerms(const std::map<long, Rational>& terms, long precNum, long denom) {
  QSeries s;
  s.denom_ = denom;
  s.prec_ = precNum;
  if (terms.empty()) return s;
  s.lo_ = terms.begin()->first;
  long hi = terms.rbegin()->first;
  if (hi >= precNum) hi = precNum - 1;
  if (hi >= s.lo_) s.c_.assign(static_cast<size_t>(hi - s.lo_ + 1), Rational(0));
  for (const auto& [e, v] : terms)
    if (e < precNum) s.c_[static_cast<size_t>(e - s.lo_)] = v;
  s.normalize();
  return s;
}

QSeries QSeries::fromDense(long lo, std::vector<Rational> coeffs, long precNum, long denom) {
  QSeries s;
  s.denom_ = denom;
  s.prec_ = precNum;
  s.lo_ = lo;
  s.c_ = std::move(coeffs);
  if (!s.isExact() && lo + static_cast<long>(s.c_.size()) > precNum)
    s.c_.resize(static_cast<size_t>(std::max(0L, precNum - lo)));
  s.normalize();
  return s;
}

void QSeries::normalize() {
  for (auto& x : c_) x.canonicalize();
  size_t first = 0;
  while (first < c_.size() && sgn(c_[first]) == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t last = c_.size();
  while (last > first && sgn(c_[last - 1]) == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<Rational>(c_.begin() + static_cast<long>(first), c_.begin() + static_cast<long>(last));
    lo_ += static_cast<long>(first);
  }
}

long QSeries::lcmDenom(long a, long b) { return std::lcm(a, b); }

Rational QSeries::prec() const {
  if (isExact()) throw std::logic_error("exact series has no finite precision");
  return makeRational(prec_, denom_);
}

std::optional<long> QSeries::valuationNum() const {
  if (c_.empty()) return std::nullopt;
  return lo_;
}

long QSeries::effectiveValuation() const { return c_.empty() ? prec_ : lo_; }

Rational QSeries::valuation() const {
  if (c_.empty()) throw std::domain_error("series has no known nonzero term");
  return makeRational(lo_, denom_);
}

Rational QSeries::leadingCoeff() const {
  if (c_.empty()) throw std::domain_error("series has no known nonzero term");
  return c_.front();
}

Rational QSeries::coeff(long expNum) const {
  if (expNum >= prec_) throw std::out_of_range("coefficient beyond series precision");
  long i = expNum - lo_;
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

Rational QSeries::coeffAt(const Rational& exponent) const {
  Rational scaled = exponent * denom_;
  if (scaled.get_den() != 1) return 0;
  if (!scaled.get_num().fits_slong_p()) throw std::out_of_range("exponent out of range");
  return coeff(scaled.get_num().get_si());
}

std::map<long, Rational> QSeries::terms() const {
  std::map<long, Rational> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) out.emplace(lo_ + static_cast<long>(i), c_[i]);
  return out;
}

QSeries QSeries::withDenom(long D) const {
  if (D == denom_) return *this;
  if (D % denom_ != 0) throw std::logic_error("denominator lift must be a multiple");
  long k = D / denom_;
  QSeries s;
  s.denom_ = D;
  s.prec_ = isExact() ? kExact : prec_ * k;
  s.lo_ = lo_ * k;
  if (!c_.empty()) {
    s.c_.assign((c_.size() - 1) * static_cast<size_t>(k) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i * static_cast<size_t>(k)] = c_[i];
  }
  return s;
}

QSeries QSeries::simplified() const {
  long g = denom_;
  for (size_t i = 0; i < c_.size() && g > 1; ++i)
    if (sgn(c_[i]) != 0) g = std::gcd(g, lo_ + static_cast<long>(i));
  if (g <= 1) return *this;
  QSeries s;
  s.denom_ = denom_ / g;
  s.prec_ = isExact() ? kExact : -floorDiv(-prec_, g);
  s.lo_ = lo_ / g;
  for (size_t i = 0; i < c_.size(); i += static_cast<size_t>(g)) s.c_.push_back(c_[i]);
  s.normalize();
  return s;
}

QSeries QSeries::truncated(long precNum) const {
  if (precNum >= prec_) return *this;
  QSeries s = *this;
  s.prec_ = precNum;
  long keep = precNum - lo_;
  if (keep <= 0) {
    s.c_.clear();
    s.lo_ = 0;
  } else if (keep < static_cast<long>(s.c_.size())) {
    s.c_.resize(static_cast<size_t>(keep));
  }
  s.normalize();
  return s;
}

QSeries QSeries::truncatedAt(const Rational& p) const {
  Rational scaled = p * denom_;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return truncated(c.get_si());
}

QSeries QSeries::shifted(long expNum) const {
  QSeries s = *this;
  s.lo_ += expNum;
  s.prec_ = addPrec(prec_, expNum);
  if (s.c_.empty()) s.lo_ = 0;
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  long L = lcmDenom(denom_, o.denom_);
  QSeries a = withDenom(L);
  QSeries b = o.withDenom(L);
  long P = std::min(a.prec_, b.prec_);
  a = a.truncated(P);
  b = b.truncated(P);
  if (b.c_.empty()) {
    *this = a;
    return *this;
  }
  if (a.c_.empty()) {
    b.prec_ = P;
    *this = b;
    return *this;
  }
  long lo = std::min(a.lo_, b.lo_);
  long hi = std::max(a.lo_ + static_cast<long>(a.c_.size()), b.lo_ + static_cast<long>(b.c_.size()));
  std::vector<Rational> c(static_cast<size_t>(hi - lo));
  for (size_t i = 0; i < a.c_.size(); ++i) c[static_cast<size_t>(a.lo_ - lo) + i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
  *this = fromDense(lo, std::move(c), P, L);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

QSeries& QSeries::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw std::domain_error("division by zero");
  for (auto& x : c_) x /= c;
  return *this;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  long L = QSeries::lcmDenom(x.denom_, y.denom_);
  if ((x.isExact() && x.c_.empty()) || (y.isExact() && y.c_.empty())) {
    QSeries z;
    z.denom_ = L;
    return z;
  }
  QSeries a = x.withDenom(L);
  QSeries b = y.withDenom(L);
  long va = a.effectiveValuation(), vb = b.effectiveValuation();
  long P = std::min(a.isExact() ? QSeries::kExact : a.prec_ + vb,
                    b.isExact() ? QSeries::kExact : b.prec_ + va);
  QSeries z;
  z.denom_ = L;
  z.prec_ = P;
  if (a.c_.empty() || b.c_.empty()) return z;
  long lo = a.lo_ + b.lo_;
  long hi = a.lo_ + static_cast<long>(a.c_.size()) + b.lo_ + static_cast<long>(b.c_.size()) - 1;
  if (hi > P) hi = P;
  if (hi <= lo) return z;
  Integer La = commonDenominator(a.c_), Lb = commonDenominator(b.c_);
  std::vector<Integer> A = scaledNumerators(a.c_, La), B = scaledNumerators(b.c_, Lb);
  std::vector<Integer> acc(static_cast<size_t>(hi - lo));
  long n = hi - lo;
  for (size_t i = 0; i < A.size(); ++i) {
    if (sgn(A[i]) == 0) continue;
    long jmax = std::min(static_cast<long>(B.size()), n - static_cast<long>(i));
    for (long j = 0; j < jmax; ++j) {
      if (sgn(B[static_cast<size_t>(j)]) == 0) continue;
      mpz_addmul(acc[i + static_cast<size_t>(j)].get_mpz_t(), A[i].get_mpz_t(), B[static_cast<size_t>(j)].get_mpz_t());
    }
  }
  Integer den = La * Lb;
  std::vector<Rational> c(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    if (sgn(acc[i]) == 0) continue;
    c[i] = Rational(acc[i], den);
    c[i].canonicalize();
  }
  return QSeries::fromDense(lo, std::move(c), P, L);
}

QSeries QSeries::inverse() const {
  if (c_.empty()) throw std::domain_error("non-invertible series");
  long v = lo_;
  if (isExact()) {
    if (c_.size() == 1) return monomial(1 / c_[0], -v, denom_);
    throw std::domain_error("inverse of an exact non-monomial series needs a precision");
  }
  long R = prec_ - v;
  const Rational& c0 = c_[0];
  std::vector<Rational> b(static_cast<size_t>(R));
  bool unit = c0 == 1 || c0 == -1;
  bool integral = true;
  for (const auto& x : c_)
    if (x.get_den() != 1) integral = false;
  if (unit && integral) {
    std::vector<Integer> ci(c_.size()), bi(static_cast<size_t>(R));
    for (size_t i = 0; i < c_.size(); ++i) ci[i] = c_[i].get_num();
    long s0 = c0 == 1 ? 1 : -1;
    bi[0] = s0;
    Integer acc;
    for (long k = 1; k < R; ++k) {
      acc = 0;
      long imax = std::min(k, static_cast<long>(ci.size()) - 1);
      for (long i = 1; i <= imax; ++i) {
        if (sgn(ci[static_cast<size_t>(i)]) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), ci[static_cast<size_t>(i)].get_mpz_t(), bi[static_cast<size_t>(k - i)].get_mpz_t());
      }
      bi[static_cast<size_t>(k)] = s0 == 1 ? Integer(-acc) : acc;
    }
    for (long k = 0; k < R; ++k) b[static_cast<size_t>(k)] = Rational(bi[static_cast<size_t>(k)]);
  } else {
    Rational inv0 = 1 / c0;
    b[0] = inv0;
    for (long k = 1; k < R; ++k) {
      Rational acc = 0;
      long imax = std::min(k, static_cast<long>(c_.size()) - 1);
      for (long i = 1; i <= imax; ++i) acc += c_[static_cast<size_t>(i)] * b[static_cast<size_t>(k - i)];
      b[static_cast<size_t>(k)] = -acc * inv0;
    }
  }
  return fromDense(-v, std::move(b), prec_ - 2 * v, denom_);
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  if (b.c_.empty()) throw std::domain_error("non-invertible series");
  if (b.isExact() && b.c_.size() > 1) {
    if (a.isExact()) throw std::domain_error("division of exact series needs a precision");
    long L = QSeries::lcmDenom(a.denom_, b.denom_);
    QSeries A = a.withDenom(L), B = b.withDenom(L);
    long Pb = A.prec_ + B.lo_ - A.effectiveValuation();
    if (Pb <= B.lo_) Pb = B.lo_ + 1;
    return A * B.truncated(Pb).inverse();
  }
  return a * b.inverse();
}

QSeries QSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  QSeries result(Rational(1));
  result.denom_ = denom_;
  QSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool QSeries::operator==(const QSeries& o) const {
  long L = lcmDenom(denom_, o.denom_);
  QSeries a = withDenom(L), b = o.withDenom(L);
  return a.prec_ == b.prec_ && a.lo_ == b.lo_ && a.c_ == b.c_;
}

bool QSeries::agreesWith(const QSeries& o) const {
  long L = lcmDenom(denom_, o.denom_);
  long P = std::min(withDenom(L).prec_, o.withDenom(L).prec_);
  QSeries a = withDenom(L).truncated(P), b = o.withDenom(L).truncated(P);
  return a.lo_ == b.lo_ && a.c_ == b.c_;
}

bool QSeries::hasIntegerCoefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

QSeries scale(const QSeries& f, long m) {
  if (m <= 0) throw std::domain_error("scale factor must be positive");
  std::map<long, Rational> t;
  for (auto& [e, v] : f.terms()) t.emplace(e * m, v);
  long P = f.isExact() ? QSeries::kExact : f.precNum() * m;
  return QSeries::fromTerms(t, P, f.denom());
}

QSeries uOperator(const QSeries& f, long m) {
  QSeries g = f.simplified();
  if (g.denom() != 1) throw std::domain_error("U_m requires integral exponents");
  if (m <= 0) throw std::domain_error("U_m requires positive m");
  std::map<long, Rational> t;
  for (auto& [e, v] : g.terms())
    if (e % m == 0) t.emplace(e / m, v);
  long P = g.isExact() ? QSeries::kExact : -floorDiv(-g.precNum(), m);
  return QSeries::fromTerms(t, P, 1);
}

QSeries qDerivative(const QSeries& f) {
  std::vector<Rational> c = f.dense();
  for (size_t i = 0; i < c.size(); ++i) c[i] *= makeRational(f.loNum() + static_cast<long>(i), f.denom());
  return QSeries::fromDense(f.loNum(), std::move(c), f.precNum(), f.denom());
}

Rational constantTerm(const QSeries& f) { return f.coeff(0); }

}  // namespace singmod
