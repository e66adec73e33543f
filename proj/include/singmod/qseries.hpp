#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "singmod/arith.hpp"

namespace singmod {

// Truncated Laurent series sum c_n q^(n/D). Coefficients with exponent
// numerator >= precNum are unknown.
class QSeries {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 8;

  QSeries() = default;
  explicit QSeries(const Rational& constant);

  static QSeries zero(long precNum, long denom = 1);
  static QSeries monomial(const Rational& c, long expNum, long denom = 1);
  static QSeries fromTerms(const std::map<long, Rational>& terms, long precNum, long denom = 1);
  // Dense coefficients starting at exponent numerator lo.
  static QSeries fromDense(long lo, std::vector<Rational> coeffs, long precNum, long denom = 1);

  long denom() const { return denom_; }
  long precNum() const { return prec_; }
  bool isExact() const { return prec_ >= kExact; }
  Rational prec() const;
  // Exponent numerator of the first nonzero coefficient, if any is known.
  std::optional<long> valuationNum() const;
  // Valuation used for precision tracking (prec if no known nonzero term).
  long effectiveValuation() const;
  Rational valuation() const;
  Rational leadingCoeff() const;

  Rational coeff(long expNum) const;
  Rational coeffAt(const Rational& exponent) const;
  std::map<long, Rational> terms() const;
  long loNum() const { return lo_; }
  const std::vector<Rational>& dense() const { return c_; }

  QSeries withDenom(long D) const;
  QSeries simplified() const;
  QSeries truncated(long precNum) const;
  QSeries truncatedAt(const Rational& p) const;
  QSeries shifted(long expNum) const;  // multiply by q^(expNum/D)

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  QSeries& operator/=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  friend QSeries operator/(QSeries a, const Rational& c) { return a /= c; }

  QSeries inverse() const;
  QSeries pow(long k) const;

  // Equality of stored data (denominators lifted).
  bool operator==(const QSeries& o) const;
  // Equal on the common known range.
  bool agreesWith(const QSeries& o) const;
  bool hasIntegerCoefficients() const;

 private:
  void normalize();
  static long lcmDenom(long a, long b);

  long denom_ = 1;
  long lo_ = 0;
  std::vector<Rational> c_;
  long prec_ = kExact;
};

QSeries scale(const QSeries& f, long m);
QSeries uOperator(const QSeries& f, long m);
QSeries qDerivative(const QSeries& f);
Rational constantTerm(const QSeries& f);

}  // namespace singmod
