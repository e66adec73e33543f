#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "singmod/arith.hpp"

namespace singmod {

using BigFloat = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) for newly created BigFloats.
class DigitsScope {
 public:
  explicit DigitsScope(unsigned digits);
  ~DigitsScope();
  DigitsScope(const DigitsScope&) = delete;
  DigitsScope& operator=(const DigitsScope&) = delete;

 private:
  unsigned saved_;
};

struct BigComplex {
  BigFloat re = 0;
  BigFloat im = 0;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(0) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigFloat abs() const;
};

BigFloat toBig(const Rational& x);
BigFloat toBig(const Integer& x);
Integer roundToInteger(const BigFloat& x);
BigFloat bigPi();
// exp(2 pi i z)
BigComplex expTwoPiI(const BigComplex& z);
BigComplex complexPow(const BigComplex& z, long n);
double toDouble(const BigFloat& x);
// Digits needed to resolve magnitudes of size exp(pi * sqrt(d)).
unsigned digitsForDiscriminant(double d, unsigned guard = 20);

}  // namespace singmod
