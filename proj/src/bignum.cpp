#include "singmod/bignum.hpp"

#include <cmath>

namespace singmod {

DigitsScope::DigitsScope(unsigned digits) : saved_(BigFloat::default_precision()) {
  BigFloat::default_precision(digits);
}

DigitsScope::~DigitsScope() { BigFloat::default_precision(saved_); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigFloat BigComplex::abs() const { return sqrt(re * re + im * im); }

BigFloat toBig(const Rational& x) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat toBig(const Integer& x) {
  BigFloat r;
  mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
  return r;
}

Integer roundToInteger(const BigFloat& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return z;
}

BigFloat bigPi() { return boost::math::constants::pi<BigFloat>(); }

BigComplex expTwoPiI(const BigComplex& z) {
  BigFloat twoPi = 2 * bigPi();
  BigFloat mod = exp(-twoPi * z.im);
  BigFloat arg = twoPi * z.re;
  return {mod * cos(arg), mod * sin(arg)};
}

BigComplex complexPow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(BigFloat(1)) / complexPow(z, -n);
  BigComplex r(BigFloat(1)), b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

double toDouble(const BigFloat& x) { return x.convert_to<double>(); }

unsigned digitsForDiscriminant(double d, unsigned guard) {
  return static_cast<unsigned>(std::ceil(M_PI * std::sqrt(std::max(d, 1.0)) / std::log(10.0))) + guard;
}

}  // namespace singmod
