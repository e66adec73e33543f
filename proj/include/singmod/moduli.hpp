#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "singmod/bignum.hpp"
#include "singmod/qseries.hpp"
#include "singmod/quadforms.hpp"

namespace singmod {

struct EvalResult {
  BigComplex value;
  double log10Tail = 0;  // log10 of the rigorous-style tail estimate
};

// Evaluates f at tau using the working precision of the current DigitsScope.
EvalResult evalSeries(const QSeries& f, const BigComplex& tau, int guard);

struct TraceRecord {
  long d = 0;
  Integer value;
  std::string raw;  // high-precision value before rounding
  double residual = 0;
  unsigned digits = 0;
  long seriesPrec = 0;
  ClassList classes;
};

struct RoundedValue {
  Integer value;
  std::string raw;
  double residual = 0;
  unsigned digits = 0;
  long seriesPrec = 0;
};

// Runs compute(prec) at increasing precision until its real value rounds to
// an integer with residual < 1e-6 (imaginary part included). Working digits
// and series precision are doubled on each of up to 3 retries.
RoundedValue roundWithEscalation(unsigned digits, long prec, const std::function<BigComplex(long)>& compute);

TraceRecord trace(long d);
// j - 744 known below prec (cached).
const QSeries& bigJSeries(long prec);
std::string formatBig(const BigFloat& x, int significant = 30);

enum class FracTag { None, CubeRootX, SqrtXMinus1728 };
std::string fracTagName(FracTag t);

struct HilbertPoly {
  long d = 0;
  std::vector<Integer> coeffs;  // ascending powers of X
  FracTag tag = FracTag::None;
  double residual = 0;
};

HilbertPoly hilbertPoly(long d);
// Hilbert-style polynomial over given roots (values j(alpha_Q)); rounds to
// integers. Each entry of values must already be computed at the current
// precision.
std::vector<Integer> roundedPolyFromRoots(const std::vector<BigComplex>& roots, double* residual);

struct FaberPoly {
  long m = 0;
  QSeries series;
  std::vector<Integer> jCoeffs;  // J_m = sum jCoeffs[k] j^k
};
FaberPoly faber(long m, long prec);
Integer generalizedTrace(long m, long d, double* residual = nullptr);

QSeries lambdaSeries(long d, long prec);
// Composes an integer polynomial with a series.
QSeries composePoly(const std::vector<Integer>& coeffs, const QSeries& x);

// Psi_n(X, Y) as a map (i, k) -> coefficient of X^i Y^k.
struct ModularPolynomial {
  long n = 0;
  std::map<std::pair<long, long>, Integer> coeffs;
  long degreeX() const;
  long degreeY() const;
  // Coefficients of Psi_n(X, X), ascending.
  std::vector<Integer> diagonal() const;
};
ModularPolynomial modularPolynomial(long n, long prec);
// Psi_n(x, y) evaluated on series.
QSeries evalModularPolynomial(const ModularPolynomial& psi, const QSeries& x, const QSeries& y);

}  // namespace singmod
