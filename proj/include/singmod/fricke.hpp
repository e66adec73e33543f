#pragma once

#include <string>
#include <vector>

#include "singmod/bignum.hpp"
#include "singmod/moduli.hpp"
#include "singmod/qseries.hpp"
#include "singmod/quadforms.hpp"

namespace singmod {

enum class HauptmodulMethod { Eta, Rademacher };

struct HauptmodulSpec {
  long p = 0;
  HauptmodulMethod method = HauptmodulMethod::Eta;
  long exponent = 0;        // a = 24 / (p - 1)
  long prefactorPower = 0;  // p^(a/2)
  QSeries series;           // eta method: q^-1 + sum a_n q^n
  std::vector<double> estimates;  // rademacher method: a_1, a_2, ...
  Rational constantRemoved;
};

bool isMonsterPrime(long p);

// p in {2, 3, 5, 7, 13}; coefficients below prec are known.
HauptmodulSpec hauptmodulEta(long p, long prec);
// Rademacher estimates for a_1..a_count.
HauptmodulSpec hauptmodulRademacher(long p, long count, long cMax, long dMax);

// Kloosterman sum sum_{d mod c, (d,c)=1} cos(2 pi (m d + n dbar) / c).
double kloosterman(long m, long n, long c);
double besselI1(double x);

struct RademacherResult {
  long p = 0;
  long nu = 0;
  double estimate = 0;
  long cMax = 0;
  long dMax = 0;
  double tailEstimate = 0;
};

RademacherResult rademacherCoeff(long p, long nu, long cMax, long dMax);
std::vector<RademacherResult> rademacherCoeffs(long p, const std::vector<long>& nus, long cMax, long dMax);

// Moves tau to a point of maximal imaginary part in its Gamma0(p)* orbit.
BigComplex reduceFricke(const BigComplex& tau, long p);

struct FrickeTraceRecord {
  long p = 0;
  long d = 0;
  long beta = 0;
  Integer value;
  std::string raw;
  double residual = 0;
  unsigned digits = 0;
  long seriesPrec = 0;
  ClassList classes;
  // Value under Gamma0(p)*-stabilizer weights over Gamma0(p)*\Q_{d,p}.
  Rational starConvention;
};

FrickeTraceRecord frickeTrace(long p, long d);
FrickeTraceRecord frickeTraceBeta(long p, long d, long beta);

// f | T(m) = sum_{ad=m, b mod d} f((a tau + b)/d) with the constant removed.
// When requireCanonical is set, f must be q^-1 + O(q).
QSeries heckeWeight0(const QSeries& f, long m, bool requireCanonical = true);

// Coefficients (ascending) of the polynomial P with P(f) = q^-m + O(q).
std::vector<Integer> faberPolynomial(const QSeries& f, long m);

// Tr_m(d): weighted sum over Gamma0(p)-classes of Q_{d,p,beta} of F_m(j_p); for
// (m, p) = 1 this is j_p | T(m).
struct GeneralizedFrickeTrace {
  Integer value;     // numeric side
  Integer jacobi;    // -sum_{u | m} 2^xi u B(u^2, d)
  double residual = 0;
};

GeneralizedFrickeTrace frickeGeneralizedTrace(long p, long m, long d);

}  // namespace singmod
