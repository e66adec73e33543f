#pragma once

#include <map>
#include <string>
#include <vector>

#include "singmod/qseries.hpp"

namespace singmod {

enum class FormKind { F, G };

// Weakly holomorphic plus-space form of weight weight2/2 on Gamma0(4p)
// (p = 1 means level 4). Coefficients with exponent < prec are known.
struct HalfIntForm {
  FormKind kind = FormKind::F;
  long index = 0;
  long p = 1;
  int weight2 = 1;
  long prec = 0;
  std::map<long, Integer> coeffs;

  long level() const { return 4 * p; }
  Integer coeff(long n) const;
  QSeries toSeries() const;
  static HalfIntForm fromSeries(const QSeries& s, FormKind kind, long index, long p, int weight2);
  bool supportOk() const;
};

// Plus-space support: weight 1/2 uses exponents that are squares mod 4p,
// weight 3/2 uses exponents whose negatives are squares mod 4p.
bool inPlusSupport(long exponent, long p, int weight2);
// Index d of f_d is admissible when -d is a square mod 4p; index D of g_D
// when D is a square mod 4p.
bool admissibleF(long d, long p);
bool admissibleG(long D, long p);

HalfIntForm basisF(long d, long prec);
HalfIntForm basisG(long D, long prec);
HalfIntForm basisFLevelP(long p, long d, long prec);

// A(D, d): coefficient of q^D in f_d at level 4p.
Integer coeffA(long p, long D, long d);
// B(D, d) at level 4 from g_D.
Integer coeffB(long D, long d);

HalfIntForm heckeTm2(const HalfIntForm& f, long m);

struct RecurrenceResult {
  bool ok = false;
  Integer b4nm1, rhs4nm1, b4n, rhs4n;
};
RecurrenceResult recurrenceCheckB(long n);

// Duality check A(D,d) = -B(D,d) at level 4p (p = 1 for level 4).
struct DualityResult {
  bool ok = false;
  Integer A, B;
};
DualityResult dualityCheck(long D, long d, long p);

std::string kindName(FormKind k);

}  // namespace singmod
