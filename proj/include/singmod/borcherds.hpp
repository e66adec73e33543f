#pragma once

#include <map>
#include <optional>

#include "singmod/plusspace.hpp"
#include "singmod/qseries.hpp"

namespace singmod {

// q^h prod_{n >= 1} (1 - q^n)^{e(n)}, known for exponents below h + prec.
struct ProductExpansion {
  Rational h;
  std::map<long, Rational> exponents;
  long prec = 0;
  Rational weight;

  QSeries expand() const;
  ProductExpansion scaled(long k) const;
};

// xi = -1/12 + sum H(d) q^d.
QSeries xiSeries(long prec);

// Borcherds lift of a weight 1/2 level 4 plus-space form; exponents e(n) = A(n^2) for n < prec.
ProductExpansion psiLift(const HalfIntForm& f, long prec);

// Greedy exponent extraction. The leading coefficient must be 1.
ProductExpansion productExponents(const QSeries& series, bool requireIntegral = true);

struct ProductCheck {
  bool ok = false;
  std::optional<long> firstMismatch;  // exponent of the first differing coefficient
  Rational h;
  long power = 1;  // both sides were raised to this power
  std::map<long, Rational> exponents;
  long prec = 0;
};

ProductCheck verifyProductLevel1(long d, long prec);
ProductCheck verifyProductFricke(long p, long d, long prec);

struct ExponentTraceCheck {
  Integer lhs;  // u A(u^2, d)
  Integer rhs;  // sum_{v | u} mu(u/v) Tr_v(d)
  bool ok = false;
};
ExponentTraceCheck exponentTraceCheck(long u, long d);

}  // namespace singmod
