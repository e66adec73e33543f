#pragma once

#include <vector>

#include "singmod/arith.hpp"
#include "singmod/bignum.hpp"

namespace singmod {

struct BQF {
  long a = 0, b = 0, c = 0;
  long disc() const { return b * b - 4 * a * c; }
  long content() const;
  bool operator==(const BQF&) const = default;
};

struct ClassRep {
  BQF form;
  int w = 1;           // |PSL2(Z) stabilizer of the root|
  int levelWeight = 1;  // |Gamma0(p) stabilizer| for level representatives
};

struct ClassList {
  long disc = 0;  // d, the forms have discriminant -d
  std::vector<ClassRep> reps;
  bool primitiveOnly = false;
  long level = 1;
  Rational weightSum() const;  // sum of 1/w
};

BQF reduce(const BQF& q);
bool isReduced(const BQF& q);
ClassList enumerateClasses(long d, bool primitiveOnly);
long classNumber(long d);  // h(-d)
Rational hurwitz(long d);
BigComplex root(const BQF& q);
// Stabilizer order in PSL2(Z) of the root (1, 2 or 3).
int stabilizerWeight(const BQF& q);
// Stabilizer order in Gamma0(p)/{+-1}.
int levelStabilizerWeight(const BQF& q, long p);
BQF frickeAction(const BQF& q, long p);
// Apply the substitution (X, Y) -> (alpha X + beta Y, gamma X + delta Y).
BQF transform(const BQF& q, long alpha, long beta, long gamma, long delta);
bool admissibleAtLevel(long d, long p);
long smallestBeta(long d, long p);
ClassList levelClasses(long d, long p, long beta);

struct ClassNumberIdentity {
  Rational lhs1, rhs1, lhs2, rhs2;
};
ClassNumberIdentity classnumIdentities(long n);

}  // namespace singmod
