#pragma once

#include <map>
#include <utility>
#include <vector>

#include "singmod/plusspace.hpp"
#include "singmod/qseries.hpp"

namespace singmod {

// Weak Jacobi form expansion sum c(n, r) q^n zeta^r. Every cell with
// n < precN is stored (zero cells omitted).
struct JacobiSeries {
  int weight = 0;
  long index = 1;
  long precN = 0;
  std::map<long, std::map<long, Rational>> slices;

  Rational coeff(long n, long r) const;
  // Smallest 4mn - r^2 over stored nonzero cells.
  long minDisc() const;
  // c(n, r) depends only on (4mn - r^2, r mod 2m) and is even in r.
  bool singleValued() const;
  bool operator==(const JacobiSeries& o) const;
};

// a = phi_{-2,1}, b = phi_{0,1}.
std::pair<JacobiSeries, JacobiSeries> generators(long precN);

JacobiSeries jacobiMul(const JacobiSeries& x, const JacobiSeries& y);
JacobiSeries jacobiScale(const JacobiSeries& x, const QSeries& s, int sWeight = 0);
JacobiSeries jacobiAdd(const JacobiSeries& x, const JacobiSeries& y, const Rational& cy = 1);

struct PhiSolution {
  JacobiSeries phi;
  long deltaPower = 0;
  // Constant term of each f_nu, nu = 0..p.
  std::vector<Rational> fConst;
};

// Weight 2, index p form with c(n, r) = B(D, 4pn - r^2) and principal part
// q^{-D}. p must be 1, 2, 3 or 5.
PhiSolution solvePhiDetailed(long D, long p, long precN);
JacobiSeries solvePhi(long D, long p, long precN);

// Constant term (-1)^(nu-1) binom(p-1, nu-1) / 12^(p-1) of f_{p,nu} in the
// ansatz for phi_{1,p}.
Rational ansatzConstant(long p, long nu);

JacobiSeries vOperator(const JacobiSeries& phi, long p);

HalfIntForm toPlusspace(const JacobiSeries& phi);
JacobiSeries fromPlusspace(const HalfIntForm& g, long precN);
// T(m^2) on the plus-space image pulled back to Jacobi cells.
JacobiSeries heckeJacobi(const JacobiSeries& phi, long m);

// B^(p)(D, d): coefficient of q^d in the weight 3/2 level 4p form dual to f_{d,p}.
Integer coeffBLevelP(long p, long D, long d);
HalfIntForm basisGLevelP(long p, long D, long prec);

}  // namespace singmod
