#include "singmod/quadforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace singmod {

long BQF::content() const { return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)); }

Rational ClassList::weightSum() const {
  Rational s = 0;
  for (const auto& r : reps) s += Rational(1, r.w);
  return s;
}

BQF reduce(const BQF& q) {
  if (q.a <= 0 || q.disc() >= 0) throw std::domain_error("not positive definite");
  long a = q.a, b = q.b, c = q.c;
  long d = -q.disc();
  for (;;) {
    // Translate b into (-a, a].
    long k = floorDiv(a - b, 2 * a);
    b += 2 * a * k;
    c = (b * b + d) / (4 * a);
    if (c < a) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  if (b < 0 && (-b == a || a == c)) b = -b;
  return {a, b, c};
}

bool isReduced(const BQF& q) {
  if (!(std::labs(q.b) <= q.a && q.a <= q.c)) return false;
  if ((std::labs(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
  return true;
}

int stabilizerWeight(const BQF& q) {
  long g = q.content();
  long d0 = -q.disc() / (g * g);
  if (d0 == 3) return 3;
  if (d0 == 4) return 2;
  return 1;
}

int levelStabilizerWeight(const BQF& q, long p) {
  int w = stabilizerWeight(q);
  if (w == 1) return 1;
  // The nontrivial stabilizer elements have lower-left entry +-a/content.
  long a0 = q.a / q.content();
  return a0 % p == 0 ? w : 1;
}

ClassList enumerateClasses(long d, bool primitiveOnly) {
  if (d <= 0 || (d % 4 != 0 && d % 4 != 3)) throw std::domain_error("no forms of this discriminant");
  ClassList out;
  out.disc = d;
  out.primitiveOnly = primitiveOnly;
  for (long a = 1; 3 * a * a <= d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if ((b * b + d) % (4 * a) != 0) continue;
      long c = (b * b + d) / (4 * a);
      BQF q{a, b, c};
      if (c < a || !isReduced(q)) continue;
      if (primitiveOnly && q.content() != 1) continue;
      out.reps.push_back({q, stabilizerWeight(q), stabilizerWeight(q)});
    }
  }
  return out;
}

long classNumber(long d) { return static_cast<long>(enumerateClasses(d, true).reps.size()); }

Rational hurwitz(long d) {
  if (d == 0) return Rational(-1, 12);
  if (d < 0 || d % 4 == 1 || d % 4 == 2) return 0;
  return enumerateClasses(d, false).weightSum();
}

BigComplex root(const BQF& q) {
  if (q.a <= 0 || q.disc() >= 0) throw std::domain_error("not positive definite");
  BigFloat twoA = 2 * q.a;
  BigFloat d = -q.disc();
  return {BigFloat(-q.b) / twoA, sqrt(d) / twoA};
}

BQF frickeAction(const BQF& q, long p) {
  if (q.a % p != 0) throw std::domain_error("not in Q_{d,p}");
  return {q.c * p, -q.b, q.a / p};
}

BQF transform(const BQF& q, long alpha, long beta, long gamma, long delta) {
  auto val = [&](long x, long y) { return q.a * x * x + q.b * x * y + q.c * y * y; };
  long A = val(alpha, gamma);
  long C = val(beta, delta);
  long B = 2 * q.a * alpha * beta + q.b * (alpha * delta + beta * gamma) + 2 * q.c * gamma * delta;
  return {A, B, C};
}

bool admissibleAtLevel(long d, long p) {
  long m = 4 * p;
  for (long x = 0; x < 2 * p; ++x)
    if (positiveMod(x * x + d, m) == 0) return true;
  return false;
}

long smallestBeta(long d, long p) {
  for (long x = 0; x < 2 * p; ++x)
    if (positiveMod(x * x + d, 4 * p) == 0) return x;
  throw std::domain_error("discriminant not admissible at level p");
}

namespace {

struct Mat {
  long a, b, c, d;
};

Mat mul(const Mat& x, const Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// PSL2(Z) stabilizer of the root of a reduced form.
std::vector<Mat> stabilizer(const BQF& q) {
  std::vector<Mat> s{{1, 0, 0, 1}};
  int w = stabilizerWeight(q);
  if (w == 2) s.push_back({0, -1, 1, 0});
  if (w == 3) {
    Mat r = q.b == q.a ? Mat{0, -1, 1, 1} : Mat{1, -1, 1, 0};
    s.push_back(r);
    s.push_back(mul(r, r));
  }
  return s;
}

// Points of P^1(F_p) as normalized (x : y).
std::pair<long, long> normalizePoint(long x, long y, long p) {
  x = positiveMod(x, p);
  y = positiveMod(y, p);
  if (y != 0) {
    long inv = 1;
    while ((inv * y) % p != 1) ++inv;
    return {(x * inv) % p, 1};
  }
  return {1, 0};
}

}  // namespace

ClassList levelClasses(long d, long p, long beta) {
  if (!admissibleAtLevel(d, p) || positiveMod(beta * beta + d, 4 * p) != 0)
    throw std::domain_error("discriminant not admissible at level p");
  ClassList base = enumerateClasses(d, false);
  ClassList out;
  out.disc = d;
  out.level = p;
  // Gamma0(p)-classes inside the SL2(Z)-class of Q correspond to the orbits of
  // Stab(Q) on the points g(1:0) of P^1(F_p) with Q o g in Q_{d,p,beta}.
  for (const auto& rep : base.reps) {
    const BQF& q = rep.form;
    std::vector<std::pair<long, long>> pts{{1, 0}};
    for (long k = 0; k < p; ++k) pts.emplace_back(k, 1);
    std::set<std::pair<long, long>> done;
    std::vector<Mat> stab = stabilizer(q);
    for (auto [x, y] : pts) {
      if (done.count({x, y})) continue;
      Mat g = y == 0 ? Mat{1, 0, 0, 1} : Mat{x, -1, 1, 0};
      BQF t = transform(q, g.a, g.b, g.c, g.d);
      if (t.a % p != 0 || positiveMod(t.b - beta, 2 * p) != 0) continue;
      int fixed = 0;
      for (const auto& s : stab) {
        auto img = normalizePoint(s.a * x + s.b * y, s.c * x + s.d * y, p);
        done.insert(img);
        if (img == std::make_pair(x, y)) ++fixed;
      }
      // Translate B into (-A, A].
      long k = floorDiv(t.a - t.b, 2 * t.a);
      t = transform(t, 1, k, 0, 1);
      out.reps.push_back({t, rep.w, fixed});
    }
  }
  return out;
}

ClassNumberIdentity classnumIdentities(long n) {
  if (n < 1) throw std::domain_error("n must be positive");
  ClassNumberIdentity r;
  for (long x = -isqrt(4 * n); x <= isqrt(4 * n); ++x) {
    if (x * x >= 4 * n) continue;
    Rational h = hurwitz(4 * n - x * x);
    r.lhs1 += (n - x * x) * h;
    r.lhs2 += h;
  }
  for (long d : divisors(n)) {
    long mn = std::min(d, n / d), mx = std::max(d, n / d);
    r.rhs1 += mn * mn * mn;
    r.rhs2 += mx;
  }
  if (isSquare(n)) {
    r.rhs1 -= makeRational(n, 2);
    r.rhs2 += Rational(1, 6);
  }
  r.rhs1.canonicalize();
  return r;
}

}  // namespace singmod
