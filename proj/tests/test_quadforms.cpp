#include <random>
#include <set>

#include "doctest.h"
#include "singmod/quadforms.hpp"

using namespace singmod;

namespace {

// Equivalence by brute force over small unimodular matrices, followed by
// transitive closure. No reduction theory is used.
long orbitCount(long d, bool primitiveOnly, Rational* weightSum) {
  std::vector<BQF> forms;
  for (long a = 1; 3 * a * a <= d; ++a)
    for (long b = -a; b <= a; ++b)
      if ((b * b + d) % (4 * a) == 0) {
        long c = (b * b + d) / (4 * a);
        if (c < a) continue;
        BQF q{a, b, c};
        if (primitiveOnly && q.content() != 1) continue;
        forms.push_back(q);
      }
  size_t n = forms.size();
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  const long R = 3;
  for (size_t i = 0; i < n; ++i) {
    for (long al = -R; al <= R; ++al)
      for (long be = -R; be <= R; ++be)
        for (long ga = -R; ga <= R; ++ga)
          for (long de = -R; de <= R; ++de) {
            if (al * de - be * ga != 1) continue;
            BQF t = transform(forms[i], al, be, ga, de);
            for (size_t j = 0; j < n; ++j)
              if (forms[j] == t) parent[find(j)] = find(i);
          }
  }
  std::set<size_t> roots;
  for (size_t i = 0; i < n; ++i) roots.insert(find(i));
  if (weightSum) {
    *weightSum = 0;
    for (size_t r : roots) {
      // Stabilizer order in PSL2(Z), counted over the small matrices.
      int stab = 0;
      for (long al = -R; al <= R; ++al)
        for (long be = -R; be <= R; ++be)
          for (long ga = -R; ga <= R; ++ga)
            for (long de = -R; de <= R; ++de)
              if (al * de - be * ga == 1 && transform(forms[r], al, be, ga, de) == forms[r]) ++stab;
      *weightSum += Rational(2, stab);
    }
    weightSum->canonicalize();
  }
  return static_cast<long>(roots.size());
}

}  // namespace

TEST_CASE("reduction") {
  CHECK(reduce({1, 1, 1}) == BQF{1, 1, 1});
  CHECK(reduce({1, 3, 3}) == BQF{1, 1, 1});
  CHECK(reduce({3, -2, 4}) == BQF{3, -2, 4});
  CHECK(reduce({3, 2, 4}) == BQF{3, 2, 4});
  CHECK(reduce({2, -2, 3}) == BQF{2, 2, 3});
  CHECK(reduce({3, -1, 3}) == BQF{3, 1, 3});
  CHECK_THROWS_WITH(reduce({-1, 0, -1}), "not positive definite");
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> u(-6, 6);
  for (int i = 0; i < 200; ++i) {
    BQF q = reduce({3 + std::labs(u(rng)), u(rng), 5 + std::labs(u(rng))});
    long al = u(rng), ga = u(rng);
    if (std::gcd(std::labs(al), std::labs(ga)) != 1) continue;
    long be = 0, de = 0;
    for (long x = -20; x <= 20 && !de; ++x)
      for (long y = -20; y <= 20; ++y)
        if (al * y - x * ga == 1) {
          be = x;
          de = y;
          break;
        }
    if (al * de - be * ga != 1) continue;
    BQF t = transform(q, al, be, ga, de);
    if (t.a <= 0) continue;
    BQF r = reduce(t);
    CHECK(r == q);
    CHECK(reduce(r) == r);
    CHECK(r.disc() == t.disc());
    CHECK(r.content() == t.content());
  }
}

TEST_CASE("class enumeration and class numbers") {
  ClassList c3 = enumerateClasses(3, true);
  REQUIRE(c3.reps.size() == 1);
  CHECK(c3.reps[0].form == BQF{1, 1, 1});
  CHECK(c3.reps[0].w == 3);
  CHECK(classNumber(15) == 2);
  ClassList c4 = enumerateClasses(4, true);
  REQUIRE(c4.reps.size() == 1);
  CHECK(c4.reps[0].w == 2);
  for (long d : {3, 4, 7, 8}) CHECK(classNumber(d) == 1);
  CHECK_THROWS_WITH(enumerateClasses(5, false), "no forms of this discriminant");
}

TEST_CASE("hurwitz numbers") {
  CHECK(hurwitz(3) == Rational(1, 3));
  CHECK(hurwitz(4) == Rational(1, 2));
  CHECK(hurwitz(15) == 2);
  CHECK(hurwitz(0) == Rational(-1, 12));
  CHECK(hurwitz(5) == 0);
  CHECK(hurwitz(12) == Rational(4, 3));
  CHECK(hurwitz(16) == Rational(3, 2));
  CHECK(hurwitz(27) == Rational(4, 3));
  CHECK(hurwitz(23) == 3);
}

TEST_CASE("class counts against brute-force orbits") {
  for (long d = 3; d <= 1000; ++d) {
    if (d % 4 == 1 || d % 4 == 2) continue;
    if (d > 200 && d % 37 != 0) continue;
    Rational ws;
    CHECK(orbitCount(d, true, nullptr) == classNumber(d));
    CHECK(orbitCount(d, false, &ws) == static_cast<long>(enumerateClasses(d, false).reps.size()));
    CHECK(ws == hurwitz(d));
  }
}

TEST_CASE("roots") {
  DigitsScope scope(40);
  BigComplex i = root({1, 0, 1});
  CHECK(abs(i.re) < 1e-35);
  CHECK(abs(i.im - 1) < 1e-35);
  BigComplex r = root({1, 1, 1});
  CHECK(abs(r.re + BigFloat(0.5)) < 1e-35);
  CHECK(abs(r.im - sqrt(BigFloat(3)) / 2) < 1e-35);
  BigComplex r15 = root({1, 1, 4});
  CHECK(abs(r15.im - sqrt(BigFloat(15)) / 2) < 1e-35);
}

TEST_CASE("fricke action") {
  CHECK(frickeAction({2, 1, 2}, 2) == BQF{4, -1, 1});
  CHECK_THROWS_WITH(frickeAction({1, 1, 2}, 2), "not in Q_{d,p}");
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> u(1, 30), v(-30, 30);
  for (int i = 0; i < 100; ++i) {
    BQF q{2 * u(rng), v(rng), u(rng)};
    BQF w = frickeAction(q, 2);
    CHECK(w.disc() == q.disc());
  }
}

TEST_CASE("level classes") {
  CHECK(levelClasses(7, 2, 1).reps.size() == 1);
  ClassList l8 = levelClasses(8, 2, 0);
  REQUIRE(l8.reps.size() == 1);
  CHECK_THROWS_WITH(levelClasses(3, 2, 1), "discriminant not admissible at level p");
  // 2[1,0,1] splits into two Gamma0(2)-classes.
  ClassList l16 = levelClasses(16, 2, 0);
  REQUIRE(l16.reps.size() == 3);
  Rational mass = 0;
  for (const auto& r : l16.reps) mass += Rational(1, r.levelWeight);
  CHECK(mass == Rational(5, 2));
  for (long p : {2, 3, 5}) {
    for (long d = 3; d <= 200; ++d) {
      if (d % 4 == 1 || d % 4 == 2 || !admissibleAtLevel(d, p)) continue;
      for (long beta = 0; beta < 2 * p; ++beta) {
        if (positiveMod(beta * beta + d, 4 * p) != 0) continue;
        ClassList l = levelClasses(d, p, beta);
        // One class per SL2(Z)-class when p divides no content.
        if (d % (p * p) != 0) CHECK(l.reps.size() == enumerateClasses(d, false).reps.size());
        for (const auto& r : l.reps) {
          CHECK(r.form.a % p == 0);
          CHECK(positiveMod(r.form.b - beta, 2 * p) == 0);
          CHECK(r.form.disc() == -d);
        }
      }
    }
  }
}

TEST_CASE("class number identities") {
  auto r1 = classnumIdentities(1);
  CHECK(r1.lhs2 == Rational(7, 6));
  CHECK(r1.rhs2 == Rational(7, 6));
  CHECK(r1.lhs1 == Rational(1, 2));
  CHECK(r1.rhs1 == Rational(1, 2));
  for (long n = 1; n <= 200; ++n) {
    auto r = classnumIdentities(n);
    CHECK(r.lhs1 == r.rhs1);
    CHECK(r.lhs2 == r.rhs2);
  }
}
