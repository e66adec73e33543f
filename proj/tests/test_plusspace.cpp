#include "doctest.h"
#include "golden_loader.hpp"
#include "singmod/forms.hpp"
#include "singmod/moduli.hpp"
#include "singmod/plusspace.hpp"

using namespace singmod;

namespace {

void checkAgainst(const HalfIntForm& f, const nlohmann::json& entry) {
  long prec = entry["prec"];
  for (const auto& t : entry["terms"]) {
    long e = t[0];
    Integer v(t[1].get<long>());
    INFO("index " << f.index << " exponent " << e);
    CHECK(f.coeff(e) == v);
  }
  // Every other exponent below the printed precision is zero.
  for (const auto& [e, v] : f.coeffs) {
    if (e >= prec) break;
    bool listed = false;
    for (const auto& t : entry["terms"])
      if (t[0].get<long>() == e) listed = true;
    INFO("index " << f.index << " unexpected exponent " << e);
    CHECK(listed);
  }
}

}  // namespace

TEST_CASE("level 4 weight 1/2 basis matches printed list") {
  for (const auto& e : golden()["level4_f"]) checkAgainst(basisF(e["index"], e["prec"]), e);
  CHECK_THROWS_WITH(basisF(5, 5), "index not in plus-space support");
}

TEST_CASE("level 4 weight 3/2 basis matches printed list") {
  for (const auto& e : golden()["level4_g"]) checkAgainst(basisG(e["index"], e["prec"]), e);
  CHECK_THROWS_WITH(basisG(2, 5), "index not in plus-space support");
}

TEST_CASE("level 8 basis matches printed list") {
  for (const auto& e : golden()["level8_f"]) checkAgainst(basisFLevelP(2, e["index"], e["prec"]), e);
}

TEST_CASE("bases are integral with plus-space support") {
  for (long p : {1L, 2L, 3L, 5L})
    for (long d = 0; d <= 30; ++d) {
      if (!admissibleF(d, p)) continue;
      HalfIntForm f = basisFLevelP(p, d, 30);
      CHECK(f.supportOk());
      CHECK(f.coeff(-d) == 1);
      for (long e = -d + 1; e <= 0; ++e) CHECK(f.coeff(e) == (d == 0 && e == 0 ? 1 : 0));
    }
  for (long D = 1; D <= 40; ++D) {
    if (!admissibleG(D, 1)) continue;
    HalfIntForm g = basisG(D, 20);
    CHECK(g.supportOk());
    CHECK(g.coeff(-D) == 1);
    CHECK(g.coeff(0) == (isSquare(D) ? -2 : 0));
    for (long e = -D + 1; e < 0; ++e) CHECK(g.coeff(e) == 0);
  }
}

TEST_CASE("basis agrees with a reduction of f_3 j(4tau)") {
  QSeries f = basisF(3, 20).toSeries() * jScaled(4, 30);
  f = f.truncated(15);
  for (long dp : {0L, 3L, 4L}) f -= basisF(dp, 20).toSeries() * f.coeff(-dp);
  CHECK(f.truncated(15).agreesWith(basisF(7, 15).toSeries()));
}

TEST_CASE("duality at level 4") {
  for (long D = 1; D <= 40; ++D) {
    if (!admissibleG(D, 1)) continue;
    for (long d = 0; d <= 40; ++d) {
      if (!admissibleF(d, 1)) continue;
      DualityResult r = dualityCheck(D, d, 1);
      INFO("D=" << D << " d=" << d);
      CHECK(r.ok);
    }
  }
  DualityResult r = dualityCheck(1, 3, 1);
  CHECK(r.A == -248);
  CHECK(r.B == 248);
  DualityResult r2 = dualityCheck(5, 4, 1);
  CHECK(r2.A == 565760);
}

TEST_CASE("constant term of U_4(f_d g_D) vanishes") {
  CHECK(constantTerm(uOperator(basisF(3, 12).toSeries() * basisG(1, 12).toSeries(), 4)) == 0);
  for (long d : {0L, 3L, 4L, 7L, 8L})
    for (long D : {1L, 4L, 5L, 8L})
      CHECK(constantTerm(uOperator(basisF(d, 20).toSeries() * basisG(D, 20).toSeries(), 4)) == 0);
}

TEST_CASE("half-integral Hecke operators") {
  HalfIntForm f3 = basisF(3, 200);
  CHECK(heckeTm2(f3, 1).coeffs == f3.coeffs);
  // A_p(D,d) = p A(p^2 D, d) + (D/p) A(D, d) + A(D/p^2, d) for (p, D, d) = (3, 1, 3).
  HalfIntForm t9 = heckeTm2(f3, 3);
  CHECK(t9.coeff(1) == 3 * f3.coeff(9) + kronecker(1, 3) * f3.coeff(1));
  // A_m(1, d) = sum_{n | m} n A(n^2, d).
  for (long d : {3L, 4L, 7L, 8L})
    for (long m : {2L, 3L, 4L, 5L, 6L}) {
      HalfIntForm f = basisF(d, 200);
      Integer rhs = 0;
      for (long n : divisors(m)) rhs += n * f.coeff(n * n);
      CHECK(heckeTm2(f, m).coeff(1) == rhs);
    }
  HalfIntForm g1 = basisG(1, 100);
  HalfIntForm t = heckeTm2(g1, 2);
  CHECK(t.coeff(-4) == 2);
  CHECK(t.coeff(-1) == 1);
  CHECK(t.supportOk());
}

TEST_CASE("B recurrences") {
  RecurrenceResult r1 = recurrenceCheckB(1);
  CHECK(r1.b4nm1 == 248);
  CHECK(r1.b4n == -492);
  CHECK(r1.ok);
  RecurrenceResult r2 = recurrenceCheckB(2);
  CHECK(r2.b4nm1 == 4119);
  CHECK(r2.b4n == -7256);
  for (long n = 1; n <= 50; ++n) CHECK(recurrenceCheckB(n).ok);
}

TEST_CASE("traces of singular moduli are minus the coefficients of g_1") {
  for (const auto& t : golden()["traces"]) CHECK(trace(t[0].get<long>()).value == Integer(t[1].get<long>()));
  HalfIntForm g1 = basisG(1, 151);
  for (long d = 3; d <= 150; ++d) {
    if (d % 4 == 1 || d % 4 == 2) continue;
    INFO("d=" << d);
    CHECK(trace(d).value == -g1.coeff(d));
  }
}
