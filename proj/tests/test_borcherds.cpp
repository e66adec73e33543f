#include "doctest.h"
#include "golden_loader.hpp"
#include "singmod/borcherds.hpp"
#include "singmod/forms.hpp"
#include "singmod/moduli.hpp"

using namespace singmod;

TEST_CASE("psi lift of 12 theta is Delta") {
  HalfIntForm th = basisF(0, 401);
  for (auto& [e, v] : th.coeffs) v *= 12;
  ProductExpansion psi = psiLift(th, 20);
  CHECK(psi.weight == 12);
  CHECK(psi.h == 1);
  CHECK(psi.expand().agreesWith(standardForm(StandardForm::Delta, 21)));
  CHECK(psi.expand().precNum() == 21);
}

TEST_CASE("product exponents") {
  ProductExpansion e4 = productExponents(eisenstein(4, 10));
  for (const auto& t : golden()["e4_product_exponents"]) CHECK(e4.exponents[t[0].get<long>()] == t[1].get<long>());
  ProductExpansion d = productExponents(standardForm(StandardForm::Delta, 30).shifted(-1));
  CHECK(d.h == 0);
  for (long n = 1; n < 29; ++n) CHECK(d.exponents[n] == 24);
  CHECK(productExponents(QSeries::fromTerms({{0, 1}}, 20)).exponents.empty());
  CHECK_THROWS_WITH(productExponents(QSeries::fromTerms({{0, 1}, {1, Rational(1, 2)}}, 5)),
                    "not a Borcherds product at this precision");
}

TEST_CASE("round trip and additivity") {
  for (long dd : {3L, 4L, 7L}) {
    ProductExpansion p = psiLift(basisF(dd, 226), 15);
    p = p.scaled(p.h.get_den().get_si());
    ProductExpansion back = productExponents(p.expand());
    CHECK(back.exponents == p.exponents);
    CHECK(back.h == p.h);
  }
  CHECK_THROWS_WITH(psiLift(basisF(3, 226), 15).expand(), "fractional leading exponent; raise to a power first");
  // psi(f + f') = psi(f) psi(f')
  HalfIntForm a = basisF(4, 226), b = basisF(7, 226);
  HalfIntForm s = a;
  for (const auto& [e, v] : b.coeffs) s.coeffs[e] += v;
  ProductExpansion pa = psiLift(a, 15).scaled(2), pb = psiLift(b, 15).scaled(2), ps = psiLift(s, 15).scaled(2);
  CHECK(ps.h == pa.h + pb.h);
  CHECK(ps.expand().agreesWith(pa.expand() * pb.expand()));
}

TEST_CASE("Hilbert polynomials as Borcherds products") {
  for (long d : {3L, 4L, 7L, 8L, 11L, 12L, 15L, 16L, 19L, 20L, 23L}) {
    INFO("d=" << d);
    ProductCheck c = verifyProductLevel1(d, 30);
    CHECK(c.ok);
    CHECK(c.h == hurwitz(d));
  }
  CHECK(verifyProductLevel1(3, 30).power == 3);
  CHECK(verifyProductLevel1(4, 30).power == 2);
  CHECK(verifyProductLevel1(15, 30).h == 2);
}

TEST_CASE("Fricke products") {
  long seen = 0;
  for (long d = 1; seen < 5; ++d) {
    if (!admissibleF(d, 2)) continue;
    ++seen;
    INFO("d=" << d);
    ProductCheck c = verifyProductFricke(2, d, 20);
    CHECK(c.ok);
  }
  ProductCheck c4 = verifyProductFricke(2, 4, 20);
  CHECK(c4.exponents[2] == 2 * coeffA(2, 4, 4));
  CHECK(c4.h == Rational(1, 2));
  for (long p : {3L, 5L})
    for (long d = 1; d <= 20; ++d) {
      if (!admissibleF(d, p)) continue;
      INFO("p=" << p << " d=" << d);
      CHECK(verifyProductFricke(p, d, 15).ok);
    }
}

TEST_CASE("exponents from generalized traces") {
  for (long d = 3; d <= 40; ++d) {
    if (d % 4 == 1 || d % 4 == 2) continue;
    for (long u = 1; u <= 4; ++u) {
      INFO("d=" << d << " u=" << u);
      CHECK(exponentTraceCheck(u, d).ok);
    }
  }
}
