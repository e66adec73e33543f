#include "doctest.h"
#include "singmod/forms.hpp"
#include "singmod/moduli.hpp"

using namespace singmod;

namespace {

BigFloat jAt(const BigComplex& tau) {
  const QSeries& J = bigJSeries(60);
  return evalSeries(J, tau, 12).value.re + 744;
}

}  // namespace

TEST_CASE("singular moduli") {
  DigitsScope scope(50);
  CHECK(abs(jAt(root({1, 0, 1})) - 1728) < 1e-10);
  BigComplex rho{BigFloat(1) / 2, sqrt(BigFloat(3)) / 2};
  CHECK(abs(jAt(rho)) < 1e-10);
  BigComplex i2{BigFloat(0), sqrt(BigFloat(2))};
  CHECK(abs(jAt(i2) - 8000) < 1e-10);
  BigComplex r7{BigFloat(1) / 2, sqrt(BigFloat(7)) / 2};
  CHECK(abs(jAt(r7) + 3375) < 1e-10);
}

TEST_CASE("evaluation reports insufficient precision") {
  DigitsScope scope(30);
  QSeries J = standardForm(StandardForm::BigJ, 5);
  CHECK_THROWS_WITH(evalSeries(J, BigComplex(BigFloat(0), BigFloat(1)), 15), "insufficient series precision");
}

TEST_CASE("traces") {
  CHECK(trace(3).value == -248);
  CHECK(trace(4).value == 492);
  CHECK(trace(7).value == -4119);
  CHECK(trace(8).value == 7256);
  CHECK(trace(-1).value == -1);
  CHECK(trace(0).value == 2);
  CHECK(trace(8).residual < 1e-6);
  CHECK_THROWS_WITH(trace(5), "d not ≡ 0,3 mod 4");
}

TEST_CASE("hilbert class polynomials") {
  HilbertPoly h7 = hilbertPoly(7);
  CHECK(h7.coeffs == std::vector<Integer>{3375, 1});
  CHECK(h7.tag == FracTag::None);
  HilbertPoly h3 = hilbertPoly(3);
  CHECK(h3.coeffs == std::vector<Integer>{1});
  CHECK(h3.tag == FracTag::CubeRootX);
  HilbertPoly h15 = hilbertPoly(15);
  CHECK(h15.coeffs == std::vector<Integer>{Integer(-121287375), 191025, 1});
  HilbertPoly h4 = hilbertPoly(4);
  CHECK(h4.tag == FracTag::SqrtXMinus1728);
  HilbertPoly h12 = hilbertPoly(12);
  CHECK(h12.coeffs == std::vector<Integer>{-54000, 1});
  CHECK(h12.tag == FracTag::CubeRootX);
  for (long d : {3L, 4L, 7L, 8L, 11L, 12L, 15L, 16L, 19L, 20L, 23L, 24L, 27L, 28L, 31L, 32L, 35L, 36L, 39L, 40L}) {
    HilbertPoly h = hilbertPoly(d);
    Rational deg = static_cast<long>(h.coeffs.size()) - 1;
    if (h.tag == FracTag::CubeRootX) deg += Rational(1, 3);
    if (h.tag == FracTag::SqrtXMinus1728) deg += Rational(1, 2);
    CHECK(deg == hurwitz(d));
    CHECK(h.residual < 1e-6);
  }
}

TEST_CASE("faber polynomials") {
  CHECK(faber(0, 5).series.coeff(0) == 1);
  FaberPoly f1 = faber(1, 5);
  CHECK(f1.jCoeffs == std::vector<Integer>{-744, 1});
  CHECK(f1.series.coeff(1) == 196884);
  FaberPoly f2 = faber(2, 5);
  CHECK(f2.series.coeff(-2) == 1);
  CHECK(f2.series.coeff(-1) == 0);
  CHECK(f2.series.coeff(0) == 0);
  for (long m = 1; m <= 6; ++m) {
    FaberPoly f = faber(m, 4);
    CHECK(f.series.coeff(-m) == 1);
    for (long k = -m + 1; k <= 0; ++k) CHECK(f.series.coeff(k) == 0);
    CHECK(f.series.hasIntegerCoefficients());
  }
}

TEST_CASE("generalized traces") {
  CHECK(generalizedTrace(1, 3) == -248);
  CHECK(generalizedTrace(1, 4) == 492);
}

TEST_CASE("lambda series") {
  QSeries l3 = lambdaSeries(3, 3);
  CHECK(l3.coeff(0) == Rational(1, 3));
  CHECK(l3.coeff(1) == -248);
  QSeries l4 = lambdaSeries(4, 3);
  CHECK(l4.coeff(0) == Rational(1, 2));
  CHECK(l4.coeff(1) == 492);
  for (long d : {7L, 8L, 11L, 12L, 15L, 16L, 20L, 23L, 24L}) {
    QSeries l = lambdaSeries(d, 2);
    CHECK(l.coeff(0) == hurwitz(d));
    CHECK(Integer(l.coeff(1).get_num()) == trace(d).value);
  }
}

TEST_CASE("exp identity through generalized traces") {
  for (long d : {3L, 4L, 7L, 8L, 11L, 12L, 15L, 16L, 19L, 20L, 23L, 24L, 27L, 28L, 31L, 32L, 35L, 36L, 39L, 40L}) {
    long M = d <= 16 ? 12 : 4;
    QSeries l = lambdaSeries(d, M + 1);
    for (long m = 1; m <= M; ++m) CHECK(l.coeff(m) == Rational(generalizedTrace(m, d)));
  }
}

TEST_CASE("modular polynomial") {
  ModularPolynomial psi = modularPolynomial(2, 20);
  CHECK(psi.degreeX() == 3);
  CHECK(psi.degreeY() == 3);
  QSeries j = standardForm(StandardForm::J, 26);
  QSeries v = evalModularPolynomial(psi, jScaled(2, 26), j);
  CHECK(v.precNum() >= 20);
  CHECK(v.truncated(20).terms().empty());
  auto diag = psi.diagonal();
  CHECK(diag.size() == 5);
  CHECK((diag.back() == 1 || diag.back() == -1));
  ModularPolynomial psi3 = modularPolynomial(3, 10);
  CHECK(psi3.degreeX() == 4);
  QSeries v3 = evalModularPolynomial(psi3, jScaled(3, 20), standardForm(StandardForm::J, 20));
  CHECK(v3.truncated(10).terms().empty());
  CHECK(psi3.diagonal().size() == 7);
  CHECK(psi.coeffs.at({3, 0}) == 1);
  CHECK_THROWS_WITH(modularPolynomial(5, 5), "unsupported degree");
}
