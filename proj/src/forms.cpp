#include "singmod/forms.hpp"

#include <stdexcept>

namespace singmod {

StandardForm parseStandardForm(const std::string& name) {
  if (name == "eta") return StandardForm::Eta;
  if (name == "delta") return StandardForm::Delta;
  if (name == "j") return StandardForm::J;
  if (name == "bigJ") return StandardForm::BigJ;
  if (name == "theta") return StandardForm::Theta;
  if (name == "theta1") return StandardForm::Theta1;
  throw std::invalid_argument("unknown standard form: " + name);
}

QSeries eisenstein(int k, long prec) {
  Rational c;
  switch (k) {
    case 4: c = 240; break;
    case 6: c = -504; break;
    case 8: c = 480; break;
    case 10: c = -264; break;
    case 12: c = Rational(65520, 691); break;
    default: throw std::invalid_argument("weight not in table");
  }
  if (prec < 1) throw std::invalid_argument("prec must be >= 1");
  std::vector<Integer> sigma(static_cast<size_t>(prec));
  for (long d = 1; d < prec; ++d) {
    Integer dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
    for (long n = d; n < prec; n += d) sigma[static_cast<size_t>(n)] += dk;
  }
  std::vector<Rational> coeffs(static_cast<size_t>(prec));
  coeffs[0] = 1;
  for (long n = 1; n < prec; ++n) coeffs[static_cast<size_t>(n)] = c * sigma[static_cast<size_t>(n)];
  return QSeries::fromDense(0, std::move(coeffs), prec);
}

QSeries eulerProduct(long prec) {
  if (prec < 1) throw std::invalid_argument("prec must be >= 1");
  std::vector<Rational> c(static_cast<size_t>(prec));
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 >= prec) break;
    int s = (k % 2 == 0) ? 1 : -1;
    c[static_cast<size_t>(e1)] = s;
    if (k > 0 && e2 < prec) c[static_cast<size_t>(e2)] = s;
  }
  return QSeries::fromDense(0, std::move(c), prec);
}

QSeries etaQuotient(const std::vector<std::pair<long, long>>& factors, long prec) {
  if (factors.empty()) throw std::invalid_argument("eta quotient has no factors");
  long N = 0;
  for (auto [m, e] : factors) {
    if (m <= 0) throw std::invalid_argument("eta quotient scale must be positive");
    N += m * e;
  }
  long Pf = -floorDiv(-(24 * prec - N), 24);
  if (Pf < 1) Pf = 1;
  QSeries F(Rational(1));
  for (auto [m, e] : factors) {
    if (e == 0) continue;
    long inner = -floorDiv(-Pf, m);
    F = F * scale(eulerProduct(inner).pow(e), m).truncated(Pf);
  }
  F = F.truncated(Pf);
  std::map<long, Rational> t;
  for (auto& [n, v] : F.terms()) t.emplace(24 * n + N, v);
  return QSeries::fromTerms(t, 24 * prec, 24).simplified();
}

QSeries standardForm(StandardForm which, long prec) {
  if (prec < 1) throw std::invalid_argument("prec must be >= 1");
  switch (which) {
    case StandardForm::Eta: return etaQuotient({{1, 1}}, prec).withDenom(24);
    case StandardForm::Delta: return eulerProduct(prec).pow(24).shifted(1).truncated(prec);
    case StandardForm::J:
    case StandardForm::BigJ: {
      QSeries num = eisenstein(4, prec + 1).pow(3);
      QSeries den = eulerProduct(prec + 1).pow(24);
      QSeries j = (num / den).shifted(-1);
      if (which == StandardForm::BigJ) j -= QSeries(Rational(744));
      return j;
    }
    case StandardForm::Theta:
    case StandardForm::Theta1: {
      std::vector<Rational> c(static_cast<size_t>(prec));
      c[0] = 1;
      for (long n = 1; n * n < prec; ++n)
        c[static_cast<size_t>(n * n)] = (which == StandardForm::Theta1 && n % 2) ? -2 : 2;
      return QSeries::fromDense(0, std::move(c), prec);
    }
  }
  throw std::logic_error("unreachable");
}

QSeries jScaled(long m, long prec) {
  return scale(standardForm(StandardForm::J, -floorDiv(-prec, m)), m).truncated(prec);
}

QSeries eisensteinScaled(int k, long m, long prec) {
  return scale(eisenstein(k, -floorDiv(-prec, m)), m).truncated(prec);
}

QSeries deltaScaled(long m, long prec) {
  return scale(standardForm(StandardForm::Delta, -floorDiv(-prec, m)), m).truncated(prec);
}

QSeries rankinCohen(const QSeries& f, const Rational& kf, const QSeries& g, const Rational& kg, int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("bracket order unsupported");
  std::vector<QSeries> df{f}, dg{g};
  for (int r = 1; r <= n; ++r) {
    df.push_back(qDerivative(df.back()));
    dg.push_back(qDerivative(dg.back()));
  }
  QSeries out;
  bool first = true;
  for (int r = 0; r <= n; ++r) {
    Rational c = binomial(kf + n - 1, n - r) * binomial(kg + n - 1, r);
    if (r % 2) c = -c;
    QSeries term = df[static_cast<size_t>(r)] * dg[static_cast<size_t>(n - r)] * c;
    if (first) {
      out = term;
      first = false;
    } else {
      out += term;
    }
  }
  return out;
}

}  // namespace singmod
