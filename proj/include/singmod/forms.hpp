#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singmod/qseries.hpp"

namespace singmod {

// All builders return series whose terms with exponent < prec are known.
enum class StandardForm { Eta, Delta, J, BigJ, Theta, Theta1 };

StandardForm parseStandardForm(const std::string& name);
QSeries eisenstein(int k, long prec);
QSeries standardForm(StandardForm which, long prec);
// prod_{n>=1} (1 - q^n)
QSeries eulerProduct(long prec);
QSeries etaQuotient(const std::vector<std::pair<long, long>>& factors, long prec);
QSeries jScaled(long m, long prec);
QSeries eisensteinScaled(int k, long m, long prec);
QSeries deltaScaled(long m, long prec);
QSeries rankinCohen(const QSeries& f, const Rational& kf, const QSeries& g, const Rational& kg, int n);

}  // namespace singmod
