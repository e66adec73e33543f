#pragma once

#include <string>

#include "json.hpp"
#include "singmod/borcherds.hpp"
#include "singmod/fricke.hpp"
#include "singmod/jacobi.hpp"
#include "singmod/moduli.hpp"
#include "singmod/plusspace.hpp"
#include "singmod/qseries.hpp"
#include "singmod/quadforms.hpp"

namespace singmod {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integerJson(const Integer& x);
// Rounds to a fixed number of significant digits so output is reproducible.
double fixedDigits(double x, int significant = 10);

Json toJson(const QSeries& s);
Json toJson(const ClassList& c);
Json toJson(const HalfIntForm& f);
Json toJson(const JacobiSeries& phi);
Json toJson(const TraceRecord& t);
Json toJson(const HilbertPoly& h);
Json toJson(const ProductCheck& c, long d);
Json toJson(const HauptmodulSpec& h);
Json toJson(const RademacherResult& r);
Json toJson(const FrickeTraceRecord& r);
Json toJson(const DualityResult& r, long D, long d, long p);

}  // namespace singmod
