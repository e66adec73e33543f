#include "singmod/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace singmod {

Json integerJson(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

double fixedDigits(double x, int significant) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return std::strtod(buf, nullptr);
}

Json toJson(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({e, integerJson(c.get_num()), integerJson(c.get_den())});
  Json out;
  out["expdenom"] = s.denom();
  if (s.isExact()) {
    out["prec_num"] = nullptr;
  } else {
    out["prec_num"] = s.precNum();
  }
  out["prec_den"] = s.denom();
  out["terms"] = terms;
  return out;
}

namespace {

Json repsJson(const ClassList& c) {
  Json reps = Json::array();
  for (const auto& r : c.reps) {
    Json row = {r.form.a, r.form.b, r.form.c, r.w};
    if (c.level > 1) row.push_back(r.levelWeight);
    reps.push_back(row);
  }
  return reps;
}

}  // namespace

Json toJson(const ClassList& c) {
  Json out;
  out["disc"] = c.disc;
  out["level"] = c.level;
  out["primitive_only"] = c.primitiveOnly;
  out["weight_sum"] = toString(c.weightSum());
  out["reps"] = repsJson(c);
  return out;
}

Json toJson(const HalfIntForm& f) {
  Json coeffs = Json::array();
  for (const auto& [e, v] : f.coeffs)
    if (e < f.prec && v != 0) coeffs.push_back({e, integerJson(v)});
  Json out;
  out["kind"] = kindName(f.kind);
  out["index"] = f.index;
  out["level"] = f.level();
  out["weight2"] = f.weight2;
  out["prec"] = f.prec;
  out["coeffs"] = coeffs;
  return out;
}

Json toJson(const JacobiSeries& phi) {
  Json cells = Json::array();
  for (const auto& [n, sl] : phi.slices)
    for (const auto& [r, v] : sl)
      if (v != 0) cells.push_back({n, r, integerJson(v.get_num()), integerJson(v.get_den())});
  Json out;
  out["weight"] = phi.weight;
  out["index"] = phi.index;
  out["prec_n"] = phi.precN;
  out["cells"] = cells;
  return out;
}

Json toJson(const TraceRecord& t) {
  Json out;
  out["d"] = t.d;
  out["trace"] = integerJson(t.value);
  out["raw"] = t.raw;
  out["residual"] = fixedDigits(t.residual, 3);
  out["digits"] = t.digits;
  out["series_prec"] = t.seriesPrec;
  out["classes"] = repsJson(t.classes);
  return out;
}

Json toJson(const HilbertPoly& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs) coeffs.push_back(integerJson(c));
  Json out;
  out["d"] = h.d;
  out["frac_tag"] = fracTagName(h.tag);
  out["coeffs"] = coeffs;
  out["residual"] = fixedDigits(h.residual, 3);
  return out;
}

Json toJson(const ProductCheck& c, long d) {
  Json exps = Json::array();
  for (const auto& [n, e] : c.exponents) exps.push_back({n, toString(e)});
  Json out;
  out["d"] = d;
  out["ok"] = c.ok;
  if (c.firstMismatch) out["first_mismatch_exponent"] = *c.firstMismatch;
  out["h"] = toString(c.h);
  out["power"] = c.power;
  out["prec"] = c.prec;
  out["exponents"] = exps;
  return out;
}

Json toJson(const HauptmodulSpec& h) {
  Json out;
  out["p"] = h.p;
  out["method"] = h.method == HauptmodulMethod::Eta ? "eta" : "rademacher";
  if (h.method == HauptmodulMethod::Eta) {
    out["exponent"] = h.exponent;
    out["prefactor_power"] = h.prefactorPower;
    out["constant_removed"] = toString(h.constantRemoved);
    out["series"] = toJson(h.series);
  } else {
    Json est = Json::array();
    for (double x : h.estimates) est.push_back(fixedDigits(x, 12));
    out["estimates"] = est;
  }
  return out;
}

Json toJson(const RademacherResult& r) {
  Json out;
  out["p"] = r.p;
  out["nu"] = r.nu;
  out["estimate"] = fixedDigits(r.estimate, 12);
  out["nearest_integer"] = fixedDigits(std::round(r.estimate), 17);
  out["c_max"] = r.cMax;
  out["d_max"] = r.dMax;
  out["tail_estimate"] = fixedDigits(r.tailEstimate, 3);
  return out;
}

Json toJson(const FrickeTraceRecord& r) {
  Json out;
  out["p"] = r.p;
  out["d"] = r.d;
  out["beta"] = r.beta;
  out["trace"] = integerJson(r.value);
  out["star_convention"] = toString(r.starConvention);
  out["raw"] = r.raw;
  out["residual"] = fixedDigits(r.residual, 3);
  out["digits"] = r.digits;
  out["series_prec"] = r.seriesPrec;
  out["classes"] = repsJson(r.classes);
  return out;
}

Json toJson(const DualityResult& r, long D, long d, long p) {
  Json out;
  out["D"] = D;
  out["d"] = d;
  out["level"] = 4 * p;
  out["A"] = integerJson(r.A);
  out["B"] = integerJson(r.B);
  out["ok"] = r.ok;
  return out;
}

}  // namespace singmod
