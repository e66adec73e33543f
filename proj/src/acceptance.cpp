#include "singmod/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "singmod/borcherds.hpp"
#include "singmod/forms.hpp"
#include "singmod/fricke.hpp"
#include "singmod/jacobi.hpp"
#include "singmod/moduli.hpp"
#include "singmod/plusspace.hpp"
#include "singmod/quadforms.hpp"

namespace singmod {

namespace {

using nlohmann::json;

struct Checker {
  long checks = 0;
  std::string failure;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Rational parseRational(const json& s) {
  Rational r(s.get<std::string>());
  r.canonicalize();
  return r;
}

void checkForm(const HalfIntForm& f, const json& entry, Checker& c) {
  long prec = entry["prec"];
  std::string tag = kindName(f.kind) + "_" + std::to_string(f.index);
  for (const auto& t : entry["terms"]) {
    long e = t[0];
    c.expect(f.coeff(e) == Integer(t[1].get<long>()), tag + " coefficient of q^" + std::to_string(e));
  }
  for (const auto& [e, v] : f.coeffs) {
    if (e >= prec) break;
    bool listed = false;
    for (const auto& t : entry["terms"])
      if (t[0].get<long>() == e) listed = true;
    c.expect(listed || v == 0, tag + " unexpected term q^" + std::to_string(e));
  }
}

void checkSlices(const JacobiSeries& phi, const json& slices, const std::string& tag, Checker& c) {
  for (const auto& sl : slices) {
    long n = sl["n"];
    for (const auto& cell : sl["cells"]) {
      long r = cell[0];
      c.expect(phi.coeff(n, r) == Rational(cell[1].get<long>()),
               tag + " c(" + std::to_string(n) + "," + std::to_string(r) + ")");
    }
  }
}

std::string criterion1(const json&, Checker& c) {
  DigitsScope scope(50);
  const QSeries& J = bigJSeries(60);
  auto j = [&](const BigComplex& tau) { return evalSeries(J, tau, 12).value.re + 744; };
  BigFloat half = BigFloat(1) / 2;
  struct Point {
    BigComplex tau;
    long value;
    const char* name;
  };
  std::vector<Point> pts = {{BigComplex(BigFloat(0), BigFloat(1)), 1728, "i"},
                            {BigComplex(half, sqrt(BigFloat(3)) / 2), 0, "(1+i sqrt3)/2"},
                            {BigComplex(BigFloat(0), sqrt(BigFloat(2))), 8000, "i sqrt2"},
                            {BigComplex(half, sqrt(BigFloat(7)) / 2), -3375, "(1+i sqrt7)/2"}};
  double worst = 0;
  for (const auto& p : pts) {
    double err = toDouble(abs(j(p.tau) - p.value));
    worst = std::max(worst, err);
    c.expect(err < 1e-6, std::string("j(") + p.name + ")");
  }
  return "4 points, max error " + sci(worst);
}

std::string criterion2(const json& g, Checker& c) {
  for (const auto& t : g["traces"]) {
    long d = t[0];
    c.expect(trace(d).value == Integer(t[1].get<long>()), "t(" + std::to_string(d) + ")");
  }
  HalfIntForm g1 = basisG(1, 151);
  long count = 0;
  for (long d = 3; d <= 150; ++d) {
    if (d % 4 == 1 || d % 4 == 2) continue;
    ++count;
    c.expect(trace(d).value == -g1.coeff(d), "t(" + std::to_string(d) + ") = -B(" + std::to_string(d) + ")");
  }
  return std::to_string(count) + " discriminants compared with g_1";
}

std::string criterion3(const json& g, Checker& c) {
  for (const auto& e : g["level4_f"]) checkForm(basisF(e["index"], e["prec"]), e, c);
  for (const auto& e : g["level4_g"]) checkForm(basisG(e["index"], e["prec"]), e, c);
  return std::to_string(g["level4_f"].size() + g["level4_g"].size()) + " reference expansions";
}

std::string criterion4(const json&, Checker& c) {
  long pairs = 0;
  auto grid = [&](long p, long Dmax, long dmax) {
    for (long D = 1; D <= Dmax; ++D) {
      if (!admissibleG(D, p)) continue;
      for (long d = 0; d <= dmax; ++d) {
        if (!admissibleF(d, p)) continue;
        ++pairs;
        c.expect(dualityCheck(D, d, p).ok, "level " + std::to_string(4 * p) + " A(" + std::to_string(D) + "," +
                                               std::to_string(d) + ") != -B");
      }
    }
  };
  grid(1, 40, 40);
  grid(2, 16, 32);
  return std::to_string(pairs) + " index pairs";
}

std::string criterion5(const json& g, Checker& c) {
  for (const auto& e : g["level8_f"]) checkForm(basisFLevelP(2, e["index"], e["prec"]), e, c);
  return std::to_string(g["level8_f"].size()) + " reference expansions";
}

std::string criterion6(const json&, Checker& c) {
  for (long n = 1; n <= 50; ++n) c.expect(recurrenceCheckB(n).ok, "recurrence at n=" + std::to_string(n));
  for (long n = 1; n <= 200; ++n) {
    ClassNumberIdentity id = classnumIdentities(n);
    c.expect(id.lhs1 == id.rhs1, "first identity at n=" + std::to_string(n));
    c.expect(id.lhs2 == id.rhs2, "second identity at n=" + std::to_string(n));
  }
  return "recurrences n <= 50, identities n <= 200";
}

std::string criterion7(const json& g, Checker& c) {
  HalfIntForm th = basisF(0, 29 * 29 + 1);
  for (auto& [e, v] : th.coeffs) v *= 12;
  ProductExpansion psi = psiLift(th, 30);
  QSeries lifted = psi.expand();
  c.expect(lifted.precNum() > 30 && lifted.agreesWith(standardForm(StandardForm::Delta, 31)), "psi(12 theta) = Delta");
  ProductExpansion e4 = productExponents(eisenstein(4, 10));
  for (const auto& t : g["e4_product_exponents"]) {
    long n = t[0];
    c.expect(e4.exponents[n] == t[1].get<long>(), "E4 exponent " + std::to_string(n));
  }
  long count = 0;
  for (long d = 3; d <= 60; ++d) {
    if (d % 4 == 1 || d % 4 == 2) continue;
    ++count;
    c.expect(verifyProductLevel1(d, 30).ok, "product for d=" + std::to_string(d));
  }
  return std::to_string(count) + " Hilbert polynomials as products";
}

std::string criterion8(const json& g, Checker& c) {
  for (const char* key : {"phi_1_2", "phi_4_2"}) {
    const json& e = g[key];
    long D = std::string(key) == "phi_1_2" ? 1 : 4;
    PhiSolution s = solvePhiDetailed(D, 2, 4);
    checkSlices(s.phi, e["slices"], key, c);
    c.expect(s.fConst[1] == parseRational(e["c1"]), std::string(key) + " c1");
    c.expect(s.fConst[2] == parseRational(e["c2"]), std::string(key) + " c2");
  }
  JacobiSeries v = vOperator(solvePhi(1, 1, 12), 2);
  JacobiSeries rhs = jacobiAdd(solvePhi(1, 2, v.precN), solvePhi(4, 2, v.precN), 2);
  c.expect(v == rhs, "V_2(phi_{1,1}) = 2 phi_{4,2} + phi_{1,2}");
  return "V_2 checked on q^n, n < " + std::to_string(v.precN);
}

std::string criterion9(const json& g, Checker& c) {
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    HauptmodulSpec h = hauptmodulEta(p, 30);
    c.expect(h.series.precNum() >= 30 && h.series.hasIntegerCoefficients() && h.series.coeff(-1) == 1 &&
                 h.series.coeff(0) == 0,
             "hauptmodul integrality p=" + std::to_string(p));
  }
  for (const auto& row : g["fricke_traces"]) {
    long p = row[0], d = row[1];
    c.expect(frickeTrace(p, d).value == Integer(row[2].get<long>()),
             "fricke_trace(" + std::to_string(p) + "," + std::to_string(d) + ")");
  }
  long seen = 0;
  std::string ds;
  for (long d = 1; seen < 5; ++d) {
    if (!admissibleF(d, 2)) continue;
    ++seen;
    ds += (ds.empty() ? "" : ",") + std::to_string(d);
    c.expect(verifyProductFricke(2, d, 20).ok, "Fricke product p=2 d=" + std::to_string(d));
  }
  return "Fricke products for d in {" + ds + "}";
}

std::string criterion10(const json&, Checker& c) {
  const long N = 5000;
  double worst = 0;
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    HauptmodulSpec h = hauptmodulEta(p, 6);
    for (const auto& r : rademacherCoeffs(p, {1, 2, 3, 4}, N, N)) {
      double err = std::fabs(r.estimate - h.series.coeff(r.nu).get_d());
      worst = std::max(worst, err);
      c.expect(err < std::max(1e-2, 3 * r.tailEstimate),
               "p=" + std::to_string(p) + " nu=" + std::to_string(r.nu) + " error " + sci(err));
    }
  }
  double worst11 = 0;
  for (const auto& r : rademacherCoeffs(11, {1, 2, 3}, N, N)) {
    double err = std::fabs(r.estimate - std::round(r.estimate));
    worst11 = std::max(worst11, err);
    c.expect(err < 5e-2, "p=11 nu=" + std::to_string(r.nu) + " distance " + sci(err));
  }
  return "max error " + sci(worst) + ", p=11 max distance " + sci(worst11);
}

std::string criterion11(const json&, Checker& c) {
  ModularPolynomial psi = modularPolynomial(2, 20);
  QSeries v = evalModularPolynomial(psi, jScaled(2, 26), standardForm(StandardForm::J, 26));
  c.expect(v.precNum() >= 20 && v.truncated(20).terms().empty(), "Psi_2(j(2tau), j(tau)) vanishes to q^20");
  c.expect(psi.degreeX() == 3, "deg_X Psi_2 = 3");
  auto diag = psi.diagonal();
  c.expect(diag.size() == 5, "diagonal degree 4");
  c.expect(!diag.empty() && (diag.back() == 1 || diag.back() == -1), "diagonal leading term +-1");
  return "vanishing checked on " + std::to_string(v.precNum()) + " coefficients";
}

struct Spec {
  const char* title;
  double budget;
  std::string (*run)(const json&, Checker&);
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s = {
      {"singular moduli", 1, criterion1},
      {"traces of singular moduli", 60, criterion2},
      {"level 4 bases", 0, criterion3},
      {"duality grids", 0, criterion4},
      {"level 8 basis", 0, criterion5},
      {"recurrences and class number identities", 0, criterion6},
      {"Borcherds products", 300, criterion7},
      {"Jacobi forms", 0, criterion8},
      {"Fricke traces and products", 0, criterion9},
      {"Rademacher sums", 600, criterion10},
      {"modular polynomial", 0, criterion11},
  };
  return s;
}

}  // namespace

nlohmann::json loadGolden(const std::string& dir) {
  std::string path = dir + "/printed_expansions.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  return nlohmann::json::parse(in);
}

int acceptanceCount() { return static_cast<int>(specs().size()); }

std::string acceptanceTitle(int id) {
  if (id < 1 || id > acceptanceCount()) throw std::out_of_range("no such criterion");
  return specs()[static_cast<size_t>(id - 1)].title;
}

CriterionResult runCriterion(int id, const nlohmann::json& golden) {
  const Spec& s = specs().at(static_cast<size_t>(id - 1));
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.budgetSeconds = s.budget;
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = s.run(golden, c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = c.ok();
  if (!c.ok()) r.detail = "failed: " + c.failure;
  if (r.pass && s.budget > 0 && r.seconds > s.budget) {
    r.pass = false;
    r.detail = "time budget exceeded";
  }
  return r;
}

std::vector<CriterionResult> runAcceptance(const nlohmann::json& golden, const std::vector<int>& ids,
                                           const std::function<void(const CriterionResult&)>& onResult) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= acceptanceCount(); ++i) todo.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : todo) {
    out.push_back(runCriterion(id, golden));
    if (onResult) onResult(out.back());
  }
  return out;
}

}  // namespace singmod
