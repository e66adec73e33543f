#include "singmod/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "singmod/acceptance.hpp"
#include "singmod/borcherds.hpp"
#include "singmod/fricke.hpp"
#include "singmod/jacobi.hpp"
#include "singmod/moduli.hpp"
#include "singmod/plusspace.hpp"
#include "singmod/quadforms.hpp"
#include "singmod/serialize.hpp"

#ifndef SINGMOD_GOLDEN_DIR
#define SINGMOD_GOLDEN_DIR "golden"
#endif

namespace singmod {

namespace {

struct CheckFailed {};

std::string scalarText(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emitCsv(const Json& j, const std::string& prefix, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      emitCsv(v, key, out);
    } else if (v.is_array()) {
      for (const auto& row : v) {
        out << key;
        if (row.is_array()) {
          for (const auto& x : row) out << ',' << scalarText(x);
        } else if (row.is_object()) {
          for (auto r = row.begin(); r != row.end(); ++r) out << ',' << r.key() << '=' << scalarText(r.value());
        } else {
          out << ',' << scalarText(row);
        }
        out << '\n';
      }
    } else {
      out << key << ',' << scalarText(v) << '\n';
    }
  }
}

void emitText(const Json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      emitText(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << it.key() << ":\n";
      for (const auto& row : v) {
        out << indent << "  -\n";
        emitText(row, indent + "    ", out);
      }
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    emitCsv(j, "", out);
  } else if (format == "text") {
    emitText(j, "", out);
  } else {
    out << j.dump() << '\n';
  }
}

long envPrecision() {
  const char* s = std::getenv("SINGMOD_PREC");
  if (s == nullptr || *s == '\0') return 30;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) throw std::invalid_argument("SINGMOD_PREC must be a positive integer");
  return v;
}

void requireDisc(long d) {
  if (d < 0 || (d % 4 != 0 && d % 4 != 3)) throw std::domain_error("d not ≡ 0,3 mod 4");
}

void requireLevel(long p) {
  if (p != 1 && !isPrime(p)) throw std::domain_error("level parameter must be 1 or a prime");
}

std::string suiteTable(const std::vector<CriterionResult>& rs, bool timings) {
  std::ostringstream os;
  char buf[256];
  for (const auto& r : rs) {
    std::snprintf(buf, sizeof buf, "%-4d %-4s %-42s", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str());
    os << buf;
    if (timings) {
      std::snprintf(buf, sizeof buf, " %9.2fs", r.seconds);
      os << buf;
    }
    os << "  " << r.detail << '\n';
  }
  return os.str();
}

}  // namespace

std::string defaultGoldenDir() {
  const char* s = std::getenv("SINGMOD_GOLDEN_DIR");
  if (s != nullptr && *s != '\0') return s;
  return SINGMOD_GOLDEN_DIR;
}

int runCli(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Singular moduli, traces, plus-space forms and Borcherds products"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool jsonFlag = false;
  int verbosity = 0;
  std::string goldenDir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--json", jsonFlag, "Shorthand for --format json");
  app.add_flag("-v,--verbose", verbosity, "Report progress on stderr");
  app.add_option("--golden-dir", goldenDir, "Directory with printed_expansions.json");

  long d = 0, D = 0, p = 1, m = 1, n = 1, prec = 0, precN = 8, beta = -1, nu = 1, count = 4;
  long cmax = 5000, dmaxR = 0, Dmax = 12, dmaxGrid = 12, level = 4;
  bool primitive = false, timings = false;
  std::string method = "eta", kind = "f";
  std::vector<int> only;

  std::map<std::string, std::function<Json()>> handlers;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    subs[name] = s;
    return s;
  };
  auto precOption = [&](CLI::App* s) { s->add_option("--prec", prec, "Series precision (default $SINGMOD_PREC or 30)"); };

  CLI::App* s = sub("trace", "Trace of singular moduli t(d)");
  s->add_option("--d", d)->required();
  handlers["trace"] = [&] {
    requireDisc(d);
    if (d == 0) throw std::domain_error("d must be positive");
    return toJson(trace(d));
  };

  s = sub("hurwitz", "Hurwitz class number H(d) and h(-d)");
  s->add_option("--d", d)->required();
  handlers["hurwitz"] = [&] {
    requireDisc(d);
    Json j;
    j["d"] = d;
    j["hurwitz"] = toString(hurwitz(d));
    if (d > 0) j["class_number"] = classNumber(d);
    return j;
  };

  s = sub("classes", "Reduced forms of discriminant -d, or level classes when --p > 1");
  s->add_option("--d", d)->required();
  s->add_option("--p", p);
  s->add_option("--beta", beta, "Residue of b mod 2p (default: smallest)");
  s->add_flag("--primitive", primitive);
  handlers["classes"] = [&] {
    requireDisc(d);
    if (p == 1) return toJson(enumerateClasses(d, primitive));
    requireLevel(p);
    if (!admissibleAtLevel(d, p)) throw std::domain_error("discriminant not admissible at level p");
    return toJson(levelClasses(d, p, beta < 0 ? smallestBeta(d, p) : beta));
  };

  s = sub("hilbert", "Hilbert class polynomial");
  s->add_option("--d", d)->required();
  handlers["hilbert"] = [&] {
    requireDisc(d);
    return toJson(hilbertPoly(d));
  };

  s = sub("basis-f", "Weight 1/2 plus-space basis element f_d");
  s->add_option("--d", d)->required();
  s->add_option("--p", p, "Level 4p");
  precOption(s);
  handlers["basis-f"] = [&] {
    requireLevel(p);
    return toJson(p == 1 ? basisF(d, prec) : basisFLevelP(p, d, prec));
  };

  s = sub("basis-g", "Weight 3/2 plus-space basis element g_D");
  s->add_option("--D", D)->required();
  s->add_option("--p", p, "Level 4p (1, 2, 3 or 5)");
  precOption(s);
  handlers["basis-g"] = [&] {
    requireLevel(p);
    return toJson(p == 1 ? basisG(D, prec) : basisGLevelP(p, D, prec));
  };

  s = sub("duality", "Check A(D,d) = -B(D,d) on a grid");
  s->add_option("--level", level, "4, 8, 12 or 20")->check(CLI::IsMember({4, 8, 12, 20}));
  s->add_option("--Dmax", Dmax);
  s->add_option("--dmax", dmaxGrid);
  handlers["duality"] = [&] {
    long lp = level / 4;
    Json fails = Json::array();
    long pairs = 0;
    for (long DD = 1; DD <= Dmax; ++DD) {
      if (!admissibleG(DD, lp)) continue;
      for (long dd = 0; dd <= dmaxGrid; ++dd) {
        if (!admissibleF(dd, lp)) continue;
        ++pairs;
        DualityResult r = dualityCheck(DD, dd, lp);
        if (!r.ok) fails.push_back(toJson(r, DD, dd, lp));
      }
    }
    Json j;
    j["level"] = level;
    j["Dmax"] = Dmax;
    j["dmax"] = dmaxGrid;
    j["pairs"] = pairs;
    j["failures"] = fails;
    j["ok"] = fails.empty();
    return j;
  };

  s = sub("hecke", "Hecke operator T(m^2) on a plus-space basis element");
  s->add_option("--kind", kind, "f (weight 1/2) or g (weight 3/2)")->check(CLI::IsMember({"f", "g"}));
  s->add_option("--d", d, "Index of the basis element")->required();
  s->add_option("--m", m)->required();
  precOption(s);
  handlers["hecke"] = [&] {
    if (m < 1) throw std::domain_error("m must be positive");
    long inner = prec * m * m + 1;
    HalfIntForm f = kind == "f" ? basisF(d, inner) : basisG(d, inner);
    HalfIntForm t = heckeTm2(f, m);
    Json j;
    j["m"] = m;
    j["input"] = Json{{"kind", kindName(f.kind)}, {"index", d}};
    j["result"] = toJson(t);
    return j;
  };

  s = sub("jacobi", "Weight 2 index p Jacobi form with principal part q^-D");
  s->add_option("--D", D)->required();
  s->add_option("--p", p, "Index (1, 2, 3 or 5)");
  s->add_option("--precn", precN, "Number of q-powers kept");
  handlers["jacobi"] = [&] {
    PhiSolution sol = solvePhiDetailed(D, p, precN);
    Json j = toJson(sol.phi);
    j["delta_power"] = sol.deltaPower;
    Json fc = Json::array();
    for (const auto& c : sol.fConst) fc.push_back(toString(c));
    j["f_constants"] = fc;
    return j;
  };

  s = sub("hauptmodul", "Canonical hauptmodul for Gamma0(p)+");
  s->add_option("--p", p)->required();
  s->add_option("--method", method)->check(CLI::IsMember({"eta", "rademacher"}));
  precOption(s);
  s->add_option("--count", count, "Rademacher: number of coefficients");
  s->add_option("--cmax", cmax);
  s->add_option("--dmax", dmaxR, "Rademacher: Fricke-family cutoff (default cmax)");
  handlers["hauptmodul"] = [&] {
    if (!isMonsterPrime(p)) throw std::domain_error("p is not a Monster prime");
    if (method == "eta") return toJson(hauptmodulEta(p, prec));
    Json j = toJson(hauptmodulRademacher(p, count, cmax, dmaxR > 0 ? dmaxR : cmax));
    j["c_max"] = cmax;
    j["d_max"] = dmaxR > 0 ? dmaxR : cmax;
    return j;
  };

  s = sub("rademacher", "Rademacher estimate for one hauptmodul coefficient");
  s->add_option("--p", p)->required();
  s->add_option("--nu", nu)->required();
  s->add_option("--cmax", cmax);
  s->add_option("--dmax", dmaxR, "Fricke-family cutoff (default cmax)");
  handlers["rademacher"] = [&] { return toJson(rademacherCoeff(p, nu, cmax, dmaxR > 0 ? dmaxR : cmax)); };

  s = sub("fricke-trace", "Trace of the Fricke hauptmodul over level classes");
  s->add_option("--p", p)->required();
  s->add_option("--d", d)->required();
  s->add_option("--beta", beta);
  handlers["fricke-trace"] = [&] {
    if (!isMonsterPrime(p)) throw std::domain_error("p is not a Monster prime");
    return toJson(beta < 0 ? frickeTrace(p, d) : frickeTraceBeta(p, d, beta));
  };

  s = sub("borcherds-verify", "Check a class polynomial against its Borcherds product");
  s->add_option("--d", d)->required();
  s->add_option("--p", p, "1 for j, otherwise the Fricke level");
  precOption(s);
  handlers["borcherds-verify"] = [&] {
    ProductCheck c = p == 1 ? (requireDisc(d), verifyProductLevel1(d, prec)) : verifyProductFricke(p, d, prec);
    Json j = toJson(c, d);
    if (p != 1) j["p"] = p;
    if (!c.ok) {
      out << j.dump() << '\n';
      throw CheckFailed{};
    }
    return j;
  };

  s = sub("identities", "B-coefficient recurrences and Hurwitz class number identities at n");
  s->add_option("--n", n)->required();
  handlers["identities"] = [&] {
    RecurrenceResult r = recurrenceCheckB(n);
    ClassNumberIdentity c = classnumIdentities(n);
    Json j;
    j["n"] = n;
    j["recurrence"] = Json{{"B(4n-1)", integerJson(r.b4nm1)},
                           {"rhs(4n-1)", integerJson(r.rhs4nm1)},
                           {"B(4n)", integerJson(r.b4n)},
                           {"rhs(4n)", integerJson(r.rhs4n)},
                           {"ok", r.ok}};
    j["class_numbers"] = Json{{"lhs1", toString(c.lhs1)},
                              {"rhs1", toString(c.rhs1)},
                              {"lhs2", toString(c.lhs2)},
                              {"rhs2", toString(c.rhs2)},
                              {"ok", c.lhs1 == c.rhs1 && c.lhs2 == c.rhs2}};
    j["ok"] = r.ok && c.lhs1 == c.rhs1 && c.lhs2 == c.rhs2;
    return j;
  };

  s = sub("suite", "Run the acceptance battery");
  s->add_option("--only", only, "Criterion numbers to run")->delimiter(',');
  s->add_flag("--timings", timings, "Include wall times (output is then not reproducible)");
  bool suiteOk = true;
  handlers["suite"] = [&] {
    Json golden = loadGolden(goldenDir.empty() ? defaultGoldenDir() : goldenDir);
    for (int id : only)
      if (id < 1 || id > acceptanceCount()) throw std::domain_error("no acceptance criterion " + std::to_string(id));
    auto rs = runAcceptance(golden, only, [&](const CriterionResult& r) {
      if (verbosity > 0) std::fprintf(stderr, "criterion %d %s (%.1fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.seconds);
    });
    Json rows = Json::array();
    for (const auto& r : rs) {
      Json row;
      row["id"] = r.id;
      row["title"] = r.title;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      if (r.budgetSeconds > 0) row["budget_seconds"] = r.budgetSeconds;
      if (timings) row["seconds"] = fixedDigits(r.seconds, 3);
      rows.push_back(row);
      suiteOk = suiteOk && r.pass;
    }
    Json j;
    j["criteria"] = rows;
    j["ok"] = suiteOk;
    if (format == "text") {
      out << suiteTable(rs, timings) << (suiteOk ? "all criteria pass\n" : "some criteria fail\n");
      return Json();
    }
    return j;
  };

  auto errorJson = [&](const std::string& command, const std::string& kindName, const std::string& msg) {
    Json e;
    e["error"] = msg;
    e["kind"] = kindName;
    if (!command.empty()) e["command"] = command;
    out << e.dump() << '\n';
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    errorJson("", "usage", e.what());
    return 2;
  }
  if (jsonFlag) format = "json";

  std::string command;
  for (const auto& [name, sc] : subs)
    if (sc->parsed()) command = name;
  try {
    if (prec == 0) prec = envPrecision();
    Json j = handlers.at(command)();
    if (!j.is_null()) emit(j, format, out);
    if (command == "duality" && !j["ok"].get<bool>()) return 1;
    if (command == "identities" && !j["ok"].get<bool>()) return 1;
    if (command == "suite" && !suiteOk) return 1;
    return 0;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::domain_error& e) {
    errorJson(command, "invalid input", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    errorJson(command, "invalid input", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    errorJson(command, "invalid input", e.what());
    return 2;
  } catch (const std::exception& e) {
    errorJson(command, "computation error", e.what());
    return 3;
  }
}

}  // namespace singmod
