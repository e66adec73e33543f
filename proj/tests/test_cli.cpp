#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "singmod/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "singmod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream os;
  int code = singmod::runCli(static_cast<int>(argv.size()), argv.data(), os);
  return {code, os.str()};
}

}  // namespace

TEST_CASE("trace subcommand") {
  Run r = run({"trace", "--d", "3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == 3);
  CHECK(j["trace"] == -248);
  CHECK(j["classes"].size() == 1);
}

TEST_CASE("inadmissible input gives structured error") {
  Run r = run({"trace", "--d", "5"});
  CHECK(r.code == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"] == "d not ≡ 0,3 mod 4");
  CHECK(j["command"] == "trace");
  CHECK(run({"basis-f", "--d", "5"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"trace"}).code == 2);
}

TEST_CASE("duality summary") {
  Run r = run({"duality", "--level", "4", "--Dmax", "12", "--dmax", "12"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["failures"].empty());
  CHECK(j["pairs"].get<long>() > 0);
}

TEST_CASE("output formats") {
  Run csv = run({"hilbert", "--d", "7", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("coeffs,3375") != std::string::npos);
  Run text = run({"--format", "text", "hurwitz", "--d", "3"});
  CHECK(text.out.find("hurwitz: 1/3") != std::string::npos);
  Run js = run({"borcherds-verify", "--d", "7", "--prec", "10", "--json"});
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["ok"] == true);
  CHECK(j["exponents"][0][1] == "-4119");
  CHECK(!j.contains("first_mismatch_exponent"));
}

TEST_CASE("suite output is reproducible") {
  Run a = run({"suite", "--only", "3,11"});
  Run b = run({"suite", "--only", "3,11"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["criteria"].size() == 2);
  CHECK(j["ok"] == true);
  CHECK(run({"suite", "--only", "12"}).code == 2);
}
