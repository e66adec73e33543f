#include <cstdio>
#include <exception>

#include "singmod/acceptance.hpp"

int main(int argc, char** argv) {
  nlohmann::json golden;
  try {
    golden = singmod::loadGolden(argc > 1 ? argv[1] : SINGMOD_GOLDEN_DIR);
  } catch (const std::exception& e) {
    std::printf("FAIL cannot load golden data: %s\n", e.what());
    return 1;
  }
  int failures = 0;
  singmod::runAcceptance(golden, {}, [&](const singmod::CriterionResult& r) {
    if (!r.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(),
                r.seconds);
    if (r.budgetSeconds > 0) std::printf(" of %.0fs", r.budgetSeconds);
    std::printf("]\n");
    std::fflush(stdout);
  });
  std::printf("%d of %d criteria pass\n", singmod::acceptanceCount() - failures, singmod::acceptanceCount());
  return failures == 0 ? 0 : 1;
}
