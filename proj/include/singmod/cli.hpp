#pragma once

#include <ostream>
#include <string>

namespace singmod {

// Exit codes: 0 success, 1 a requested check failed, 2 invalid input,
// 3 computation error.
int runCli(int argc, const char* const* argv, std::ostream& out);

// Directory holding printed_expansions.json when --golden-dir is not given.
std::string defaultGoldenDir();

}  // namespace singmod
