#pragma once

#include <fstream>
#include <string>

#include "json.hpp"

inline const nlohmann::json& golden() {
  static nlohmann::json j = [] {
    std::ifstream in(std::string(SINGMOD_GOLDEN_DIR) + "/printed_expansions.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}
