#pragma once

#include <string>
#include <vector>

#include "gtlab/report/config.hpp"

namespace gtlab {

/// One equation tag and the checker that produces its cases.
struct EquationEntry {
  std::string tag;
  std::string checker;
  SuiteName suite;
};

const std::vector<EquationEntry>& equation_registry();

/// nullptr when the tag is unknown.
const EquationEntry* find_equation(const std::string& tag);

}  // namespace gtlab
