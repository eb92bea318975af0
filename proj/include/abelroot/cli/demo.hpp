#pragma once

#include <string>
#include <vector>

#include "abelroot/cli/report.hpp"

namespace abelroot {

struct DemoCheck {
  std::string name;
  bool pass = false;
  json detail;
};

/// babylonian, cardano, quartic23, betti, hypergeom, remark5.
const std::vector<std::string>& demo_names();

/// Throws Usage for an unknown name.
std::vector<DemoCheck> run_demo(const std::string& name);

}  // namespace abelroot
