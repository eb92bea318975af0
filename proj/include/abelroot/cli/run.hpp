#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelroot/cli/report.hpp"

namespace abelroot {

enum class Format { Json, Text, Latex };

Format parse_format(const std::string& name);

struct Command {
  std::string verb;     // derive-abel | derive-linear | discriminant | solve | check | demo | series
  std::string problem;  // polynomial text, or the demo name
  std::optional<std::string> q;
  int order = 12;
  std::string weight = "1";
  std::string kind = "theorem1";  // theorem1 | corollary2
  std::string method;             // closed-form method for solve; empty runs all that apply
  double tol_abs = 1e-12;
  double tol_rel = 1e-10;
  bool timing = true;
};

const std::vector<std::string>& verbs();

struct Report {
  json doc;  // {verb, input, result, status, errors[]}
  int exit_code = 0;
  std::string latex;  // set by verbs with a LaTeX rendering
};

/// Never throws for bad input: errors land in doc["errors"] with the exit code set.
Report run(const Command& cmd);

/// Serialises a report; Latex falls back to an error for verbs without a rendering.
std::string render(const Report& r, Format f);

/// Parses "--q" text: a rational literal or a decimal float.
double parse_q(const std::string& text);

}  // namespace abelroot
