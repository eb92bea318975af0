#include <CLI11.hpp>
#include <iostream>

#include "abelroot/cli/demo.hpp"
#include "abelroot/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace abelroot;
  CLI::App app{"Root branches of R(x) = q through the origin: derived ODEs, tracking and checks"};
  app.set_help_all_flag("--help-all");

  Command cmd;
  std::string format = "json";
  bool no_timing = false;

  app.add_option("verb", cmd.verb, "derive-abel | derive-linear | discriminant | solve | check | demo | series")
      ->required()
      ->check(CLI::IsMember(verbs()));
  app.add_option("problem", cmd.problem, "polynomial R(x) with R(0) = 0, e.g. \"x^3+x\"; or a demo name")
      ->required();
  app.add_option("--q", cmd.q, "target q, rational (\"1/2\") or decimal");
  app.add_option("--order", cmd.order, "series order M")->capture_default_str();
  app.add_option("--weight", cmd.weight, "weight polynomial in t for check")->capture_default_str();
  app.add_option("--kind", cmd.kind, "identity for check")
      ->check(CLI::IsMember({"theorem1", "corollary2"}))
      ->capture_default_str();
  app.add_option("--method", cmd.method, "closed-form oracle for solve")
      ->check(CLI::IsMember({"babylonian", "cardano", "vieta_trig", "vieta_hyp", "ferrari", "quartic_w"}));
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "latex"}))
      ->capture_default_str();
  app.add_option("--tol-abs", cmd.tol_abs, "absolute tolerance of the integrator")->capture_default_str();
  app.add_option("--tol-rel", cmd.tol_rel, "relative tolerance of the integrator")->capture_default_str();
  app.add_flag("--no-timing", no_timing, "omit timings for byte-identical output");
  app.footer("Demos: babylonian, cardano, quartic23, betti, hypergeom, remark5\n"
             "Exit codes: 0 success, 1 usage error, 2 domain failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  cmd.timing = !no_timing;

  const Report rep = run(cmd);
  try {
    std::cout << render(rep, parse_format(format));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rep.exit_code;
}
