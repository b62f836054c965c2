#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hopfmon/hopfmon.h"

namespace {

// Exit codes: 0 pass, 1 identity failure, 2 malformed input, 3 budget.
int exit_code(hopfmon_status s) {
  switch (s) {
    case HOPFMON_OK:
      return 0;
    case HOPFMON_MALFORMED:
    case HOPFMON_INVALID_ARGUMENT:
      return 2;
    case HOPFMON_BUDGET:
      return 3;
    default:
      return 1;
  }
}

int report_error(hopfmon_status s) {
  std::cerr << "error: " << hopfmon_last_error() << "\n";
  return exit_code(s);
}

struct Loaded {
  hopfmon_presentation* p = nullptr;
  ~Loaded() { hopfmon_free(p); }
};

const std::map<std::string, hopfmon_suite>& theorem_ids() {
  static const std::map<std::string, hopfmon_suite> ids{
      {"prop2.1", HOPFMON_SUITE_COPRODUCT_DEFORMATION},
      {"prop2.4", HOPFMON_SUITE_MONODROMY_RELATION},
      {"cor3.2", HOPFMON_SUITE_GAUGED_MONODROMY},
      {"prop4.1", HOPFMON_SUITE_MONODROMY_INVERSE},
      {"lemma5.2", HOPFMON_SUITE_DOUBLE_EXTENSION},
      {"cor5.3", HOPFMON_SUITE_DOUBLE_ISOMORPHISM},
      {"prop6.1", HOPFMON_SUITE_MONODROMY_MAP},
      {"thm6.4", HOPFMON_SUITE_FACTORIZATION},
      {"lemma7.1", HOPFMON_SUITE_COCYCLE_TWIST},
      {"lemma7.2", HOPFMON_SUITE_TWISTED_R},
      {"thm7.3", HOPFMON_SUITE_TWISTED_DOUBLE},
      {"propA.2", HOPFMON_SUITE_MULTILOOP},
      {"propA.3", HOPFMON_SUITE_BOSONIZATION},
      {"thmA.5", HOPFMON_SUITE_MULTILOOP_MONODROMY},
      {"propA.6", HOPFMON_SUITE_MULTILOOP_RESTRICTION},
      {"all", HOPFMON_SUITE_ALL},
  };
  return ids;
}

const std::map<std::string, hopfmon_construction>& constructions() {
  static const std::map<std::string, hopfmon_construction> c{
      {"dual", HOPFMON_BUILD_DUAL},         {"double", HOPFMON_BUILD_DOUBLE},
      {"monodromy", HOPFMON_BUILD_MONODROMY}, {"gauged", HOPFMON_BUILD_GAUGED},
      {"multiloop", HOPFMON_BUILD_MULTILOOP}, {"twisted-square", HOPFMON_BUILD_TWISTED_SQUARE},
  };
  return c;
}

int emit(char* text, const std::string& out_path) {
  int rc = 0;
  if (out_path.empty() || out_path == "-") {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      rc = 2;
    }
  }
  hopfmon_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of monodromy constructions over finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hopfmon_version()));

  std::string file, r_name, out_path, what, theorem;
  unsigned m = 2;
  bool json = false, timing = false;

  auto* validate = app.add_subcommand("validate", "Check the Hopf axioms and every named R-matrix");
  validate->add_option("file", file, "presentation file")->required();
  validate->add_flag("--json", json, "JSON report");

  auto* build = app.add_subcommand("build", "Emit a constructed algebra as a presentation file");
  std::vector<std::string> names;
  for (const auto& [k, v] : constructions()) names.push_back(k);
  build->add_option("what", what, "construction")->required()->check(CLI::IsMember(names));
  build->add_option("file", file, "presentation file")->required();
  build->add_option("--r", r_name, "R-matrix name (default: the first)");
  build->add_option("--m", m, "number of loops for multiloop")->check(CLI::PositiveNumber);
  build->add_option("-o,--output", out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> ids;
  for (const auto& [k, v] : theorem_ids()) ids.push_back(k);
  verify->add_option("theorem", theorem, "suite id or all")->required()->check(CLI::IsMember(ids));
  verify->add_option("file", file, "presentation file")->required();
  verify->add_option("--r", r_name, "R-matrix name (default: the first)");
  verify->add_option("--m", m, "number of loops for the multi-loop suites")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--timing", timing, "include wall-clock seconds per suite");
  verify->add_option("-o,--output", out_path, "report file (default: stdout)");

  auto* rank = app.add_subcommand("rank", "Rank of the monodromy map and the factorizability verdict");
  rank->add_option("file", file, "presentation file")->required();
  rank->add_option("--r", r_name, "R-matrix name (default: the first)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Loaded in;
  if (hopfmon_status s = hopfmon_load(file.c_str(), &in.p); s != HOPFMON_OK) return report_error(s);
  const char* r = r_name.empty() ? nullptr : r_name.c_str();

  if (*validate) {
    char* report = nullptr;
    hopfmon_status s = hopfmon_validate(in.p, json ? HOPFMON_REPORT_JSON : 0, &report);
    if (!report) return report_error(s);
    emit(report, "");
    return exit_code(s);
  }
  if (*build) {
    char* text = nullptr;
    hopfmon_status s = hopfmon_build(in.p, constructions().at(what), r, m, &text);
    if (s != HOPFMON_OK) return report_error(s);
    return emit(text, out_path);
  }
  if (*verify) {
    char* report = nullptr;
    unsigned flags = (json ? HOPFMON_REPORT_JSON : 0u) | (timing ? HOPFMON_REPORT_TIMING : 0u);
    hopfmon_status s = hopfmon_verify(in.p, theorem_ids().at(theorem), theorem.c_str(), r, m, flags, &report);
    if (!report) return report_error(s);
    int rc = emit(report, out_path);
    return rc != 0 ? rc : exit_code(s);
  }
  size_t k = 0, n = 0;
  int factorizable = 0;
  hopfmon_status s = hopfmon_rank(in.p, r, &k, &n, &factorizable);
  if (s != HOPFMON_OK) return report_error(s);
  std::cout << k << "/" << n << (factorizable ? " factorizable" : " not factorizable") << "\n";
  return 0;
}
