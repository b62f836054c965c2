// One line per acceptance criterion: exact checks under a wall-clock limit.
// usage: acceptance <corpus-dir> <cli-binary>

#include <chrono>
#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <string>
#include <vector>

#include "hopfmon/error.hpp"
#include "hopfmon/hopfmon.h"
#include "hopfmon/presentation.hpp"
#include "hopfmon/suites.hpp"

using namespace hopfmon;
namespace fs = std::filesystem;

namespace {

struct Entry {
  std::string file;
  Presentation p;
};

struct Pair {
  std::string label;  // file/R
  QtPtr qt;
};

std::string corpus_dir;
std::string cli;
std::vector<Entry> entries;
std::vector<Pair> pairs;

// Collects failure messages; a criterion passes when none are recorded.
struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void report(const std::string& what, const Report& r) {
    if (!r.ok()) failures.push_back(what + ": " + r.first_failure());
  }
  void suite(Suite s, const Pair& pr, SuiteOptions opt = {}) {
    SuiteResult res = run_suite(s, pr.qt, opt);
    report(std::string(suite_name(s)) + " on " + pr.label, res.report);
  }
};

void load_corpus() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus_dir))
    if (e.path().extension() == ".json" && !fs::is_symlink(e.path())) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    Entry e{f.filename().string(), load_presentation(f.string())};
    for (const auto& [name, R] : e.p.r_matrices)
      pairs.push_back({e.file + "/" + name, make_quasitriangular(e.p.hopf, R, name)});
    entries.push_back(std::move(e));
  }
}

// Pairs whose doubles fit the default budget.
std::vector<const Pair*> small_pairs() {
  std::vector<const Pair*> out;
  for (const auto& pr : pairs) {
    std::size_t n = pr.qt->H().dim();
    if (n * n * n * n <= 4096) out.push_back(&pr);
  }
  return out;
}

const Pair& find(const std::string& label) {
  for (const auto& pr : pairs)
    if (pr.label == label) return pr;
  throw std::runtime_error("corpus lacks " + label);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  hopfmon_string_free(s);
  return out;
}

const std::vector<std::pair<hopfmon_construction, const char*>> constructions{
    {HOPFMON_BUILD_DUAL, "dual"},           {HOPFMON_BUILD_DOUBLE, "double"},
    {HOPFMON_BUILD_MONODROMY, "monodromy"}, {HOPFMON_BUILD_GAUGED, "gauged"},
    {HOPFMON_BUILD_MULTILOOP, "multiloop"}, {HOPFMON_BUILD_TWISTED_SQUARE, "twisted-square"}};

// Every construction of every small corpus pair through the C API.
std::vector<std::pair<std::string, std::string>> build_outputs(Criterion& c) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Pair* pr : small_pairs()) {
    std::string file = pr->label.substr(0, pr->label.find('/'));
    std::string r = pr->label.substr(file.size() + 1);
    hopfmon_presentation* h = nullptr;
    if (hopfmon_load((corpus_dir + "/" + file).c_str(), &h) != HOPFMON_OK) {
      c.expect(false, "load " + file + ": " + hopfmon_last_error());
      continue;
    }
    for (const auto& [what, name] : constructions) {
      char* text = nullptr;
      hopfmon_status s = hopfmon_build(h, what, r.c_str(), 2, &text);
      c.expect(s == HOPFMON_OK, std::string("build ") + name + " " + pr->label + ": " + hopfmon_last_error());
      if (s == HOPFMON_OK) out.emplace_back(std::string(name) + " " + pr->label, take(text));
    }
    hopfmon_free(h);
  }
  return out;
}

int run_cli(const std::string& args, std::string* output = nullptr) {
  fs::path tmp = fs::temp_directory_path() / "hopfmon_acceptance_out.txt";
  int status = std::system((cli + " " + args + " > " + tmp.string() + " 2>&1").c_str());
  if (output) {
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  fs::remove(tmp);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void c1(Criterion& c) {
  for (const auto& e : entries) c.report(e.file, check_hopf_axioms(*e.p.hopf));
  for (const auto& [name, text] : build_outputs(c)) {
    Presentation p = parse_presentation(text);
    c.report(name, p.hopf ? check_hopf_axioms(*p.hopf) : check_algebra_axioms(*p.algebra));
  }
}

void c2(Criterion& c) {
  for (const auto& pr : pairs) {
    c.report(pr.label, check_quasitriangular(pr.qt->H(), pr.qt->R()));
    c.report(pr.label, check_cocycle_property(*pr.qt));
    c.report(pr.label, derived_identities(*pr.qt));
  }
}

void c3(Criterion& c) {
  for (const auto& pr : pairs) {
    c.suite(Suite::CoproductDeformation, pr);
    SuiteResult res = run_suite(Suite::MonodromyRelation, pr.qt);
    c.report(pr.label, res.report);
    c.expect(res.report.find("2E.verdict") && res.report.find("E+1.verdict"), pr.label + ": non-examples not run");
  }
}

void c4(Criterion& c) {
  for (const Pair* pr : small_pairs()) c.suite(Suite::GaugedMonodromy, *pr);
  SuiteResult h4 = run_suite(Suite::GaugedMonodromy, find("sweedler_h4.json/R1").qt);
  c.expect(h4.report.passed("extension.conjugated.rejected"), "H4/R1: conjugated extension not rejected");
}

void c5(Criterion& c) {
  for (const Pair* pr : small_pairs()) c.suite(Suite::MonodromyInverse, *pr);
}

void c6(Criterion& c) {
  for (const Pair* pr : small_pairs()) {
    c.suite(Suite::DoubleExtension, *pr);
    SuiteResult res = run_suite(Suite::DoubleIsomorphism, pr->qt);
    c.report(pr->label, res.report);
    if (pr->qt->R() == TensorElement::unit(pr->qt->legs(2)))
      c.expect(res.report.passed("lambda.identity-grid"), pr->label + ": identity grid");
  }
}

void c7(Criterion& c) {
  for (const Pair* pr : small_pairs()) {
    c.suite(Suite::MonodromyMap, *pr);
    Factorization f = factorize(pr->qt);
    c.report(pr->label, f.report);
    if (pr->qt->triangular()) c.expect(f.mon.rank == 1, pr->label + ": triangular but rank " + std::to_string(f.mon.rank));
  }
  Factorization d = factorize(find("double_z2.json/R_D").qt);
  c.expect(d.mon.rank == 4 && d.mon.bijective, "D(Z2): rank(mon) != 4");
  c.expect(d.pi.rank == 16 && d.pi.bijective, "D(Z2): pi_R not a dim-16 isomorphism");
  c.expect(d.pi.report.passed("left-image") && d.pi.report.passed("right-image"), "D(Z2): image spans");
}

void c8(Criterion& c) {
  for (const char* label : {"sweedler_h4.json/R1", "z2_group.json/trivial"}) {
    const Pair& pr = find(label);
    for (Suite s : {Suite::CocycleTwist, Suite::TwistedR, Suite::TwistedDouble}) c.suite(s, pr);
  }
}

void c9(Criterion& c) {
  SuiteOptions m2, m3;
  m3.m = 3;
  for (const char* label : {"sweedler_h4.json/R1", "z2_group.json/trivial", "double_z2.json/R_D"}) {
    const Pair& pr = find(label);
    c.suite(Suite::MultiLoop, pr, m2);
    c.suite(Suite::BosonizationV, pr);
    c.suite(Suite::MultiLoopRestriction, pr, m2);
  }
  for (const char* label : {"sweedler_h4.json/R1", "z2_group.json/trivial"}) {
    SuiteResult res = run_suite(Suite::MultiLoop, find(label).qt, m3);
    c.report(std::string(label) + " m=3", res.report);
    c.expect(res.report.passed("bracketing.mon.same-product"), std::string(label) + ": bracketing not checked");
    c.expect(res.report.passed("L3.exchange-1-3"), std::string(label) + ": exchange 1-3 not checked");
  }
  MultiLoopMonodromy pos = mon_R_m(find("double_z2.json/R_D").qt, 2);
  c.report("D(Z2) m=2", pos.report);
  c.expect(pos.bijective && pos.rank == 16, "D(Z2) m=2 not bijective");
  MultiLoopMonodromy neg = mon_R_m(find("sweedler_h4.json/R0").qt, 2);
  c.report("H4/R0 m=2", neg.report);
  c.expect(!neg.bijective, "H4/R0 m=2 bijective");
  c.report("Mon D(Z2)", Mon_R_m(pos).report);
  c.report("Mon H4/R0", Mon_R_m(neg).report);
}

void c10(Criterion& c) {
  for (const auto& [name, text] : build_outputs(c)) {
    Presentation p = parse_presentation(text);
    c.expect(write_presentation(p) == text, name + ": write(load(build)) differs");
  }
  for (const auto& e : entries) {
    std::string text = write_presentation(e.p);
    std::ifstream in(corpus_dir + "/" + e.file);
    std::stringstream ss;
    ss << in.rdbuf();
    c.expect(ss.str() == text, e.file + ": write(load(file)) differs");
  }
  for (const char* args : {"verify all {}/sweedler_h4.json --r R1", "verify all {}/double_z2.json --json"}) {
    std::string a = args, out1, out2;
    a.replace(a.find("{}"), 2, corpus_dir);
    c.expect(run_cli(a, &out1) == 0 && run_cli(a, &out2) == 0, a + ": nonzero exit");
    c.expect(out1 == out2 && !out1.empty(), a + ": reports differ between runs");
  }
  struct Expect {
    std::string args;
    int code;
  };
  for (const auto& [args, code] : std::vector<Expect>{
           {"validate {}/sweedler_h4.json", 0},
           {"validate {}/fixtures/bad_coproduct.json", 1},
           {"validate {}/fixtures/bad_r_matrix.json", 1},
           {"validate {}/fixtures/bad_rational.json", 2},
           {"validate {}/fixtures/malformed.json", 2},
           {"verify all {}/h4.json --m 4", 0},
           {"build multiloop {}/h4.json --m 4", 3}}) {
    std::string a = args;
    a.replace(a.find("{}"), 2, corpus_dir);
    int got = run_cli(a);
    c.expect(got == code, a + ": exit " + std::to_string(got) + ", expected " + std::to_string(code));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <corpus-dir> <cli-binary>\n";
    return 2;
  }
  corpus_dir = argv[1];
  cli = argv[2];
  try {
    load_corpus();
  } catch (const std::exception& e) {
    std::cerr << "corpus: " << e.what() << "\n";
    return 1;
  }
  struct Item {
    int id;
    const char* title;
    double limit;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Item> items{
      {1, "Hopf axioms of the corpus and of every build output", 5, c1},
      {2, "quasitriangular relations of every corpus R", 5, c2},
      {3, "Delta_R, Delta' and the monodromy relation with non-examples", 5, c3},
      {4, "coadjoint actions, M_R(H) and the extension criterion", 10, c4},
      {5, "inverse and right monodromy", 20, c5},
      {6, "Drinfeld double and lambda_R", 20, c6},
      {7, "mon_R, U and the factorization verdicts", 20, c7},
      {8, "cocycle twist, its R-matrix and the transported structure", 60, c8},
      {9, "multi-loop algebras, V_A and mon_{R,m}", 120, c9},
      {10, "CLI round trip, determinism and exit codes", 10, c10},
  };
  int failed = 0;
  for (const auto& it : items) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
      it.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = s < it.limit;
    bool ok = c.failures.empty() && in_time;
    failed += ok ? 0 : 1;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << s;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << it.id << ". " << it.title << " (" << t.str() << " s, limit "
              << it.limit << " s)";
    if (!c.failures.empty()) std::cout << ": " << c.failures.front();
    if (!in_time) std::cout << ": over the time limit";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
