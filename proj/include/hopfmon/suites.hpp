#pragma once

#include <string>
#include <vector>

#include "hopfmon/multiloop.hpp"

namespace hopfmon {

// Verification suites in the order "all" runs them.
enum class Suite {
  CoproductDeformation,  // Delta_R and Delta'
  MonodromyRelation,     // both forms of the relation on E and non-examples
  GaugedMonodromy,       // coadjoint actions, M_R(H), extension criterion
  MonodromyInverse,      // inverse of M and the right monodromy
  DoubleExtension,       // D(H) and the extension criterion for it
  DoubleIsomorphism,     // lambda_R and the monodromies of D(H)
  MonodromyMap,          // mon_R, its dual and the bosonization U
  Factorization,         // pi_R and the factorization verdict
  CocycleTwist,          // the twist T of H (x) H
  TwistedR,              // the R-matrix of the twisted square
  TwistedDouble,         // Lambda_R and the transported Hopf structure
  MultiLoop,             // L_m, exchange relations, bracketing
  BosonizationV,         // V_A and delta_A
  MultiLoopMonodromy,    // mon_{R,m} and Mon_{R,m}
  MultiLoopRestriction,  // dual-path identity for M_nu and restriction
};

const std::vector<Suite>& all_suites();
const char* suite_name(Suite s);

struct SuiteOptions {
  std::size_t m = 2;
  std::size_t budget = budget_from_env();
};

struct SuiteResult {
  Suite suite;
  Report report;
  std::string summary;  // one-line headline, may be empty
  double seconds = 0;
};

// Errors raised by a failed invariant become failed checks; BudgetExceeded
// propagates.
SuiteResult run_suite(Suite s, const QtPtr& qt, const SuiteOptions& options = {});

// Runs every suite; budget overruns become skipped entries.
std::vector<SuiteResult> run_all_suites(const QtPtr& qt, const SuiteOptions& options = {});

struct ReportHeader {
  std::string file;
  std::string algebra;
  std::string r_name;
  std::string command;  // what was verified
};

std::string render_text(const ReportHeader& h, const std::vector<SuiteResult>& results, bool timing);
// {"schema": "hopfmon-report", "version": 1, ...}
std::string render_json(const ReportHeader& h, const std::vector<SuiteResult>& results, bool timing);
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace hopfmon
