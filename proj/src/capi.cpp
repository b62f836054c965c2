#include "hopfmon/hopfmon.h"

#include <cstring>
#include <string>

#include "hopfmon/error.hpp"
#include "hopfmon/presentation.hpp"
#include "hopfmon/suites.hpp"
#include "hopfmon/twist.hpp"
#include "json.hpp"

struct hopfmon_presentation {
  std::string source;
  hopfmon::Presentation data;
};

namespace {

using namespace hopfmon;

thread_local std::string last_error;

hopfmon_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::MalformedPresentation:
      return HOPFMON_MALFORMED;
    case ErrorCode::BudgetExceeded:
      return HOPFMON_BUDGET;
    case ErrorCode::NotApplicable:
    case ErrorCode::SignatureMismatch:
      return HOPFMON_INVALID_ARGUMENT;
    default:
      return HOPFMON_IDENTITY_FAILURE;
  }
}

template <class F>
hopfmon_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    last_error = e.what();
    return HOPFMON_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hopfmon_status invalid(const char* what) {
  last_error = what;
  return HOPFMON_INVALID_ARGUMENT;
}

std::string render_validation(const hopfmon_presentation& p, const Report& r, bool json_out) {
  if (json_out) {
    nlohmann::ordered_json j;
    j["schema"] = "hopfmon-validation";
    j["version"] = 1;
    j["file"] = p.source;
    j["algebra"] = p.data.algebra->name();
    j["ok"] = r.ok();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks()) {
      nlohmann::ordered_json k;
      k["name"] = c.name;
      k["verdict"] = c.verdict == Verdict::Pass ? "pass" : c.verdict == Verdict::Fail ? "fail" : "skip";
      if (!c.detail.empty()) k["detail"] = c.detail;
      checks.push_back(std::move(k));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
  }
  std::string o = "file: " + p.source + "\nalgebra: " + p.data.algebra->name() + "\n";
  for (const auto& c : r.checks()) {
    o += std::string("  ") + verdict_name(c.verdict) + "  " + c.name;
    if (!c.detail.empty()) o += ": " + c.detail;
    o += "\n";
  }
  o += std::string("result: ") + (r.ok() ? "pass" : "FAIL") + "\n";
  return o;
}

std::optional<std::string> name_of(const char* r_name) {
  if (!r_name) return std::nullopt;
  return std::string(r_name);
}

// Validates the Hopf structure and the chosen R, then builds the pair.
// Throws InvariantViolation with the first failure otherwise.
QtPtr structure(const hopfmon_presentation& p, const char* r_name, std::string* chosen) {
  if (!p.data.hopf) throw Error(ErrorCode::NotApplicable, "the file describes an algebra without Hopf structure");
  std::string name;
  const TensorElement& R = p.data.r_matrix(name_of(r_name), &name);
  Report h = check_hopf_axioms(*p.data.hopf);
  if (!h.ok()) throw Error(ErrorCode::InvariantViolation, "Hopf axioms: " + h.first_failure());
  if (chosen) *chosen = name;
  return make_quasitriangular(p.data.hopf, R, name);
}

HopfPtr validated_hopf(const hopfmon_presentation& p) {
  if (!p.data.hopf) throw Error(ErrorCode::NotApplicable, "the file describes an algebra without Hopf structure");
  Report h = check_hopf_axioms(*p.data.hopf);
  if (!h.ok()) throw Error(ErrorCode::InvariantViolation, "Hopf axioms: " + h.first_failure());
  return p.data.hopf;
}

Presentation hopf_output(HopfPtr H, std::string r_name = {}, std::optional<TensorElement> R = std::nullopt) {
  Presentation out;
  out.algebra = H->algebra();
  out.hopf = std::move(H);
  if (R) out.r_matrices.emplace_back(std::move(r_name), std::move(*R));
  return out;
}

Presentation algebra_output(AlgebraPtr A) {
  Presentation out;
  out.algebra = std::move(A);
  return out;
}

}  // namespace

extern "C" {

const char* hopfmon_version(void) { return "1.0.0"; }

const char* hopfmon_last_error(void) { return last_error.c_str(); }

hopfmon_status hopfmon_load(const char* path, hopfmon_presentation** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new hopfmon_presentation{path, load_presentation(path)};
    return HOPFMON_OK;
  });
}

hopfmon_status hopfmon_parse(const char* text, hopfmon_presentation** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new hopfmon_presentation{"-", parse_presentation(text)};
    return HOPFMON_OK;
  });
}

void hopfmon_free(hopfmon_presentation* p) { delete p; }

size_t hopfmon_dim(const hopfmon_presentation* p) { return p ? p->data.algebra->dim() : 0; }

int hopfmon_is_hopf(const hopfmon_presentation* p) { return p && p->data.hopf ? 1 : 0; }

size_t hopfmon_r_count(const hopfmon_presentation* p) { return p ? p->data.r_matrices.size() : 0; }

const char* hopfmon_r_name(const hopfmon_presentation* p, size_t i) {
  if (!p || i >= p->data.r_matrices.size()) return nullptr;
  return p->data.r_matrices[i].first.c_str();
}

hopfmon_status hopfmon_write(const hopfmon_presentation* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = copy_out(write_presentation(p->data));
    return HOPFMON_OK;
  });
}

hopfmon_status hopfmon_validate(const hopfmon_presentation* p, unsigned flags, char** report) {
  if (!p || !report) return invalid("null argument");
  return guarded([&] {
    Report r = validate_presentation(p->data);
    *report = copy_out(render_validation(*p, r, flags & HOPFMON_REPORT_JSON));
    if (!r.ok()) last_error = r.first_failure();
    return r.ok() ? HOPFMON_OK : HOPFMON_IDENTITY_FAILURE;
  });
}

hopfmon_status hopfmon_build(const hopfmon_presentation* p, hopfmon_construction what, const char* r_name, unsigned m,
                             char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    Presentation result;
    switch (what) {
      case HOPFMON_BUILD_DUAL:
        result = hopf_output(dual(*validated_hopf(*p)));
        break;
      case HOPFMON_BUILD_DOUBLE: {
        DrinfeldDouble dd = drinfeld_double(validated_hopf(*p));
        result = hopf_output(dd.D, "R_D", dd.qt->R());
        break;
      }
      case HOPFMON_BUILD_MONODROMY:
        result = algebra_output(monodromy_algebra(structure(*p, r_name, nullptr)).algebra);
        break;
      case HOPFMON_BUILD_GAUGED: {
        QtPtr qt = structure(*p, r_name, nullptr);
        DrinfeldDouble dd = drinfeld_double(qt->hopf());
        GaugedMonodromy g = gauged_monodromy(qt);
        LambdaR lam = lambda_R(qt, dd, g);
        TransportedStructure t = transported_structure(dd, g, lam);
        result = hopf_output(t.hopf, "R_M", t.qt->R());
        break;
      }
      case HOPFMON_BUILD_MULTILOOP:
        if (m == 0) return invalid("m must be positive");
        result = algebra_output(multiloop_algebra(structure(*p, r_name, nullptr), m).algebra);
        break;
      case HOPFMON_BUILD_TWISTED_SQUARE: {
        TwistedSquare sq = build_twisted_square(structure(*p, r_name, nullptr));
        result = hopf_output(sq.hopf, "script_R", sq.script_R);
        break;
      }
      default:
        return invalid("unknown construction");
    }
    *out = copy_out(write_presentation(result));
    return HOPFMON_OK;
  });
}

hopfmon_status hopfmon_verify(const hopfmon_presentation* p, hopfmon_suite suite, const char* label,
                              const char* r_name, unsigned m, unsigned flags, char** report) {
  if (!p || !report) return invalid("null argument");
  if (suite < HOPFMON_SUITE_COPRODUCT_DEFORMATION || suite > HOPFMON_SUITE_ALL) return invalid("unknown suite");
  if (m == 0) return invalid("m must be positive");
  return guarded([&] {
    std::string chosen;
    QtPtr qt = structure(*p, r_name, &chosen);
    SuiteOptions opt;
    opt.m = m;
    std::vector<SuiteResult> results;
    std::string command;
    if (suite == HOPFMON_SUITE_ALL) {
      results = run_all_suites(qt, opt);
      command = "all";
    } else {
      Suite s = all_suites().at(static_cast<std::size_t>(suite));
      results.push_back(run_suite(s, qt, opt));
      command = suite_name(s);
    }
    ReportHeader h{p->source, p->data.algebra->name(), chosen, label ? label : command};
    bool timing = flags & HOPFMON_REPORT_TIMING;
    *report = copy_out(flags & HOPFMON_REPORT_JSON ? render_json(h, results, timing) : render_text(h, results, timing));
    bool ok = all_passed(results);
    if (!ok)
      for (const auto& r : results)
        if (!r.report.ok()) {
          last_error = std::string(suite_name(r.suite)) + ": " + r.report.first_failure();
          break;
        }
    return ok ? HOPFMON_OK : HOPFMON_IDENTITY_FAILURE;
  });
}

hopfmon_status hopfmon_rank(const hopfmon_presentation* p, const char* r_name, size_t* rank, size_t* dim,
                            int* factorizable) {
  if (!p || !rank || !dim || !factorizable) return invalid("null argument");
  return guarded([&] {
    QtPtr qt = structure(*p, r_name, nullptr);
    MonodromyMap mon = mon_R(qt, monodromy_algebra(qt));
    *rank = mon.rank;
    *dim = qt->H().dim();
    *factorizable = mon.bijective ? 1 : 0;
    return HOPFMON_OK;
  });
}

void hopfmon_string_free(char* s) { std::free(s); }

}  // extern "C"
