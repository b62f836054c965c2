#include "hopfmon/suites.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "hopfmon/error.hpp"
#include "hopfmon/twist.hpp"
#include "json.hpp"

namespace hopfmon {

namespace {

// Shared constructions, built on first use.
class Context {
 public:
  Context(QtPtr qt, SuiteOptions opt) : qt(std::move(qt)), opt(opt) {}

  QtPtr qt;
  SuiteOptions opt;

  const Factorization& fact() {
    if (!fact_) fact_ = factorize(qt);
    return *fact_;
  }
  const GaugedMonodromy& g() { return fact().g; }
  const DrinfeldDouble& dd() {
    if (!dd_) dd_ = drinfeld_double(qt->hopf());
    return *dd_;
  }
  const LambdaR& lambda() {
    if (!lambda_) lambda_ = lambda_R(qt, dd(), g());
    return *lambda_;
  }
  const TwistedSquare& square() {
    if (!square_) square_ = build_twisted_square(qt);
    return *square_;
  }
  const MultiLoopMonodromy& loop_mon(std::size_t m) {
    auto& slot = m == opt.m ? mm_ : mm_prev_;
    if (!slot) slot = mon_R_m(qt, m, opt.budget);
    return *slot;
  }

 private:
  std::optional<Factorization> fact_;
  std::optional<DrinfeldDouble> dd_;
  std::optional<LambdaR> lambda_;
  std::optional<TwistedSquare> square_;
  std::optional<MultiLoopMonodromy> mm_, mm_prev_;
};

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

bool is_trivial(const Quasitriangular& qt) { return qt.R() == TensorElement::unit(qt.legs(2)); }

// Runs the relation check on a candidate generating matrix and records
// whether the two forms agree and whether the verdict is the expected one.
void relation_case(Report& r, const Quasitriangular& qt, const LinearMap& dR, const TensorElement& M,
                   const std::string& name, bool expect) {
  try {
    Report rel = check_monodromy_relation(qt, dR, M);
    bool accepted = rel.ok();
    r.pass(name + ".forms-agree", accepted ? "both accept" : "both reject");
    r.add(name + ".verdict", accepted == expect,
          std::string(accepted ? "accepted" : "rejected") + (accepted == expect ? "" : ", expected the opposite"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvariantViolation) throw;
    r.fail(name + ".forms-agree", e.what());
  }
}

Report filtered(const Report& src, const std::vector<std::string>& prefixes) {
  Report out(src.target());
  for (const auto& c : src.checks())
    for (const auto& p : prefixes)
      if (c.name.rfind(p, 0) == 0) {
        out.add(c);
        break;
      }
  return out;
}

void body(Suite s, Context& cx, SuiteResult& res) {
  const QtPtr& qt = cx.qt;
  const HopfAlgebra& H = qt->H();
  const std::size_t n = H.dim();
  Report& r = res.report;
  if (s != Suite::CoproductDeformation && s != Suite::MonodromyRelation)
    require_budget(n * n, cx.opt.budget, std::string(suite_name(s)) + ": an algebra of dimension dim(H)^2");
  switch (s) {
    case Suite::CoproductDeformation: {
      LinearMap dR = delta_R(*qt);
      r.merge(check_delta_R(*qt, dR), "Delta_R.");
      r.merge(check_delta_R_equivariance(*qt, dR), "Delta_R.");
      r.merge(check_delta_prime(*qt), "Delta'.");
      return;
    }
    case Suite::MonodromyRelation: {
      MonodromyAlgebra mon = monodromy_algebra(qt);
      TensorElement E = mon.generating_matrix();
      relation_case(r, *qt, mon.coproduct, E, "E", true);
      relation_case(r, *qt, mon.coproduct, E * Scalar(2), "2E", false);
      relation_case(r, *qt, mon.coproduct, E + TensorElement::unit(E.legs()), "E+1", false);
      return;
    }
    case Suite::GaugedMonodromy: {
      for (auto ch : {Chirality::Left, Chirality::Right}) {
        MonodromyAlgebra mon = monodromy_algebra(qt, ch);
        std::string side = ch == Chirality::Left ? "left." : "right.";
        r.merge(check_module_action(mon.action), side + "coadjoint.");
        r.merge(check_monodromy_relation(*mon.qt, mon.coproduct, mon.generating_matrix()), side + "relation.");
      }
      const GaugedMonodromy& g = cx.g();
      r.merge(check_algebra_axioms(*g.algebra()), "M_R.");
      Extension self = check_monodromy_extension(g, g.i_M, g.M);
      r.merge(self.report, "extension.identity.");
      r.add("extension.identity.is-identity", self.map && *self.map == LinearMap::identity({g.algebra()}));
      auto HH = tensor_algebra(H.algebra(), H.algebra());
      LinearMap f = H.comultiplication().retyped(H.legs(1), {HH});
      TensorElement M = retype(embed_legs(qt->R_op() * qt->R(), {0, 1}, H.legs(3)), {H.algebra(), HH});
      r.merge(check_monodromy_extension(g, f, M).report, "extension.coproduct.");
      // Conjugating i_M by a unit that does not commute with M breaks the
      // crossed relation.
      const Algebra& A = *g.algebra();
      std::optional<std::string> witness;
      for (std::size_t u = 0; u < n && !witness; ++u) {
        SparseVec x = g.i_M.column(u);
        if (sparse_add(A.multiply(x, x), sparse_scale(A.unit(), Scalar(-1))).empty() && x != A.unit()) {
          LinearMap tw = LinearMap::from_images(H.legs(1), {g.algebra()}, [&](Index a) {
            return TensorElement::vector(g.algebra(), A.multiply(A.multiply(x, g.i_M.column(a)), x));
          });
          Extension e = check_monodromy_extension(g, tw, g.M);
          if (!e.report.ok()) witness = H.label(u);
        }
      }
      if (witness)
        r.pass("extension.conjugated.rejected", "conjugation by " + *witness);
      else
        r.skip("extension.conjugated.rejected", "no involution breaks the crossed relation");
      return;
    }
    case Suite::MonodromyInverse: {
      const GaugedMonodromy& g = cx.g();
      MonodromyInverse inv = left_monodromy_inverse(qt, g.i_M, g.M);
      r.merge(inv.report, "left.");
      bool same = inv.inverse == tensor_invert(g.M);
      r.add("left.inverse-matches-linear-solve", same, same ? "" : "closed form differs from the solved inverse");
      r.merge(right_monodromy(qt, g.i_M, g.M).report, "right.");
      return;
    }
    case Suite::DoubleExtension: {
      const DrinfeldDouble& dd = cx.dd();
      r.merge(dd.report, "D.");
      r.merge(check_hopf_axioms(*dd.D), "D.");
      r.merge(check_quasitriangular(*dd.D, dd.qt->R()), "R_D.");
      r.merge(derived_identities(*dd.qt), "R_D.");
      Extension self = check_double_extension(dd, dd.i_D, dd.DD);
      r.merge(self.report, "extension.identity.");
      r.add("extension.identity.is-identity", self.map && *self.map == LinearMap::identity({dd.D->algebra()}));
      const GaugedMonodromy& g = cx.g();
      TensorElement DD_M = on_target(qt->R_op_inv(), g.i_M) * g.M;
      r.merge(check_double_extension(dd, g.i_M, DD_M).report, "extension.monodromy.");
      Extension plain = check_double_extension(dd, g.i_M, g.M);
      r.note("M-without-correction", plain.report.ok() ? "accepted" : "rejected");
      return;
    }
    case Suite::DoubleIsomorphism: {
      const LambdaR& lam = cx.lambda();
      r.merge(lam.report, "lambda.");
      r.merge(double_monodromies(qt, cx.dd()).report, "D-monodromy.");
      if (is_trivial(*qt)) {
        const AlgebraPtr& M = cx.g().algebra();
        bool grid = lam.map.retyped({M}, {M}) == LinearMap::identity({M});
        r.add("lambda.identity-grid", grid, grid ? "" : "lambda_R differs from the identity");
      } else {
        r.skip("lambda.identity-grid", "R is not 1 (x) 1");
      }
      return;
    }
    case Suite::MonodromyMap: {
      const Factorization& f = cx.fact();
      r.merge(f.mon.report, "mon.");
      r.merge(mon_R_op_dual_check(*qt), "mon-dual.");
      r.merge(f.U.report, "U.");
      res.summary = "rank " + ratio(f.mon.rank, n);
      return;
    }
    case Suite::Factorization: {
      const Factorization& f = cx.fact();
      r.merge(f.report);
      res.summary = std::string("bijective: ") + (f.mon.bijective ? "true" : "false") + ", rank " + ratio(f.mon.rank, n);
      return;
    }
    case Suite::CocycleTwist:
      r.merge(filtered(cx.square().report, {"cocycle", "coassociative", "delta-of-coproduct", "twisted-hopf",
                                            "twist-equivalence"}));
      return;
    case Suite::TwistedR: {
      const TwistedSquare& sq = cx.square();
      r.merge(filtered(sq.report, {"R-prime.", "R."}));
      r.merge(derived_identities(*sq.twisted), "R.");
      return;
    }
    case Suite::TwistedDouble: {
      LambdaSquare L = Lambda_R(cx.square(), cx.dd(), cx.fact(), cx.lambda());
      r.merge(L.report, "Lambda.");
      TransportedStructure t = transported_structure(cx.dd(), cx.g(), cx.lambda());
      r.merge(t.report, "transported.");
      res.summary = std::string("bijective: ") + (L.bijective ? "true" : "false") + ", rank " + ratio(L.rank, n * n);
      return;
    }
    case Suite::MultiLoop: {
      MultiLoop loop = multiloop_algebra(qt, cx.opt.m, cx.opt.budget);
      r.merge(loop.report, "L" + std::to_string(cx.opt.m) + ".");
      if (!r.ok()) return;
      const std::size_t d = loop.mon.algebra->dim();
      if (d * d * d * d * d * d > cx.opt.budget) {
        r.skip("bracketing", "three factors of dimension " + std::to_string(d) + " exceed the budget " +
                                 std::to_string(cx.opt.budget));
        return;
      }
      const ModuleAction& a = loop.mon.action;
      r.merge(check_braided_associativity(qt, a, a, a), "bracketing.mon.");
      ModuleAction ad = adjoint_action(qt->hopf());
      r.merge(check_braided_associativity(qt, a, ad, a), "bracketing.mixed.");
      return;
    }
    case Suite::BosonizationV: {
      BosonizationV v = bosonize_V(qt, H.algebra(), LinearMap::identity(H.legs(1)));
      r.merge(v.report, "V.");
      r.merge(delta_A_vs_Delta_R(qt), "delta_A.");
      return;
    }
    case Suite::MultiLoopMonodromy: {
      const MultiLoopMonodromy& mm = cx.loop_mon(cx.opt.m);
      r.merge(mm.report, "mon_m.");
      ExtendedMultiLoop ext = Mon_R_m(mm);
      r.merge(ext.report, "Mon_m.");
      std::size_t dim = mm.loop.algebra->dim();
      res.summary = std::string("bijective: ") + (mm.bijective ? "true" : "false") + ", rank " + ratio(mm.rank, dim);
      return;
    }
    case Suite::MultiLoopRestriction: {
      const MultiLoopMonodromy& mm = cx.loop_mon(cx.opt.m);
      const MultiLoopMonodromy* prev = cx.opt.m >= 2 ? &cx.loop_mon(cx.opt.m - 1) : nullptr;
      r.merge(check_multiloop_restriction(mm, prev));
      return;
    }
  }
}

SuiteResult run_in(Suite s, Context& cx) {
  SuiteResult res;
  res.suite = s;
  res.report = Report(suite_name(s));
  auto start = std::chrono::steady_clock::now();
  try {
    body(s, cx, res);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::BudgetExceeded:
      case ErrorCode::MalformedPresentation:
        throw;
      default:
        res.report.fail("error", e.what());
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> order{
      Suite::CoproductDeformation, Suite::MonodromyRelation, Suite::GaugedMonodromy,  Suite::MonodromyInverse,
      Suite::DoubleExtension,      Suite::DoubleIsomorphism, Suite::MonodromyMap,     Suite::Factorization,
      Suite::CocycleTwist,         Suite::TwistedR,          Suite::TwistedDouble,    Suite::MultiLoop,
      Suite::BosonizationV,        Suite::MultiLoopMonodromy, Suite::MultiLoopRestriction};
  return order;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::CoproductDeformation:
      return "coproduct-deformation";
    case Suite::MonodromyRelation:
      return "monodromy-relation";
    case Suite::GaugedMonodromy:
      return "gauged-monodromy";
    case Suite::MonodromyInverse:
      return "monodromy-inverse";
    case Suite::DoubleExtension:
      return "double-extension";
    case Suite::DoubleIsomorphism:
      return "double-isomorphism";
    case Suite::MonodromyMap:
      return "monodromy-map";
    case Suite::Factorization:
      return "factorization";
    case Suite::CocycleTwist:
      return "cocycle-twist";
    case Suite::TwistedR:
      return "twisted-r-matrix";
    case Suite::TwistedDouble:
      return "twisted-double";
    case Suite::MultiLoop:
      return "multi-loop";
    case Suite::BosonizationV:
      return "bosonization";
    case Suite::MultiLoopMonodromy:
      return "multi-loop-monodromy";
    case Suite::MultiLoopRestriction:
      return "multi-loop-restriction";
  }
  return "?";
}

SuiteResult run_suite(Suite s, const QtPtr& qt, const SuiteOptions& options) {
  Context cx(qt, options);
  return run_in(s, cx);
}

std::vector<SuiteResult> run_all_suites(const QtPtr& qt, const SuiteOptions& options) {
  Context cx(qt, options);
  std::vector<SuiteResult> out;
  for (Suite s : all_suites()) {
    try {
      out.push_back(run_in(s, cx));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      SuiteResult res;
      res.suite = s;
      res.report = Report(suite_name(s));
      res.report.skip("budget", e.what());
      out.push_back(std::move(res));
    }
  }
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.report.ok()) return false;
  return true;
}

namespace {

struct Counts {
  std::size_t pass = 0, fail = 0, skip = 0;
};

Counts count(const std::vector<SuiteResult>& results) {
  Counts c;
  for (const auto& r : results)
    for (const auto& k : r.report.checks())
      ++(k.verdict == Verdict::Pass ? c.pass : k.verdict == Verdict::Fail ? c.fail : c.skip);
  return c;
}

const char* status(const Report& r) {
  if (!r.ok()) return "FAIL";
  for (const auto& c : r.checks())
    if (c.verdict != Verdict::Skip) return "pass";
  return r.checks().empty() ? "pass" : "skip";
}

std::string seconds(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(3);
  o << s;
  return o.str();
}

}  // namespace

std::string render_text(const ReportHeader& h, const std::vector<SuiteResult>& results, bool timing) {
  std::ostringstream o;
  o << "file: " << h.file << "\n"
    << "algebra: " << h.algebra << "\n"
    << "R: " << h.r_name << "\n"
    << "verify: " << h.command << "\n";
  for (const auto& res : results) {
    o << "\n[" << suite_name(res.suite) << "] " << status(res.report);
    if (timing) o << " (" << seconds(res.seconds) << " s)";
    o << "\n";
    for (const auto& c : res.report.checks()) {
      o << "  " << verdict_name(c.verdict) << "  " << c.name;
      if (!c.detail.empty()) o << ": " << c.detail;
      o << "\n";
    }
    for (const auto& [k, v] : res.report.notes()) o << "  note  " << k << " = " << v << "\n";
    if (!res.summary.empty()) o << "  " << res.summary << "\n";
  }
  Counts c = count(results);
  o << "\nresult: " << (c.fail == 0 ? "pass" : "FAIL") << " (" << c.pass << " passed, " << c.fail << " failed, "
    << c.skip << " skipped)\n";
  return o.str();
}

std::string render_json(const ReportHeader& h, const std::vector<SuiteResult>& results, bool timing) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = "hopfmon-report";
  j["version"] = 1;
  j["file"] = h.file;
  j["algebra"] = h.algebra;
  j["r_matrix"] = h.r_name;
  j["verify"] = h.command;
  json suites = json::array();
  for (const auto& res : results) {
    json s;
    s["suite"] = suite_name(res.suite);
    s["status"] = status(res.report);
    if (!res.summary.empty()) s["summary"] = res.summary;
    if (timing) s["seconds"] = res.seconds;
    json checks = json::array();
    for (const auto& c : res.report.checks()) {
      json k;
      k["name"] = c.name;
      k["verdict"] = c.verdict == Verdict::Pass ? "pass" : c.verdict == Verdict::Fail ? "fail" : "skip";
      if (!c.detail.empty()) k["detail"] = c.detail;
      checks.push_back(std::move(k));
    }
    s["checks"] = std::move(checks);
    json notes = json::object();
    for (const auto& [k, v] : res.report.notes()) notes[k] = v;
    if (!notes.empty()) s["notes"] = std::move(notes);
    suites.push_back(std::move(s));
  }
  j["suites"] = std::move(suites);
  Counts c = count(results);
  j["result"] = {{"ok", c.fail == 0}, {"passed", c.pass}, {"failed", c.fail}, {"skipped", c.skip}};
  return j.dump(2) + "\n";
}

}  // namespace hopfmon
