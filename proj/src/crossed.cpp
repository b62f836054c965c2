#include "hopfmon/crossed.hpp"

#include "hopfmon/checks.hpp"
#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

SparseVec outer_vec(const SparseVec& a, const SparseVec& b, Index nb) {
  SparseVec out;
  out.reserve(a.size() * b.size());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.emplace_back(i * nb + j, x * y);
  return out;
}

}  // namespace

CrossedProduct smash_product(const ModuleAction& action, const std::string& name, bool verify) {
  if (verify) {
    Report r = check_module_action(action);
    if (!r.ok()) throw Error(ErrorCode::NotAModuleAction, action.name + ": " + r.first_failure());
  }
  const HopfAlgebra& H = *action.H;
  const Algebra& A = *action.A;
  const std::size_t nh = H.dim(), na = A.dim(), n = nh * na;
  const Algebra& HA = *H.algebra();

  // acts[u * na + b] = e_u > e_b
  std::vector<SparseVec> acts(nh * na);
  for (std::size_t u = 0; u < nh; ++u)
    for (std::size_t b = 0; b < na; ++b) acts[u * na + b] = action.act.column(u * na + b);

  std::vector<SparseVec> prods(n * n);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) {
      const SparseVec& dh = H.coproduct(h);
      for (std::size_t b = 0; b < na; ++b)
        for (std::size_t k = 0; k < nh; ++k) {
          Accumulator acc;
          for (const auto& [uv, c] : dh) {
            std::size_t u = uv / nh, v = uv % nh;
            const SparseVec& hb = acts[u * na + b];
            if (hb.empty()) continue;
            SparseVec left = A.multiply(sparse_unit(a), hb);
            const SparseVec& right = HA.product(v, k);
            for (const auto& [i, x] : left)
              for (const auto& [j, y] : right) acc.add(i * nh + j, c * x * y);
          }
          prods[(a * nh + h) * n + b * nh + k] = acc.take();
        }
    }

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) labels.push_back(A.label(a) + "#" + H.label(h));
  std::string nm = name.empty() ? "(" + A.name() + "#" + H.name() + ")" : name;
  auto alg = std::make_shared<const Algebra>(nm, A.field(), std::move(labels), std::move(prods),
                                             outer_vec(A.unit(), HA.unit(), nh), hopf_space_tag(nm));
  CrossedProduct cp;
  cp.action = action;
  cp.algebra = alg;
  cp.i_A = LinearMap::from_images({action.A}, {alg}, [&](Index a) {
    return TensorElement::vector(alg, outer_vec(sparse_unit(a), HA.unit(), nh));
  });
  cp.i_H = LinearMap::from_images({H.algebra()}, {alg}, [&](Index h) {
    return TensorElement::vector(alg, outer_vec(A.unit(), sparse_unit(h), nh));
  });
  if (verify) {
    Report ax = check_algebra_axioms(*alg);
    if (!ax.ok()) throw Error(ErrorCode::InvariantViolation, nm + ": " + ax.first_failure());
    for (const auto* f : {&cp.i_A, &cp.i_H}) {
      std::string w = algebra_map_failure(*f);
      if (!w.empty()) throw Error(ErrorCode::InvariantViolation, nm + " embedding: " + w);
    }
  }
  return cp;
}

TensorElement on_target(const TensorElement& x, const LinearMap& f) { return apply_map(x, 1, f); }

GaugedMonodromy gauged_monodromy(const QtPtr& qt, Chirality chirality, bool verify) {
  GaugedMonodromy g;
  g.mon = monodromy_algebra(qt, chirality);
  g.qt = g.mon.qt;
  std::string name = "M(" + qt->label() + ")" + (chirality == Chirality::Right ? "^r" : "");
  g.cp = smash_product(g.mon.action, name, verify);
  g.i_M = g.cp.i_H;
  g.M_emb = g.cp.i_A;
  g.M = apply_map(g.mon.generating_matrix(), 1, g.M_emb);
  g.R_op = on_target(g.qt->R_op(), g.i_M);
  return g;
}

Extension check_monodromy_extension(const GaugedMonodromy& g, const LinearMap& f, const TensorElement& MA,
                         bool verify_homomorphism) {
  const HopfAlgebra& H = g.qt->H();
  const std::size_t n = H.dim();
  if (f.domain().size() != 1 || f.codomain().size() != 1 || f.domain()[0]->dim() != n)
    throw Error(ErrorCode::SignatureMismatch, "f must map H to a single algebra");
  if (MA.rank() != 2 || MA.leg(0)->dim() != n || !same_leg(MA.leg(1), f.codomain()[0]))
    throw Error(ErrorCode::SignatureMismatch, "M must lie in H (x) A");
  const AlgebraPtr& A = f.codomain()[0];
  LinearMap fr = f.retyped({H.algebra()}, f.codomain());
  TensorElement M = retype(MA, {H.algebra(), A});
  std::string w = algebra_map_failure(fr);
  if (!w.empty()) throw Error(ErrorCode::BadExtension, "f is not an algebra map " + w);

  Extension ext;
  Report& r = ext.report;
  r = Report("extension to " + g.algebra()->name());
  r.merge(check_monodromy_relation(*g.qt, g.mon.coproduct, M));
  TensorElement eps_M = counit_on(H, M, 0);
  std::string d = first_difference(eps_M, TensorElement::unit({A}));
  r.add("unital", d.empty(), d);
  IdentityCheck crossed("crossed");
  for (std::size_t a = 0; a < n && !crossed.failed(); ++a) {
    TensorElement X = on_target(TensorElement(H.legs(2), H.coproduct(a)), fr);
    crossed.expect(X * M, M * X, H.label(a));
  }
  crossed.finish(r);
  if (!r.ok()) return ext;

  std::vector<TensorElement> phis(n);
  for (std::size_t p = 0; p < n; ++p) phis[p] = slice(M, 0, p);
  LinearMap fM = LinearMap::from_images({g.algebra()}, {A}, [&](Index pa) {
    return phis[pa / n] * fr.image(pa % n);
  });
  if (verify_homomorphism) {
    std::string hw = algebra_map_failure(fM);
    r.add("homomorphism", hw.empty(), hw);
    if (!hw.empty()) return ext;
  }
  ext.map = std::move(fM);
  return ext;
}

MonodromyInverse left_monodromy_inverse(const QtPtr& qt, const LinearMap& f, const TensorElement& M) {
  const HopfAlgebra& H = qt->H();
  GaugedMonodromy g = gauged_monodromy(qt, Chirality::Left, false);
  Extension ext = check_monodromy_extension(g, f, M, false);
  if (!ext.report.ok()) throw Error(ErrorCode::NotApplicable, "extension conditions fail: " + ext.report.first_failure());
  MonodromyInverse out;
  out.report = Report("left monodromy inverse " + qt->label());
  TensorElement rinv = on_target(qt->R_op_inv(), f);
  out.D_A = rinv * M;
  out.inverse = antipode_on(H, out.D_A, 0) * rinv;

  const AlgebraPtr& A = f.codomain()[0];
  LegSignature sig{H.algebra(), H.algebra(), A};
  TensorElement D13 = embed_legs(out.D_A, {0, 2}, sig), D23 = embed_legs(out.D_A, {1, 2}, sig);
  std::string d1 = first_difference(D13 * D23, coproduct_on(H, out.D_A, 0));
  out.report.add("D-generating", d1.empty(), d1);
  TensorElement one = TensorElement::unit(out.D_A.legs());
  std::string d2 = first_difference(out.inverse * M, one);
  if (d2.empty()) d2 = first_difference(M * out.inverse, one);
  out.report.add("two-sided-inverse", d2.empty(), d2);
  if (!out.report.ok())
    throw Error(ErrorCode::InvariantViolation, "left monodromy inverse: " + out.report.first_failure());
  return out;
}

Report check_monodromy_pair(const Quasitriangular& qt, const LinearMap& f, const TensorElement& left,
                            const TensorElement& right) {
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim();
  const AlgebraPtr& A = f.codomain()[0];
  Report r("monodromy pair " + qt.label());

  std::string du = first_difference(counit_on(H, right, 0), TensorElement::unit({A}));
  r.add("right-unital", du.empty(), du);

  IdentityCheck crossed("right-crossed");
  for (std::size_t a = 0; a < n && !crossed.failed(); ++a) {
    TensorElement X = on_target(permute_legs(TensorElement(H.legs(2), H.coproduct(a)), {1, 0}), f);
    crossed.expect(X * right, right * X, H.label(a));
  }
  crossed.finish(r);

  LegSignature sig{H.algebra(), H.algebra(), A};
  TensorElement R21 = embed_legs(qt.R(), {1, 0}, sig);
  TensorElement Mr13 = embed_legs(right, {0, 2}, sig), Mr23 = embed_legs(right, {1, 2}, sig);
  TensorElement delta_op = permute_legs(coproduct_on(H, right, 0), {1, 0, 2});
  std::string d1 = first_difference(Mr13 * R21 * Mr23, R21 * delta_op);
  r.add("right-relation", d1.empty(), d1);

  TensorElement Ml13 = embed_legs(left, {0, 2}, sig);
  std::string d2 = first_difference(Ml13 * Mr23, Mr23 * Ml13);
  r.add("leg-commutation", d2.empty(), d2);

  IdentityCheck images("images-commute");
  std::vector<TensorElement> ls(n), rs(n);
  for (std::size_t p = 0; p < n; ++p) {
    ls[p] = slice(left, 0, p);
    rs[p] = slice(right, 0, p);
  }
  for (std::size_t p = 0; p < n && !images.failed(); ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!images.expect(ls[p] * rs[q], rs[q] * ls[p], "δ_" + H.label(p) + ", δ_" + H.label(q))) break;
  images.finish(r);
  return r;
}

MonodromyPair right_monodromy(const QtPtr& qt, const LinearMap& f, const TensorElement& M_left) {
  MonodromyInverse inv = left_monodromy_inverse(qt, f, M_left);
  MonodromyPair pair;
  pair.left = M_left;
  pair.right = on_target(qt->R(), f) * inv.inverse * on_target(qt->R_op(), f);
  pair.report = Report("monodromy pair " + qt->label());
  pair.report.merge(inv.report);
  pair.report.merge(check_monodromy_pair(*qt, f, M_left, pair.right));
  GaugedMonodromy gr = gauged_monodromy(qt, Chirality::Right, false);
  Extension ext = check_monodromy_extension(gr, f, pair.right, true);
  pair.report.merge(ext.report, "right-extension.");
  if (!pair.report.ok()) throw Error(ErrorCode::InvariantViolation, pair.report.first_failure());
  return pair;
}

}  // namespace hopfmon
