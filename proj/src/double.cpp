#include "hopfmon/double.hpp"

#include "hopfmon/checks.hpp"
#include "hopfmon/error.hpp"

namespace hopfmon {

DrinfeldDouble drinfeld_double(const HopfPtr& Hp, bool validate) {
  const HopfAlgebra& H = *Hp;
  if (!H.antipode_invertible()) throw Error(ErrorCode::NotInvertible, "D(H) needs an invertible antipode");
  DrinfeldDouble dd;
  dd.H = Hp;
  dd.Hdual = dual(H);
  const HopfAlgebra& Hd = *dd.Hdual;
  const std::size_t n = H.dim(), N = n * n;
  const Algebra& HA = *H.algebra();
  const Algebra& DA = *Hd.algebra();
  const LinearMap& sinv = H.antipode_inverse();
  LinearMap d3 = iterated_coproduct(H, 3), dd3 = iterated_coproduct(Hd, 3);

  std::vector<SparseVec> prods(N * N);
  for (std::size_t q = 0; q < n; ++q) {
    const SparseVec& aq = d3.column(q);
    for (std::size_t r = 0; r < n; ++r) {
      // Collapse the pairings: weights w[(r2, q2)].
      Accumulator w;
      for (const auto& [rr, c] : dd3.column(r)) {
        std::size_t r1 = rr / N, r2 = (rr / n) % n, r3 = rr % n;
        for (const auto& [qq, d] : aq) {
          std::size_t q1 = qq / N, q2 = (qq / n) % n, q3 = qq % n;
          if (q1 != r3) continue;
          const Scalar& s = sinv.at(r1, q3);
          if (s.is_zero()) continue;
          w.add(r2 * n + q2, c * d * s);
        }
      }
      SparseVec weights = w.take();
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t s = 0; s < n; ++s) {
          Accumulator acc;
          for (const auto& [rq, c] : weights) {
            const SparseVec& phi = DA.product(p, rq / n);
            const SparseVec& ab = HA.product(rq % n, s);
            for (const auto& [i, x] : phi)
              for (const auto& [j, y] : ab) acc.add(i * n + j, c * x * y);
          }
          prods[(p * n + q) * N + r * n + s] = acc.take();
        }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a) labels.push_back(DA.label(p) + "#" + HA.label(a));
  std::string name = "D(" + H.name() + ")";
  SparseVec unit;
  for (const auto& [p, c] : DA.unit())
    for (const auto& [a, d] : HA.unit()) unit.emplace_back(p * n + a, c * d);
  auto alg = std::make_shared<const Algebra>(name, H.field(), std::move(labels), std::move(prods), unit,
                                             hopf_space_tag(name));
  Report ax = check_algebra_axioms(*alg);
  if (!ax.ok()) throw Error(ErrorCode::ConventionError, name + " product: " + ax.first_failure());
  dd.report = Report(name);
  dd.report.merge(ax, "algebra.");

  auto vec = [&](const SparseVec& phi, const SparseVec& a) {
    SparseVec out;
    for (const auto& [p, c] : phi)
      for (const auto& [b, d] : a) out.emplace_back(p * n + b, c * d);
    return out;
  };

  // Delta_D(phi # a) = (phi2 # a1) (x) (phi1 # a2)
  std::vector<SparseVec> coprods(N);
  SparseVec counit;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a) {
      Accumulator acc;
      for (const auto& [pp, c] : Hd.coproduct(p))
        for (const auto& [aa, d] : H.coproduct(a))
          acc.add((pp % n * n + aa / n) * N + (pp / n * n + aa % n), c * d);
      coprods[p * n + a] = acc.take();
      Scalar e = Hd.counit(p) * H.counit(a);
      if (!e.is_zero()) counit.emplace_back(p * n + a, e);
    }
  // S_D(phi # a) = i_D(S a) D(S^-1 phi)
  std::vector<SparseVec> anti(N);
  const LinearMap& dsinv = Hd.antipode_inverse();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a)
      anti[p * n + a] = alg->multiply(vec(DA.unit(), H.antipode().column(a)), vec(dsinv.column(p), HA.unit()));

  dd.D = validate ? HopfAlgebra::create(alg, std::move(coprods), std::move(counit), std::move(anti))
                  : HopfAlgebra::unchecked(alg, std::move(coprods), std::move(counit), std::move(anti));
  dd.i_D = LinearMap::from_images({H.algebra()}, {alg},
                                  [&](Index a) { return TensorElement::vector(alg, vec(DA.unit(), sparse_unit(a))); });
  dd.D_emb = LinearMap::from_images({Hd.algebra()}, {alg},
                                    [&](Index p) { return TensorElement::vector(alg, vec(sparse_unit(p), HA.unit())); });
  dd.DD = apply_map(canonical_element(H, Hd.algebra()), 1, dd.D_emb);

  // D(phi1) <phi2|a1> i_D(a2) = i_D(a1) <a2|phi1> D(phi2)
  IdentityCheck straight("straightening");
  for (std::size_t p = 0; p < n && !straight.failed(); ++p)
    for (std::size_t a = 0; a < n; ++a) {
      Accumulator lhs, rhs;
      for (const auto& [pp, c] : Hd.coproduct(p))
        for (const auto& [aa, d] : H.coproduct(a)) {
          std::size_t p1 = pp / n, p2 = pp % n, a1 = aa / n, a2 = aa % n;
          if (p2 == a1) lhs.add(p1 * n + a2, c * d);
          if (a2 == p1) rhs.add_scaled(alg->multiply(dd.i_D.column(a1), dd.D_emb.column(p2)), c * d);
        }
      if (!straight.expect(TensorElement::vector(alg, lhs.take()), TensorElement::vector(alg, rhs.take()),
                           DA.label(p) + ", " + HA.label(a)))
        break;
    }
  straight.finish(dd.report);
  if (straight.failed()) throw Error(ErrorCode::ConventionError, name + " straightening fails");

  dd.qt = make_quasitriangular(dd.D, apply_map(dd.DD, 0, dd.i_D), "R_D");
  return dd;
}

Extension check_double_extension(const DrinfeldDouble& dd, const LinearMap& f, const TensorElement& D_A,
                          bool verify_homomorphism) {
  const HopfAlgebra& H = *dd.H;
  const std::size_t n = H.dim();
  if (f.domain().size() != 1 || f.codomain().size() != 1 || !same_leg(f.domain()[0], H.algebra()))
    throw Error(ErrorCode::SignatureMismatch, "f must map H to a single algebra");
  const AlgebraPtr& A = f.codomain()[0];
  if (D_A.rank() != 2 || !same_leg(D_A.leg(0), H.algebra()) || !same_leg(D_A.leg(1), A))
    throw Error(ErrorCode::SignatureMismatch, "D_A must lie in H (x) A");
  std::string w = algebra_map_failure(f);
  if (!w.empty()) throw Error(ErrorCode::BadExtension, "f is not an algebra map " + w);

  Extension ext;
  Report& r = ext.report;
  r = Report("extension to " + dd.D->name());
  LegSignature sig{H.algebra(), H.algebra(), A};
  TensorElement D13 = embed_legs(D_A, {0, 2}, sig), D23 = embed_legs(D_A, {1, 2}, sig);
  std::string d1 = first_difference(D13 * D23, coproduct_on(H, D_A, 0));
  r.add("generating", d1.empty(), d1);
  std::string d2 = first_difference(counit_on(H, D_A, 0), TensorElement::unit({A}));
  r.add("unital", d2.empty(), d2);
  IdentityCheck twisted("twisted-crossed");
  for (std::size_t a = 0; a < n && !twisted.failed(); ++a) {
    TensorElement d(H.legs(2), H.coproduct(a));
    TensorElement X = on_target(d, f), Y = on_target(permute_legs(d, {1, 0}), f);
    twisted.expect(D_A * X, Y * D_A, H.label(a));
  }
  twisted.finish(r);
  if (!r.ok()) return ext;

  std::vector<TensorElement> phis(n);
  for (std::size_t p = 0; p < n; ++p) phis[p] = slice(D_A, 0, p);
  LinearMap fD = LinearMap::from_images({dd.D->algebra()}, {A},
                                        [&](Index pa) { return phis[pa / n] * f.image(pa % n); });
  if (verify_homomorphism) {
    std::string hw = algebra_map_failure(fD);
    r.add("homomorphism", hw.empty(), hw);
    if (!hw.empty()) return ext;
  }
  ext.map = std::move(fD);
  return ext;
}

LambdaR lambda_R(const QtPtr& qt, const DrinfeldDouble& dd, const GaugedMonodromy& g) {
  LambdaR out;
  out.report = Report("lambda_R " + qt->label());
  out.DD_M = on_target(qt->R_op_inv(), g.i_M) * g.M;
  Extension fwd = check_double_extension(dd, g.i_M, out.DD_M);
  out.report.merge(fwd.report, "forward.");
  TensorElement M_D = on_target(qt->R_op(), dd.i_D) * dd.DD;
  Extension back = check_monodromy_extension(g, dd.i_D, M_D);
  out.report.merge(back.report, "inverse.");
  if (!fwd.map || !back.map) throw Error(ErrorCode::InvariantViolation, out.report.first_failure());
  out.map = *fwd.map;
  out.inverse = *back.map;
  bool inv = out.map.after(out.inverse) == LinearMap::identity({g.algebra()}) &&
             out.inverse.after(out.map) == LinearMap::identity({dd.D->algebra()});
  out.report.add("two-sided-inverse", inv, inv ? "" : "compositions differ from the identity");
  bool restricts = out.map.after(dd.i_D) == g.i_M;
  out.report.add("restricts-to-identity", restricts, restricts ? "" : "lambda_R o i_D != i_M");
  if (!out.report.ok()) throw Error(ErrorCode::InvariantViolation, out.report.first_failure());
  return out;
}

MonodromyPair double_monodromies(const QtPtr& qt, const DrinfeldDouble& dd) {
  TensorElement left = on_target(qt->R_op(), dd.i_D) * dd.DD;
  MonodromyPair pair = right_monodromy(qt, dd.i_D, left);
  TensorElement expected = on_target(qt->R(), dd.i_D) * generating_matrix_inverse(*dd.H, dd.DD);
  std::string d = first_difference(pair.right, expected);
  pair.report.add("double-formula", d.empty(), d);
  if (!d.empty()) throw Error(ErrorCode::InvariantViolation, "right monodromy in D(H): " + d);
  return pair;
}

}  // namespace hopfmon
