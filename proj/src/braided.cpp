#include "hopfmon/braided.hpp"

#include "hopfmon/checks.hpp"
#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

TensorElement basis_el(const AlgebraPtr& a, std::size_t i) { return TensorElement::vector(a, sparse_unit(i)); }

// Terms (u, v, c) of sum c e_u (x) e_v for a two-leg flattened vector.
struct Term2 {
  std::size_t u, v;
  Scalar c;
};

std::vector<Term2> terms2(const SparseVec& t, std::size_t n) {
  std::vector<Term2> out;
  for (const auto& [uv, c] : t) out.push_back({std::size_t(uv / n), std::size_t(uv % n), c});
  return out;
}

// Applies a map column-wise to the first factor of each term.
std::vector<Term2> map_first(const std::vector<Term2>& ts, const LinearMap& f) {
  std::vector<Term2> out;
  for (const auto& t : ts)
    for (const auto& [k, c] : f.column(t.u)) out.push_back({std::size_t(k), t.v, c * t.c});
  return out;
}

std::vector<Term2> map_second(const std::vector<Term2>& ts, const LinearMap& f) {
  std::vector<Term2> out;
  for (const auto& t : ts)
    for (const auto& [k, c] : f.column(t.v)) out.push_back({t.u, std::size_t(k), c * t.c});
  return out;
}

// Coadjoint-type action: the e^k coefficient of h > e^j is the e_j
// coefficient of sum c e_u e_k e_v over the terms of h.
ModuleAction coadjoint_from_terms(const HopfPtr& H, const AlgebraPtr& on, const std::string& name,
                                  const std::function<std::vector<Term2>(std::size_t)>& terms) {
  const std::size_t n = H->dim();
  if (on->dim() != n || on->tag().space != H->algebra()->tag().dual)
    throw Error(ErrorCode::SignatureMismatch, "coadjoint action needs an algebra on the dual space");
  const Algebra& A = *H->algebra();
  std::vector<Accumulator> cols(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    auto ts = terms(p);
    for (std::size_t k = 0; k < n; ++k) {
      Accumulator x;
      for (const auto& t : ts) {
        SparseVec uk = A.multiply(sparse_unit(t.u), sparse_unit(k));
        x.add_scaled(A.multiply(uk, sparse_unit(t.v)), t.c);
      }
      for (const auto& [j, c] : x.take()) cols[p * n + j].add(k, c);
    }
  }
  std::vector<SparseVec> columns;
  columns.reserve(cols.size());
  for (auto& c : cols) columns.push_back(c.take());
  return {H, on, LinearMap({H->algebra(), on}, {on}, std::move(columns)), name};
}

}  // namespace

SparseVec ModuleAction::apply(std::size_t h, const SparseVec& a) const {
  const std::size_t n = A->dim();
  Accumulator acc;
  for (const auto& [i, c] : a) acc.add_scaled(act.column(h * n + i), c);
  return acc.take();
}

SparseVec ModuleAction::apply(const SparseVec& h, const SparseVec& a) const {
  Accumulator acc;
  for (const auto& [i, c] : h) acc.add_scaled(apply(std::size_t(i), a), c);
  return acc.take();
}

Report check_module_action(const ModuleAction& action) {
  Report r("action " + action.name);
  const HopfAlgebra& H = *action.H;
  const Algebra& A = *action.A;
  const std::size_t nh = H.dim(), na = A.dim();
  const Algebra& HA = *H.algebra();
  auto el = [&](const SparseVec& v) { return TensorElement::vector(action.A, v); };

  IdentityCheck unital("unital");
  for (std::size_t a = 0; a < na && !unital.failed(); ++a)
    unital.expect(el(action.apply(HA.unit(), sparse_unit(a))), el(sparse_unit(a)), A.label(a));
  unital.finish(r);

  IdentityCheck assoc("associative");
  for (std::size_t h = 0; h < nh && !assoc.failed(); ++h)
    for (std::size_t k = 0; k < nh && !assoc.failed(); ++k)
      for (std::size_t a = 0; a < na; ++a) {
        SparseVec lhs = action.apply(h, action.apply(k, sparse_unit(a)));
        SparseVec rhs = action.apply(HA.product(h, k), sparse_unit(a));
        if (!assoc.expect(el(lhs), el(rhs), H.label(h) + ", " + H.label(k) + ", " + A.label(a))) break;
      }
  assoc.finish(r);

  IdentityCheck unit("unit-preserved");
  for (std::size_t h = 0; h < nh && !unit.failed(); ++h)
    unit.expect(el(action.apply(h, A.unit())), el(sparse_scale(A.unit(), H.counit(h))), H.label(h));
  unit.finish(r);

  IdentityCheck alg("module-algebra");
  for (std::size_t h = 0; h < nh && !alg.failed(); ++h) {
    auto ts = terms2(H.coproduct(h), nh);
    for (std::size_t a = 0; a < na && !alg.failed(); ++a) {
      std::vector<SparseVec> left(nh);
      for (std::size_t u = 0; u < nh; ++u) left[u] = action.apply(u, sparse_unit(a));
      for (std::size_t b = 0; b < na; ++b) {
        SparseVec lhs = action.apply(h, A.product(a, b));
        Accumulator acc;
        for (const auto& t : ts) acc.add_scaled(A.multiply(left[t.u], action.apply(t.v, sparse_unit(b))), t.c);
        if (!alg.expect(el(lhs), el(acc.take()), H.label(h) + ", " + A.label(a) + ", " + A.label(b))) break;
      }
    }
  }
  alg.finish(r);
  return r;
}

ModuleAction coadjoint_action(const HopfPtr& H, const AlgebraPtr& on) {
  const std::size_t n = H->dim();
  return coadjoint_from_terms(H, on, "coad(" + H->name() + ")",
                              [&](std::size_t p) { return map_first(terms2(H->coproduct(p), n), H->antipode()); });
}

ModuleAction right_coadjoint_action(const HopfPtr& H, const AlgebraPtr& on) {
  const std::size_t n = H->dim();
  const LinearMap& sinv = H->antipode_inverse();
  return coadjoint_from_terms(H, on, "coad_r(" + H->name() + ")", [&](std::size_t p) {
    std::vector<Term2> out;
    for (const auto& t : map_second(terms2(H->coproduct(p), n), sinv)) out.push_back({t.v, t.u, t.c});
    return out;
  });
}

ModuleAction inner_action(const HopfPtr& H, const AlgebraPtr& A, const LinearMap& iota) {
  const std::size_t nh = H->dim(), na = A->dim();
  if (iota.domain().size() != 1 || !same_leg(iota.domain()[0], H->algebra()) || total_dim(iota.codomain()) != na)
    throw Error(ErrorCode::SignatureMismatch, "inner action needs iota: H -> A");
  std::vector<SparseVec> columns(nh * na);
  for (std::size_t h = 0; h < nh; ++h) {
    // iota(h1) (x) iota(S h2) as terms over A (x) A.
    std::vector<std::tuple<SparseVec, SparseVec, Scalar>> ts;
    for (const auto& t : map_second(terms2(H->coproduct(h), nh), H->antipode()))
      ts.emplace_back(iota.column(t.u), iota.column(t.v), t.c);
    for (std::size_t a = 0; a < na; ++a) {
      Accumulator acc;
      for (const auto& [l, rgt, c] : ts) acc.add_scaled(A->multiply(A->multiply(l, sparse_unit(a)), rgt), c);
      columns[h * na + a] = acc.take();
    }
  }
  return {H, A, LinearMap({H->algebra(), A}, {A}, std::move(columns)), "inner(" + A->name() + ")"};
}

ModuleAction adjoint_action(const HopfPtr& H) {
  auto a = inner_action(H, H->algebra(), LinearMap::identity({H->algebra()}));
  a.name = "Ad(" + H->name() + ")";
  return a;
}

ModuleAction trivial_action(const HopfPtr& H, const AlgebraPtr& A) {
  const std::size_t nh = H->dim(), na = A->dim();
  std::vector<SparseVec> columns(nh * na);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < na; ++a) columns[h * na + a] = sparse_scale(sparse_unit(a), H->counit(h));
  return {H, A, LinearMap({H->algebra(), A}, {A}, std::move(columns)), "triv(" + A->name() + ")"};
}

AlgebraPtr dual_algebra_of(const HopfAlgebra& H, const LinearMap& coproduct, const std::string& name) {
  const std::size_t n = H.dim();
  if (coproduct.cols() != n || coproduct.rows() != n * n)
    throw Error(ErrorCode::SignatureMismatch, "coproduct must map H to H (x) H");
  std::vector<SparseVec> prods(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ij, c] : coproduct.column(k)) prods[ij].emplace_back(k, c);
  const Algebra& A = *H.algebra();
  std::vector<std::string> labels;
  for (const auto& l : A.labels()) labels.push_back(l.rfind("δ_", 0) == 0 ? l.substr(3) : "δ_" + l);
  return std::make_shared<const Algebra>(name, H.field(), std::move(labels), std::move(prods), H.counit(),
                                         SpaceTag{A.tag().dual, A.tag().space});
}

LinearMap delta_R(const Quasitriangular& qt) {
  const HopfAlgebra& H = qt.H();
  // Legs [x^i, y^i, x^j, S(y^j)].
  TensorElement P = outer(qt.R(), antipode_on(H, qt.R(), 1));
  return LinearMap::from_images(H.legs(1), H.legs(2), [&](Index a) {
    TensorElement t = outer(P, TensorElement(H.legs(2), H.coproduct(a)));
    return multiply_legs(t, {{0, 4, 2}, {3, 1, 5}});
  });
}

LinearMap delta_prime(const Quasitriangular& qt) {
  const HopfAlgebra& H = qt.H();
  return LinearMap::from_images(H.legs(1), H.legs(2),
                                [&](Index a) { return qt.R() * TensorElement(H.legs(2), H.coproduct(a)); });
}

Report check_delta_R(const Quasitriangular& qt, const LinearMap& dR) {
  Report r("Delta_R " + qt.label());
  const HopfAlgebra& H = qt.H();
  IdentityCheck coassoc("coassociative"), counit("counit");
  for (std::size_t a = 0; a < H.dim(); ++a) {
    TensorElement d = dR.image(a);
    coassoc.expect(apply_map(d, 0, dR), apply_map(d, 1, dR), H.label(a));
    TensorElement e = basis_el(H.algebra(), a);
    counit.expect(counit_on(H, d, 0), e, H.label(a));
    counit.expect(counit_on(H, d, 1), e, H.label(a));
  }
  coassoc.finish(r);
  counit.finish(r);
  return r;
}

Report check_delta_prime(const Quasitriangular& qt) {
  Report r("Delta' " + qt.label());
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim();
  LinearMap dp = delta_prime(qt);
  auto delta = [&](const SparseVec& v) { return H.comultiplication().apply(TensorElement::vector(H.algebra(), v)); };
  IdentityCheck coassoc("coassociative");
  for (std::size_t a = 0; a < n; ++a) {
    TensorElement d = dp.image(a);
    coassoc.expect(apply_map(d, 0, dp), apply_map(d, 1, dp), H.label(a));
  }
  coassoc.finish(r);
  IdentityCheck right("right-module"), left("left-module");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::string at = H.label(a) + ", " + H.label(b);
      TensorElement ab = dp.apply(TensorElement::vector(H.algebra(), H.algebra()->product(a, b)));
      right.expect(ab, dp.image(a) * delta(sparse_unit(b)), at);
      left.expect(ab, permute_legs(delta(sparse_unit(a)), {1, 0}) * dp.image(b), at);
    }
  right.finish(r);
  left.finish(r);
  std::string w = algebra_map_failure(dp);
  r.note("algebra-map", w.empty() ? "yes" : "no: " + w);
  return r;
}

Report check_delta_R_equivariance(const Quasitriangular& qt, const LinearMap& dR) {
  Report r("Delta_R equivariance " + qt.label());
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim();
  LinearMap d4 = iterated_coproduct(H, 4);
  IdentityCheck eq("coadjoint-equivariant");
  for (std::size_t a = 0; a < n && !eq.failed(); ++a) {
    TensorElement q = d4.image(a);
    // [S a1, a2, S a3, a4]
    TensorElement s = antipode_on(H, antipode_on(H, q, 0), 2);
    for (std::size_t b = 0; b < n; ++b) {
      Accumulator conj;
      for (const auto& t : map_first(terms2(H.coproduct(a), n), H.antipode()))
        conj.add_scaled(H.algebra()->multiply(H.algebra()->product(t.u, b), sparse_unit(t.v)), t.c);
      TensorElement lhs = dR.apply(TensorElement::vector(H.algebra(), conj.take()));
      TensorElement rhs = multiply_legs(outer(s, dR.image(b)), {{0, 4, 1}, {2, 5, 3}});
      if (!eq.expect(lhs, rhs, H.label(a) + ", " + H.label(b))) break;
    }
  }
  eq.finish(r);
  return r;
}

TensorElement MonodromyAlgebra::generating_matrix() const { return canonical_element(qt->H(), algebra); }

MonodromyAlgebra monodromy_algebra(const QtPtr& qt, Chirality chirality) {
  MonodromyAlgebra m;
  m.chirality = chirality;
  std::string name = "mon(" + qt->label() + ")";
  if (chirality == Chirality::Right) {
    m.qt = co_opposite_structure(*qt);
    name += "^r";
  } else {
    m.qt = qt;
  }
  m.coproduct = delta_R(*m.qt);
  m.algebra = dual_algebra_of(m.qt->H(), m.coproduct, name);
  m.action = coadjoint_action(m.qt->hopf(), m.algebra);
  return m;
}

Report check_monodromy_relation(const Quasitriangular& qt, const LinearMap& dR, const TensorElement& M) {
  Report r("monodromy relation " + qt.label());
  const HopfAlgebra& H = qt.H();
  if (M.rank() != 2 || !same_leg(M.leg(0), H.algebra()))
    throw Error(ErrorCode::SignatureMismatch, "M must lie in H (x) A");
  LegSignature sig{H.algebra(), H.algebra(), M.leg(1)};
  TensorElement M13 = embed_legs(M, {0, 2}, sig), M23 = embed_legs(M, {1, 2}, sig);
  TensorElement R12 = embed_legs(qt.R(), {0, 1}, sig);
  TensorElement braided_lhs = M13 * R12 * M23;
  TensorElement braided_rhs = R12 * coproduct_on(H, M, 0);
  TensorElement mult_lhs = M13 * M23;
  TensorElement mult_rhs = apply_map(M, 0, dR);
  std::string d1 = first_difference(braided_lhs, braided_rhs);
  std::string d2 = first_difference(mult_lhs, mult_rhs);
  r.add("braided-form", d1.empty(), d1);
  r.add("Delta_R-form", d2.empty(), d2);
  if (d1.empty() != d2.empty())
    throw Error(ErrorCode::InvariantViolation, "the two forms of the monodromy relation disagree on " + qt.label());
  return r;
}

}  // namespace hopfmon
