#include "hopfmon/multiloop.hpp"

#include <cstdlib>

#include "hopfmon/checks.hpp"
#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

SparseVec tensor_vec(const SparseVec& a, const SparseVec& b, std::size_t nb) {
  SparseVec out;
  for (const auto& [i, c] : a)
    for (const auto& [j, d] : b) out.emplace_back(i * nb + j, c * d);
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

BraidedTensor braided_tensor(const QtPtr& qt, const ModuleAction& A, const ModuleAction& B, const std::string& name,
                             bool verify) {
  const HopfAlgebra& H = qt->H();
  for (const ModuleAction* x : {&A, &B}) {
    if (x->H->dim() != H.dim() || x->H->name() != H.name())
      throw Error(ErrorCode::SignatureMismatch, x->name + " is not an action of " + H.name());
    Report r = check_module_action(*x);
    if (!r.ok()) throw Error(ErrorCode::NotAModuleAction, x->name + ": " + r.first_failure());
  }
  const Algebra& a = *A.A;
  const Algebra& b = *B.A;
  const std::size_t n = H.dim(), na = a.dim(), nb = b.dim(), N = na * nb;
  // act[h][x] tables
  std::vector<SparseVec> actA(n * na), actB(n * nb);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t x = 0; x < na; ++x) actA[h * na + x] = A.act.column(h * na + x);
    for (std::size_t x = 0; x < nb; ++x) actB[h * nb + x] = B.act.column(h * nb + x);
  }
  const SparseVec& R = qt->R().entries();
  std::vector<SparseVec> prods(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      Accumulator acc;
      for (const auto& [pq, c] : R) {
        std::size_t p = pq / n, q = pq % n;
        SparseVec l = a.multiply(sparse_unit(x / nb), actA[q * na + y / nb]);
        if (l.empty()) continue;
        SparseVec r = b.multiply(actB[p * nb + x % nb], sparse_unit(y % nb));
        for (const auto& [i, u] : l)
          for (const auto& [j, v] : r) acc.add(i * nb + j, c * u * v);
      }
      prods[x * N + y] = acc.take();
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.label(i) + "|" + b.label(j));
  std::string nm = name.empty() ? "(" + a.name() + "(x)_R" + b.name() + ")" : name;
  BraidedTensor out;
  out.qt = qt;
  out.algebra = std::make_shared<const Algebra>(nm, a.field(), std::move(labels), std::move(prods),
                                                tensor_vec(a.unit(), b.unit(), nb), hopf_space_tag(nm));
  std::vector<SparseVec> act(n * N);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t x = 0; x < N; ++x) {
      Accumulator acc;
      for (const auto& [uv, c] : H.coproduct(h))
        acc.add_scaled(tensor_vec(actA[uv / n * na + x / nb], actB[uv % n * nb + x % nb], nb), c);
      act[h * N + x] = acc.take();
    }
  out.action = {A.H, out.algebra, LinearMap({H.algebra(), out.algebra}, {out.algebra}, std::move(act)),
                "(" + A.name + "(x)_R" + B.name + ")"};
  out.i_A = LinearMap::from_images({A.A}, {out.algebra}, [&](Index x) {
    return TensorElement::vector(out.algebra, tensor_vec(sparse_unit(x), b.unit(), nb));
  });
  out.i_B = LinearMap::from_images({B.A}, {out.algebra}, [&](Index x) {
    return TensorElement::vector(out.algebra, tensor_vec(a.unit(), sparse_unit(x), nb));
  });
  out.report = Report(nm);
  if (verify) {
    out.report.merge(check_algebra_axioms(*out.algebra), "algebra.");
    out.report.merge(check_module_action(out.action), "action.");
    std::string wa = algebra_map_failure(out.i_A), wb = algebra_map_failure(out.i_B);
    out.report.add("left-embedding", wa.empty(), wa);
    out.report.add("right-embedding", wb.empty(), wb);
    if (!out.report.ok()) throw Error(ErrorCode::InvariantViolation, nm + ": " + out.report.first_failure());
  }
  return out;
}

Report check_braided_associativity(const QtPtr& qt, const ModuleAction& A1, const ModuleAction& A2,
                                   const ModuleAction& A3) {
  BraidedTensor l12 = braided_tensor(qt, A1, A2);
  BraidedTensor left = braided_tensor(qt, l12.action, A3);
  BraidedTensor r23 = braided_tensor(qt, A2, A3);
  BraidedTensor right = braided_tensor(qt, A1, r23.action);
  Report r("bracketing " + A1.name + ", " + A2.name + ", " + A3.name);
  const Algebra& x = *left.algebra;
  const Algebra& y = *right.algebra;
  IdentityCheck prod("same-product");
  for (std::size_t i = 0; i < x.dim() && !prod.failed(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      TensorElement lhs = TensorElement::vector(left.algebra, x.product(i, j));
      TensorElement rhs = TensorElement::vector(left.algebra, y.product(i, j));
      if (!prod.expect(lhs, rhs, x.label(i) + ", " + x.label(j))) break;
    }
  prod.finish(r);
  r.add("same-unit", x.unit() == y.unit());
  bool act = left.action.act.retyped(right.action.act.domain(), right.action.act.codomain()) == right.action.act;
  r.add("same-action", act, act ? "" : "actions differ");
  return r;
}

std::size_t budget_from_env() {
  const char* s = std::getenv("HOPFMON_BUDGET");
  if (s == nullptr || *s == '\0') return 4096;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorCode::MalformedPresentation, "HOPFMON_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

void require_budget(std::size_t dim, std::size_t budget, const std::string& what) {
  if (dim > budget || dim * dim > budget)
    throw Error(ErrorCode::BudgetExceeded, what + " has dimension " + std::to_string(dim) + ", " +
                                               std::to_string(dim * dim) + " entries per slice exceed the budget " +
                                               std::to_string(budget));
}

MultiLoop multiloop_algebra(const QtPtr& qt, std::size_t m, std::size_t budget) {
  if (m == 0) throw Error(ErrorCode::NotApplicable, "m must be positive");
  const HopfAlgebra& H = qt->H();
  const std::size_t n = H.dim();
  require_budget(ipow(n, m), budget, "L_" + std::to_string(m));
  MultiLoop L;
  L.qt = qt;
  L.m = m;
  L.mon = monodromy_algebra(qt);
  L.algebra = L.mon.algebra;
  L.action = L.mon.action;
  for (std::size_t k = 2; k <= m; ++k) {
    BraidedTensor t = braided_tensor(qt, L.action, L.mon.action, "L_" + std::to_string(k) + "(" + qt->label() + ")");
    L.algebra = t.algebra;
    L.action = t.action;
  }
  L.report = Report(L.algebra->name());
  const LegSignature factors(m, L.mon.algebra);
  TensorElement E = L.mon.generating_matrix();
  for (std::size_t nu = 0; nu < m; ++nu) {
    L.iota.push_back(LinearMap::from_images({L.mon.algebra}, {L.algebra}, [&](Index p) {
      return retype(embed_legs(TensorElement::basis({L.mon.algebra}, {p}), {nu}, factors), {L.algebra});
    }));
    L.M.push_back(apply_map(E, 1, L.iota.back()));
    L.report.merge(check_monodromy_relation(*qt, L.mon.coproduct, L.M.back()), "M" + std::to_string(nu + 1) + ".");
  }
  LegSignature sig{H.algebra(), H.algebra(), L.algebra};
  TensorElement R12 = embed_legs(qt->R(), {0, 1}, sig), Rinv12 = embed_legs(qt->R_inv(), {0, 1}, sig);
  for (std::size_t mu = 0; mu < m; ++mu)
    for (std::size_t nu = mu + 1; nu < m; ++nu) {
      TensorElement Mnu13 = embed_legs(L.M[nu], {0, 2}, sig), Mmu23 = embed_legs(L.M[mu], {1, 2}, sig);
      std::string d = first_difference(Mnu13 * R12 * Mmu23, R12 * Mmu23 * Rinv12 * Mnu13 * R12);
      L.report.add("exchange-" + std::to_string(mu + 1) + "-" + std::to_string(nu + 1), d.empty(), d);
    }
  return L;
}

BosonizationV bosonize_V(const QtPtr& qt, const AlgebraPtr& A, const LinearMap& iota) {
  const HopfAlgebra& H = qt->H();
  const Algebra& HA = *H.algebra();
  const std::size_t n = H.dim();
  std::string w = algebra_map_failure(iota);
  if (!w.empty()) throw Error(ErrorCode::NotApplicable, "iota is not a unital algebra map " + w);
  BosonizationV out;
  out.source = braided_tensor(qt, inner_action(qt->hopf(), A, iota), adjoint_action(qt->hopf()));
  out.target = tensor_algebra(A, H.algebra());
  const AlgebraPtr& src = out.source.algebra;
  const SparseVec& R = qt->R().entries();
  const LinearMap& S = H.antipode();

  out.V = LinearMap::from_images({src}, {out.target}, [&](Index x) {
    std::size_t a = x / n, h = x % n;
    Accumulator acc;
    for (const auto& [pq, c] : R)
      for (const auto& [pq2, c2] : R) {
        SparseVec l = A->multiply(sparse_unit(a), iota.apply(TensorElement({H.algebra()}, HA.product(pq % n, pq2 % n))).entries());
        SparseVec r = HA.multiply(HA.product(pq / n, h), S.column(pq2 / n));
        acc.add_scaled(tensor_vec(l, r, n), c * c2);
      }
    return TensorElement::vector(out.target, acc.take());
  });
  out.V_inv = LinearMap::from_images({out.target}, {src}, [&](Index x) {
    std::size_t a = x / n, h = x % n;
    Accumulator acc;
    for (const auto& [pq, c] : R)
      for (const auto& [pq2, c2] : R) {
        SparseVec ys = HA.multiply(sparse_unit(pq2 % n), S.column(pq % n));
        SparseVec l = A->multiply(sparse_unit(a), iota.apply(TensorElement({H.algebra()}, ys)).entries());
        SparseVec r = HA.multiply(HA.product(pq / n, h), sparse_unit(pq2 / n));
        acc.add_scaled(tensor_vec(l, r, n), c * c2);
      }
    return TensorElement::vector(src, acc.take());
  });
  out.Delta_A = LinearMap::from_images(H.legs(1), {out.target}, [&](Index h) {
    Accumulator acc;
    for (const auto& [uv, c] : H.coproduct(h)) acc.add_scaled(tensor_vec(iota.column(uv / n), sparse_unit(uv % n), n), c);
    return TensorElement::vector(out.target, acc.take());
  });
  out.delta_A = out.V_inv.after(out.Delta_A);

  Report& r = out.report;
  r = Report("V_A " + A->name());
  bool inv = out.V.after(out.V_inv) == LinearMap::identity({out.target}) &&
             out.V_inv.after(out.V) == LinearMap::identity({src});
  r.add("mutually-inverse", inv, inv ? "" : "V and V^-1 do not compose to the identity");
  std::string mw = algebra_map_failure(out.V);
  r.add("multiplicative", mw.empty(), mw);

  IdentityCheck eq("equivariant"), impl("implements-action");
  const std::size_t N = src->dim();
  for (std::size_t h = 0; h < n && !(eq.failed() && impl.failed()); ++h) {
    std::vector<std::tuple<TensorElement, TensorElement, TensorElement, TensorElement>> ts;
    for (const auto& [uv, c] : H.coproduct(h)) {
      TensorElement sh2(H.legs(1), S.column(uv % n));
      ts.emplace_back(out.Delta_A.image(uv / n) * c, out.Delta_A.apply(sh2), out.delta_A.image(uv / n) * c,
                      out.delta_A.apply(sh2));
    }
    for (std::size_t x = 0; x < N; ++x) {
      TensorElement wx = TensorElement::basis({src}, {x});
      TensorElement acted = TensorElement::vector(src, out.source.action.apply(h, sparse_unit(x)));
      TensorElement Vx = out.V.image(x);
      TensorElement lhs = TensorElement::zero({out.target}), rhs = TensorElement::zero({src});
      for (const auto& [l, rr, dl, dr] : ts) {
        lhs += l * Vx * rr;
        rhs += dl * wx * dr;
      }
      std::string at = H.label(h) + ", " + src->label(x);
      eq.expect(out.V.apply(acted), lhs, at);
      impl.expect(acted, rhs, at);
    }
  }
  eq.finish(r);
  impl.finish(r);
  return out;
}

Report delta_A_vs_Delta_R(const QtPtr& qt) {
  const HopfAlgebra& H = qt->H();
  const Algebra& HA = *H.algebra();
  const std::size_t n = H.dim();
  BosonizationV B = bosonize_V(qt, H.algebra(), LinearMap::identity(H.legs(1)));
  Report r("delta_A " + qt->label());
  r.merge(B.report, "V.");
  const SparseVec& R = qt->R().entries();
  const LinearMap& S = H.antipode();
  const LinearMap& Sinv = H.antipode_inverse();
  LegSignature two = H.legs(2);
  // sum y^j a2 y^i (x) S^-1(x^i) x^j a1 and sum a1 y^j S(y^i) (x) x^i a2 x^j
  auto first = [&](std::size_t a) {
    Accumulator acc;
    for (const auto& [aa, c0] : H.coproduct(a))
      for (const auto& [pq, c] : R)
        for (const auto& [pq2, c2] : R) {
          SparseVec l = HA.multiply(HA.product(pq2 % n, aa % n), sparse_unit(pq % n));
          SparseVec rr = HA.multiply(HA.multiply(Sinv.column(pq / n), sparse_unit(pq2 / n)), sparse_unit(aa / n));
          acc.add_scaled(tensor_vec(l, rr, n), c0 * c * c2);
        }
    return TensorElement(two, acc.take());
  };
  auto second = [&](std::size_t a) {
    Accumulator acc;
    for (const auto& [aa, c0] : H.coproduct(a))
      for (const auto& [pq, c] : R)
        for (const auto& [pq2, c2] : R) {
          SparseVec l = HA.multiply(HA.product(aa / n, pq2 % n), S.column(pq % n));
          SparseVec rr = HA.multiply(HA.product(pq / n, aa % n), sparse_unit(pq2 / n));
          acc.add_scaled(tensor_vec(l, rr, n), c0 * c * c2);
        }
    return TensorElement(two, acc.take());
  };
  LinearMap dR = delta_R(*co_opposite_structure(*qt));
  IdentityCheck forms("closed-forms-agree"), closed("matches-closed-form"), cop("matches-Delta_R-cop");
  for (std::size_t a = 0; a < n; ++a) {
    TensorElement d = retype(B.delta_A.image(a), two);
    TensorElement s = second(a);
    forms.expect(first(a), s, H.label(a));
    closed.expect(d, s, H.label(a));
    cop.expect(d, retype(dR.image(a), two), H.label(a));
  }
  forms.finish(r);
  closed.finish(r);
  cop.finish(r);
  return r;
}

MultiLoopMonodromy mon_R_m(const QtPtr& qt, std::size_t m, std::size_t budget) {
  const HopfAlgebra& H = qt->H();
  const std::size_t n = H.dim();
  MultiLoopMonodromy out;
  out.loop = multiloop_algebra(qt, m, budget);
  out.mon = mon_R(qt, out.loop.mon);
  const AlgebraPtr& L = out.loop.algebra;
  Report& r = out.report;
  r = Report("mon_R," + std::to_string(m) + " " + qt->label());

  // Braided power of (H, Ad) and V_m by induction: A_1 = H, iota_1 = id.
  ModuleAction ad = adjoint_action(qt->hopf());
  AlgebraPtr power = H.algebra();
  ModuleAction power_action = ad;
  AlgebraPtr A = H.algebra();
  LinearMap iota = LinearMap::identity(H.legs(1));
  LinearMap Vk = LinearMap::identity(H.legs(1));
  for (std::size_t k = 1; k < m; ++k) {
    BraidedTensor t = braided_tensor(qt, power_action, ad, "(" + H.name() + ",Ad)^" + std::to_string(k + 1));
    power = t.algebra;
    power_action = t.action;
    BosonizationV B = bosonize_V(qt, A, iota);
    r.merge(B.report, "V" + std::to_string(k) + ".");
    Vk = Vk.kron(LinearMap::identity(H.legs(1))).after(B.V.retyped({B.source.algebra}, {A, H.algebra()}));
    A = B.source.algebra;
    iota = B.delta_A;
    bool same = A->products() == power->products() && A->unit() == power->unit();
    r.add("stage-" + std::to_string(k + 1) + "-is-braided-power", same, same ? "" : "structure constants differ");
  }
  out.V_m = Vk.retyped({power}, H.legs(m));

  LinearMap K = out.mon.map;
  for (std::size_t k = 1; k < m; ++k) K = K.kron(out.mon.map);
  out.mon_tensor = K.retyped({L}, {power});
  std::string tw = algebra_map_failure(out.mon_tensor);
  r.add("tensor-power-multiplicative", tw.empty(), tw);

  out.map = out.V_m.after(out.mon_tensor);
  std::string mw = algebra_map_failure(out.map);
  r.add("multiplicative", mw.empty(), mw);

  LinearMap dm = iterated_coproduct(H, m);
  IdentityCheck eq("equivariant");
  for (std::size_t h = 0; h < n && !eq.failed(); ++h) {
    std::vector<std::pair<TensorElement, TensorElement>> ts;
    for (const auto& [uv, c] : H.coproduct(h))
      ts.emplace_back(dm.image(uv / n) * c, dm.apply(TensorElement(H.legs(1), H.antipode().column(uv % n))));
    for (std::size_t x = 0; x < L->dim(); ++x) {
      TensorElement lhs = out.map.apply(TensorElement::vector(L, out.loop.action.apply(h, sparse_unit(x))));
      TensorElement rhs = TensorElement::zero(H.legs(m));
      TensorElement mx = out.map.image(x);
      for (const auto& [l, rr] : ts) rhs += l * mx * rr;
      if (!eq.expect(lhs, rhs, H.label(h) + ", " + L->label(x))) break;
    }
  }
  eq.finish(r);

  out.rank = out.map.rank();
  const std::size_t full = ipow(n, m);
  out.bijective = out.rank == full;
  r.add("rank-scaling", out.rank == ipow(out.mon.rank, m),
        ratio(out.rank, full) + ", mon_R " + ratio(out.mon.rank, n));
  r.add("bijective-iff-mon", out.bijective == out.mon.bijective);
  r.note("rank", ratio(out.rank, full));
  r.note("bijective", out.bijective ? "true" : "false");
  return out;
}

Report check_multiloop_restriction(const MultiLoopMonodromy& mm, const MultiLoopMonodromy* previous) {
  const Quasitriangular& qt = *mm.loop.qt;
  const HopfAlgebra& H = qt.H();
  const std::size_t m = mm.loop.m;
  Report r("monodromy matrices in H^(x)" + std::to_string(m) + " " + qt.label());
  TensorElement base = qt.R_at(2, 1, 3) * qt.R_at(2, 0, 3) * qt.R_at(0, 2, 3) * qt.R_inv_at(2, 1, 3);
  for (std::size_t nu = 1; nu <= m; ++nu) {
    TensorElement lhs = apply_map(mm.loop.M[nu - 1], 1, mm.map);
    TensorElement N = apply_map(base, 1, iterated_coproduct(H, nu - 1));
    std::vector<std::size_t> place(nu + 1);
    for (std::size_t k = 0; k <= nu; ++k) place[k] = k;
    std::string d = first_difference(lhs, embed_legs(N, place, H.legs(m + 1)));
    r.add("N" + std::to_string(nu), d.empty(), d);
  }
  if (previous != nullptr) {
    if (previous->loop.m + 1 != m) throw Error(ErrorCode::SignatureMismatch, "restriction needs the result for m - 1");
    const AlgebraPtr& small = previous->loop.algebra;
    const AlgebraPtr& hat = mm.loop.mon.algebra;
    std::vector<std::size_t> place(m - 1);
    for (std::size_t k = 0; k + 1 < m; ++k) place[k] = k;
    IdentityCheck res("restriction");
    for (std::size_t x = 0; x < small->dim(); ++x) {
      TensorElement emb = retype(outer(TensorElement::basis({small}, {x}), TensorElement::vector(hat, hat->unit())),
                                 {mm.loop.algebra});
      TensorElement lhs = mm.map.apply(emb);
      TensorElement rhs = embed_legs(previous->map.image(x), place, H.legs(m));
      if (!res.expect(lhs, rhs, small->label(x))) break;
    }
    res.finish(r);
  }
  return r;
}

ExtendedMultiLoop Mon_R_m(const MultiLoopMonodromy& mm) {
  const Quasitriangular& qt = *mm.loop.qt;
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim(), m = mm.loop.m;
  ExtendedMultiLoop out;
  const std::size_t full = ipow(n, m + 1);
  // Associativity on all triples is only affordable within the budget.
  const bool verify = full * full <= budget_from_env();
  out.source = smash_product(mm.loop.action, {}, verify);
  AlgebraPtr Hm = tensor_power(H.algebra(), m);
  LinearMap dm = iterated_coproduct(H, m).retyped(H.legs(1), {Hm});
  out.target = smash_product(inner_action(qt.hopf(), Hm, dm), {}, verify);
  const AlgebraPtr& T = out.target.algebra;
  LinearMap ext = LinearMap::from_images({out.source.algebra}, {T}, [&](Index xh) {
    SparseVec v;
    for (const auto& [k, c] : mm.map.column(xh / n)) v.emplace_back(k * n + xh % n, c);
    return TensorElement::vector(T, v);
  });
  Report& r = out.report;
  r = Report("Mon_R," + std::to_string(m) + " " + qt.label());
  if (verify)
    r.pass("smash-products-associative");
  else
    r.skip("smash-products-associative", "dimension " + std::to_string(full) + " exceeds the budget");
  std::string w = algebra_map_failure(ext);
  r.add("multiplicative", w.empty(), w);
  out.U = bosonize_U(out.target, dm);
  r.merge(out.U.report, "U.");
  out.map = out.U.U.after(ext);
  out.rank = out.map.rank();
  out.bijective = out.rank == full;
  r.add("bijective-iff-mon", out.bijective == mm.mon.bijective, ratio(out.rank, full));
  r.note("rank", ratio(out.rank, full));
  r.note("bijective", out.bijective ? "true" : "false");
  return out;
}

}  // namespace hopfmon
