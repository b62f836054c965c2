#include "hopfmon/factorization.hpp"

#include <algorithm>

#include "hopfmon/checks.hpp"
#include "hopfmon/error.hpp"
#include "hopfmon/linalg.hpp"

namespace hopfmon {

namespace {

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

}  // namespace

MonodromyMap mon_R(const QtPtr& qt, const MonodromyAlgebra& mon) {
  const HopfAlgebra& H = qt->H();
  const std::size_t n = H.dim();
  MonodromyMap out;
  out.report = Report("mon_R " + qt->label());
  TensorElement RR = qt->R_op() * qt->R();
  out.map = LinearMap::from_images({mon.algebra}, H.legs(1), [&](Index p) { return slice(RR, 0, p); });

  LegSignature h3 = H.legs(3);
  auto Rat = [&](std::size_t i, std::size_t j) { return qt->R_at(i, j, 3); };
  TensorElement lhs = Rat(2, 0) * Rat(0, 2) * Rat(0, 1) * Rat(2, 1) * Rat(1, 2);
  TensorElement rhs = Rat(0, 1) * coproduct_on(H, RR, 0);
  std::string d = first_difference(lhs, rhs);
  out.report.add("tensor-relation", d.empty(), d);

  std::string w = algebra_map_failure(out.map);
  out.report.add("multiplicative", w.empty(), w);

  ModuleAction ad = adjoint_action(qt->hopf());
  IdentityCheck eq("equivariant");
  for (std::size_t a = 0; a < n && !eq.failed(); ++a)
    for (std::size_t p = 0; p < n; ++p) {
      TensorElement l = out.map.apply(TensorElement::vector(mon.algebra, mon.action.apply(a, sparse_unit(p))));
      TensorElement r = TensorElement::vector(H.algebra(), ad.apply(a, out.map.column(p)));
      if (!eq.expect(l, r, H.label(a) + ", " + mon.algebra->label(p))) break;
    }
  eq.finish(out.report);

  out.rank = out.map.rank();
  out.bijective = out.rank == n;
  out.report.note("rank", ratio(out.rank, n));
  out.report.note("bijective", out.bijective ? "true" : "false");
  return out;
}

Report mon_R_op_dual_check(const Quasitriangular& qt) {
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim();
  Report r("mon_R_op duality " + qt.label());
  // mon_R(e^p) = sum_k X[p,k] e_k and mon_{R_op}(e^q) = sum_k Y[q,k] e_k.
  TensorElement X = qt.R_op() * qt.R(), Y = qt.R() * qt.R_op();
  IdentityCheck dual("transpose");
  for (std::size_t p = 0; p < n && !dual.failed(); ++p)
    for (std::size_t q = 0; q < n; ++q) {
      TensorElement lhs = TensorElement::scalar(Y.coefficient({q, p}));
      TensorElement rhs = TensorElement::scalar(X.coefficient({p, q}));
      if (!dual.expect(lhs, rhs, "δ_" + H.label(p) + ", δ_" + H.label(q))) break;
    }
  dual.finish(r);
  auto matrix_rank = [&](const TensorElement& t) {
    std::vector<SparseVec> cols(n);
    for (const auto& [i, c] : t.entries()) cols[i / n].emplace_back(i % n, c);
    return rank(Matrix::from_columns(n, cols));
  };
  std::size_t a = matrix_rank(X), b = matrix_rank(Y);
  r.add("equal-ranks", a == b, a == b ? ratio(a, n) : ratio(a, n) + " vs " + ratio(b, n));
  return r;
}

Bosonization bosonize_U(const CrossedProduct& cp, const LinearMap& iota) {
  const HopfAlgebra& H = *cp.action.H;
  const AlgebraPtr& A = cp.action.A;
  const std::size_t nh = H.dim();
  AlgebraPtr target = tensor_algebra(A, H.algebra());
  auto build = [&](bool inverse) {
    return LinearMap::from_images({cp.algebra}, {target}, [&](Index ab) {
      std::size_t a = ab / nh, b = ab % nh;
      Accumulator acc;
      for (const auto& [uv, c] : H.coproduct(b)) {
        std::size_t u = uv / nh, v = uv % nh;
        SparseVec left = inverse ? SparseVec{} : iota.column(u);
        if (inverse)
          for (const auto& [s, cs] : H.antipode().column(u)) left = sparse_add(left, sparse_scale(iota.column(s), cs));
        for (const auto& [i, x] : A->multiply(sparse_unit(a), left)) acc.add(i * nh + v, c * x);
      }
      return TensorElement::vector(target, acc.take());
    });
  };
  Bosonization out;
  out.U = build(false);
  out.U_inv = build(true).retyped({target}, {cp.algebra});
  out.report = Report("bosonization " + cp.algebra->name());
  bool inv = out.U.after(out.U_inv) == LinearMap::identity({target}) &&
             out.U_inv.after(out.U) == LinearMap::identity({cp.algebra});
  out.report.add("mutually-inverse", inv, inv ? "" : "U and U^-1 do not compose to the identity");
  std::string w = algebra_map_failure(out.U);
  out.report.add("multiplicative", w.empty(), w);
  return out;
}

ExtendedMonodromy Mon_R(const GaugedMonodromy& g, const MonodromyMap& mon) {
  const HopfAlgebra& H = g.qt->H();
  const std::size_t n = H.dim();
  ExtendedMonodromy out;
  out.target = smash_product(adjoint_action(g.qt->hopf()), "(" + H.name() + "#Ad)");
  const AlgebraPtr& T = out.target.algebra;
  out.map = LinearMap::from_images({g.algebra()}, {T}, [&](Index pa) {
    SparseVec v;
    for (const auto& [k, c] : mon.map.column(pa / n)) v.emplace_back(k * n + pa % n, c);
    return TensorElement::vector(T, v);
  });
  out.report = Report("Mon_R " + g.qt->label());
  std::string w = algebra_map_failure(out.map);
  out.report.add("multiplicative", w.empty(), w);
  bool emb = out.map.after(g.i_M) == out.target.i_H;
  out.report.add("restricts-to-embedding", emb, emb ? "" : "Mon_R o i_M != 1 # id");
  std::size_t r = out.map.rank();
  out.report.add("rank-scaling", r == n * mon.rank, ratio(r, n * n));
  return out;
}

PiR pi_R(const GaugedMonodromy& g, const MonodromyMap& mon, const ExtendedMonodromy& ext, const Bosonization& U) {
  const Quasitriangular& qt = *g.qt;
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim();
  PiR out;
  out.map = U.U.after(ext.map);
  const AlgebraPtr& HH = out.map.codomain()[0];
  Report& r = out.report;
  r = Report("factorization " + qt.label());

  bool i = out.map.after(g.i_M) == H.comultiplication().retyped(H.legs(1), {HH});
  r.add("coproduct", i, i ? "" : "pi_R o i_M != Delta");

  LegSignature h3 = H.legs(3);
  auto as_hh = [&](const TensorElement& t) { return retype(t, {H.algebra(), HH}); };
  TensorElement left = apply_map(g.M, 1, out.map);
  std::string d2 = first_difference(left, as_hh(embed_legs(qt.R_op() * qt.R(), {0, 1}, h3)));
  r.add("left-monodromy", d2.empty(), d2);

  MonodromyPair pair = right_monodromy(g.qt, g.i_M, g.M);
  TensorElement R13R31 = qt.R_at(0, 2, 3) * qt.R_at(2, 0, 3);
  TensorElement right = apply_map(pair.right, 1, out.map);
  std::string d3 = first_difference(right, as_hh(R13R31));
  r.add("right-monodromy", d3.empty(), d3);
  r.add("monodromy-verdicts-agree", d2.empty() == d3.empty());

  TensorElement bridge = coproduct_on(H, qt.R(), 1) * embed_legs(tensor_invert(qt.R_op() * qt.R()), {0, 1}, h3) *
                         coproduct_on(H, qt.R_op(), 1);
  std::string db = first_difference(bridge, R13R31);
  r.add("bridge", db.empty(), db);

  out.rank = out.map.rank();
  out.bijective = out.rank == n * n;
  r.add("bijective-iff-mon", out.bijective == mon.bijective,
        "pi_R " + ratio(out.rank, n * n) + ", mon_R " + ratio(mon.rank, n));
  if (out.bijective) {
    std::vector<SparseVec> l_img, r_img, h1, oneh;
    for (std::size_t p = 0; p < n; ++p) {
      l_img.push_back(slice(left, 0, p).entries());
      r_img.push_back(slice(right, 0, p).entries());
      SparseVec a, b;
      for (const auto& [u, c] : H.algebra()->unit()) {
        a.emplace_back(p * n + u, c);
        b.emplace_back(u * n + p, c);
      }
      std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      h1.push_back(a);
      oneh.push_back(b);
    }
    bool ls = same_span(l_img, h1, n * n), rs = same_span(r_img, oneh, n * n);
    r.add("left-image", ls, ls ? "H (x) 1" : "image differs from H (x) 1");
    r.add("right-image", rs, rs ? "1 (x) H" : "image differs from 1 (x) H");
  } else {
    r.skip("left-image", "mon_R not bijective");
    r.skip("right-image", "mon_R not bijective");
  }
  r.note("rank", ratio(out.rank, n * n));
  r.note("kernel", std::to_string(n * n - out.rank));
  r.note("bijective", out.bijective ? "true" : "false");
  return out;
}

Factorization factorize(const QtPtr& qt) {
  Factorization f;
  f.g = gauged_monodromy(qt);
  f.mon = mon_R(qt, f.g.mon);
  f.ext = Mon_R(f.g, f.mon);
  f.U = bosonize_U(f.ext.target, LinearMap::identity(qt->H().legs(1)));
  f.pi = pi_R(f.g, f.mon, f.ext, f.U);
  f.report = Report("factorization " + qt->label());
  f.report.merge(f.mon.report, "mon.");
  f.report.merge(mon_R_op_dual_check(*qt), "mon-dual.");
  f.report.merge(f.ext.report, "Mon.");
  f.report.merge(f.U.report, "U.");
  f.report.merge(f.pi.report, "pi.");
  f.report.note("factorizable", f.mon.bijective ? "true" : "false");
  return f;
}

}  // namespace hopfmon
