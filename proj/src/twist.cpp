#include "hopfmon/twist.hpp"

#include "hopfmon/checks.hpp"
#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

std::vector<SparseVec> columns(const LinearMap& f) {
  std::vector<SparseVec> out;
  for (Index j = 0; j < f.cols(); ++j) out.push_back(f.column(j));
  return out;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

}  // namespace

TensorElement as_square_legs(const TwistedSquare& sq, const TensorElement& t) {
  if (t.rank() % 2 != 0) throw Error(ErrorCode::SignatureMismatch, "odd number of H-legs");
  return retype(t, LegSignature(t.rank() / 2, sq.HH));
}

TwistedSquare build_twisted_square(const QtPtr& qt) {
  const HopfAlgebra& H = qt->H();
  TwistedSquare sq;
  sq.qt = qt;
  sq.plain = tensor_hopf(H, H);
  sq.HH = sq.plain->algebra();
  const std::size_t N = sq.HH->dim();
  const LegSignature hh2(2, sq.HH);
  Report& r = sq.report;
  r = Report("twisted square " + qt->label());

  sq.T = as_square_legs(sq, qt->R_inv_at(1, 2, 4));
  TensorElement T_inv = as_square_legs(sq, qt->R_at(1, 2, 4));
  const LinearMap& D = sq.plain->comultiplication();

  TensorElement lhs = as_square_legs(sq, qt->R_inv_at(1, 2, 6)) * apply_map(sq.T, 0, D);
  TensorElement rhs = as_square_legs(sq, qt->R_inv_at(3, 4, 6)) * apply_map(sq.T, 1, D);
  std::string d = first_difference(lhs, rhs);
  r.add("cocycle", d.empty(), d);

  sq.delta = LinearMap::from_images({sq.HH}, hh2, [&](Index x) { return sq.T * D.image(x) * T_inv; });
  IdentityCheck coassoc("coassociative");
  for (std::size_t x = 0; x < N; ++x) {
    TensorElement dx = sq.delta.image(x);
    if (!coassoc.expect(apply_map(dx, 0, sq.delta), apply_map(dx, 1, sq.delta), sq.HH->label(x))) break;
  }
  coassoc.finish(r);

  IdentityCheck dd("delta-of-coproduct");
  LinearMap d4 = iterated_coproduct(H, 4);
  for (std::size_t a = 0; a < H.dim(); ++a) {
    TensorElement da = sq.delta.apply(TensorElement::vector(sq.HH, H.coproduct(a)));
    if (!dd.expect(da, as_square_legs(sq, d4.image(a)), H.label(a))) break;
  }
  dd.finish(r);

  TensorElement U = multiply_legs(antipode_on(*sq.plain, sq.T, 1), {{0, 1}});
  TensorElement U_inv = tensor_invert(U);
  std::vector<SparseVec> anti(N);
  for (std::size_t x = 0; x < N; ++x)
    anti[x] = (U * sq.plain->antipode().image(x) * U_inv).entries();
  SparseVec counit = sq.plain->counit();
  try {
    sq.hopf = HopfAlgebra::create(sq.HH, columns(sq.delta), counit, std::move(anti));
    r.pass("twisted-hopf");
  } catch (const Error& e) {
    r.fail("twisted-hopf", e.what());
    throw Error(ErrorCode::InvariantViolation, "twisted square: " + r.first_failure());
  }

  sq.script_R = as_square_legs(sq, qt->R_inv_at(3, 0, 4) * qt->R_inv_at(3, 1, 4) * qt->R_at(0, 2, 4) * qt->R_at(1, 2, 4));
  TensorElement R_prime = as_square_legs(sq, qt->R_inv_at(3, 1, 4) * qt->R_at(0, 2, 4));
  r.merge(check_quasitriangular(*sq.plain, R_prime), "R-prime.");
  TensorElement T_op = permute_legs(sq.T, {1, 0});
  std::string tw = first_difference(sq.script_R, T_op * R_prime * T_inv);
  r.add("twist-equivalence", tw.empty(), tw);
  r.merge(check_quasitriangular(*sq.hopf, sq.script_R), "R.");
  if (!r.ok()) throw Error(ErrorCode::InvariantViolation, "twisted square: " + r.first_failure());
  sq.twisted = make_quasitriangular(sq.hopf, sq.script_R, "script_R");
  return sq;
}

LambdaSquare Lambda_R(const TwistedSquare& sq, const DrinfeldDouble& dd, const Factorization& f, const LambdaR& lambda) {
  const Quasitriangular& qt = *sq.qt;
  const HopfAlgebra& H = qt.H();
  const AlgebraPtr& DA = dd.D->algebra();
  LambdaSquare out;
  Report& r = out.report;
  r = Report("Lambda_R " + qt.label());
  out.map = f.pi.map.after(lambda.map).retyped({DA}, {sq.HH});
  const LinearMap& L = out.map;

  bool i = L.after(dd.i_D) == H.comultiplication().retyped(H.legs(1), {sq.HH});
  r.add("coproduct", i, i ? "" : "Lambda_R o i_D != Delta");

  TensorElement F = apply_map(dd.DD, 1, L);
  TensorElement expected = retype(qt.R_inv_at(2, 0, 3) * qt.R_at(0, 1, 3), {H.algebra(), sq.HH});
  std::string d2 = first_difference(F, expected);
  r.add("generating-matrix", d2.empty(), d2);

  IdentityCheck hom("coalgebra-map");
  LinearMap LL = L.kron(L);
  for (std::size_t x = 0; x < DA->dim(); ++x) {
    TensorElement lhs = sq.delta.apply(L.image(x));
    TensorElement rhs = LL.apply(dd.D->comultiplication().image(x));
    if (!hom.expect(lhs, rhs, DA->label(x))) break;
  }
  hom.finish(r);

  TensorElement RD = apply_map(apply_map(dd.qt->R(), 0, L), 1, L);
  std::string d4 = first_difference(RD, sq.script_R);
  r.add("R-matrix", d4.empty(), d4);

  LegSignature sig{H.algebra(), sq.HH, sq.HH};
  TensorElement F13F12 = embed_legs(F, {0, 2}, sig) * embed_legs(F, {0, 1}, sig);
  std::string dg = first_difference(F13F12, apply_map(F, 1, sq.delta));
  r.add("generating-coproduct", dg.empty(), dg);

  LinearMap delta = H.comultiplication().retyped(H.legs(1), {sq.HH});
  Extension ext = check_double_extension(dd, delta, expected);
  bool unique = ext.map && *ext.map == L;
  r.add("uniqueness", unique, unique ? "" : ext.map ? "reconstructed map differs" : ext.report.first_failure());

  out.rank = L.rank();
  const std::size_t n = H.dim();
  out.bijective = out.rank == n * n;
  r.add("bijective-iff-mon", out.bijective == f.mon.bijective,
        "Lambda_R " + ratio(out.rank, n * n) + ", mon_R " + ratio(f.mon.rank, n));
  r.note("rank", ratio(out.rank, n * n));
  r.note("bijective", out.bijective ? "true" : "false");
  return out;
}

TransportedStructure transported_structure(const DrinfeldDouble& dd, const GaugedMonodromy& g, const LambdaR& lambda) {
  const Quasitriangular& qt = *g.qt;
  const HopfAlgebra& H = qt.H();
  const std::size_t n = H.dim();
  const AlgebraPtr& MA = g.algebra();
  const LinearMap& lam = lambda.map;
  const LinearMap& inv = lambda.inverse;
  TransportedStructure out;
  Report& r = out.report;
  r = Report("transported structure " + qt.label());

  out.coproduct_a = lam.kron(lam).after(dd.D->comultiplication()).after(inv);
  out.antipode_a = lam.after(dd.D->antipode()).after(inv);
  out.R_a = apply_map(apply_map(dd.qt->R(), 0, lam), 1, lam);
  SparseVec counit_a, counit_b;
  for (std::size_t j = 0; j < MA->dim(); ++j) {
    Scalar e = dd.D->counit_of(inv.column(j));
    if (!e.is_zero()) counit_a.emplace_back(j, e);
  }

  IdentityCheck basis("basis-factorization");
  for (std::size_t p = 0; p < n && !basis.failed(); ++p)
    for (std::size_t h = 0; h < n; ++h) {
      TensorElement lhs = g.M_emb.image(p) * g.i_M.image(h);
      if (!basis.expect(lhs, TensorElement::basis({MA}, {p * n + h}), MA->label(p * n + h))) break;
    }
  basis.finish(r);

  TensorElement Rop_inv = on_target(qt.R_op_inv(), g.i_M);
  LegSignature sig{H.algebra(), MA, MA};
  TensorElement X = embed_legs(g.R_op, {0, 1}, sig) * embed_legs(g.M, {0, 2}, sig) *
                    embed_legs(Rop_inv, {0, 1}, sig) * embed_legs(g.M, {0, 1}, sig);
  TensorElement Y = antipode_inverse_on(H, Rop_inv * g.M * g.R_op, 0);
  auto ii = [&](std::size_t h) {
    return apply_map(apply_map(TensorElement(H.legs(2), H.coproduct(h)), 0, g.i_M), 1, g.i_M);
  };
  out.coproduct_b = LinearMap::from_images({MA}, {MA, MA}, [&](Index j) { return slice(X, 0, j / n) * ii(j % n); });
  out.antipode_b = LinearMap::from_images({MA}, {MA}, [&](Index j) {
    return g.i_M.apply(H.antipode().image(j % n)) * slice(Y, 0, j / n);
  });
  out.R_b = apply_map(Rop_inv * g.M, 0, g.i_M);
  for (std::size_t j = 0; j < MA->dim(); ++j) {
    Scalar e = sparse_get(H.algebra()->unit(), j / n) * H.counit(j % n);
    if (!e.is_zero()) counit_b.emplace_back(j, e);
  }

  bool i = out.coproduct_a.after(g.i_M) == LinearMap::from_images(H.legs(1), {MA, MA}, ii);
  r.add("coproduct-on-H", i, i ? "" : "Delta_M o i_M != (i_M (x) i_M) o Delta");
  std::string dm = first_difference(apply_map(g.M, 1, out.coproduct_a), X);
  r.add("coproduct-on-M", dm.empty(), dm);
  bool si = out.antipode_a.after(g.i_M) == g.i_M.after(H.antipode());
  r.add("antipode-on-H", si, si ? "" : "S_M o i_M != i_M o S");

  IdentityCheck cop("coproduct-agree"), ant("antipode-agree");
  for (std::size_t j = 0; j < MA->dim(); ++j) {
    cop.expect(out.coproduct_a.image(j), out.coproduct_b.image(j), MA->label(j));
    ant.expect(out.antipode_a.image(j), out.antipode_b.image(j), MA->label(j));
  }
  cop.finish(r);
  ant.finish(r);
  std::string dr = first_difference(out.R_a, out.R_b);
  r.add("R-agree", dr.empty(), dr);
  r.add("counit-agree", counit_a == counit_b, counit_a == counit_b ? "" : "eps_D o lambda^-1 != phi(1) eps(a)");
  if (!r.ok()) throw Error(ErrorCode::InvariantViolation, "transported structure: " + r.first_failure());

  out.hopf = HopfAlgebra::create(MA, columns(out.coproduct_a), counit_a, columns(out.antipode_a));
  Report qr = check_quasitriangular(*out.hopf, out.R_a);
  r.merge(qr, "R.");
  if (!qr.ok()) throw Error(ErrorCode::InvariantViolation, "transported structure: " + qr.first_failure());
  out.qt = make_quasitriangular(out.hopf, out.R_a, "R_M");
  return out;
}

}  // namespace hopfmon
