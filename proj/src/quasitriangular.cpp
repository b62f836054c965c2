#include "hopfmon/quasitriangular.hpp"

#include "hopfmon/error.hpp"

namespace hopfmon {

TensorElement Quasitriangular::R_at(std::size_t i, std::size_t j, std::size_t n) const {
  return embed_legs(R_, {i, j}, legs(n));
}

TensorElement Quasitriangular::R_inv_at(std::size_t i, std::size_t j, std::size_t n) const {
  return embed_legs(R_inv_, {i, j}, legs(n));
}

Report check_quasitriangular(const HopfAlgebra& H, const TensorElement& R) {
  Report report("R-matrix on " + H.name());
  const auto two = H.legs(2), three = H.legs(3);
  if (!same_signature(R.legs(), two)) throw Error(ErrorCode::SignatureMismatch, "R must lie in H (x) H");
  TensorElement R_inv;
  try {
    R_inv = tensor_invert(R);
    report.pass("invertible");
  } catch (const Error& e) {
    report.fail("invertible", e.what());
    return report;
  }
  auto R13 = embed_legs(R, {0, 2}, three), R23 = embed_legs(R, {1, 2}, three), R12 = embed_legs(R, {0, 1}, three);
  auto l1 = coproduct_on(H, R, 0), r1 = R13 * R23;
  report.add("coproduct-first-leg", l1 == r1, first_difference(l1, r1));
  auto l2 = coproduct_on(H, R, 1), r2 = R13 * R12;
  report.add("coproduct-second-leg", l2 == r2, first_difference(l2, r2));
  std::string fail;
  for (std::size_t a = 0; a < H.dim() && fail.empty(); ++a) {
    TensorElement d(two, H.coproduct(a));
    auto lhs = R * d * R_inv;
    auto rhs = permute_legs(d, {1, 0});
    if (lhs != rhs) fail = "at " + H.label(a) + ": " + first_difference(lhs, rhs);
  }
  report.add("intertwines-opposite-coproduct", fail.empty(), fail);
  auto one = TensorElement::unit(H.legs(1));
  auto e0 = counit_on(H, R, 0), e1 = counit_on(H, R, 1);
  report.add("counit-normalized", e0 == one && e1 == one, e0 == one ? first_difference(e1, one) : first_difference(e0, one));
  return report;
}

QtPtr make_quasitriangular(HopfPtr H, TensorElement R, std::string r_name) {
  Report r = check_quasitriangular(*H, R);
  if (!r.ok()) throw Error(ErrorCode::NotQuasitriangular, r_name + " on " + H->name() + ": " + r.first_failure());
  std::shared_ptr<Quasitriangular> qt(new Quasitriangular());
  qt->hopf_ = H;
  qt->r_name_ = std::move(r_name);
  qt->R_inv_ = tensor_invert(R);
  qt->R_op_ = permute_legs(R, {1, 0});
  qt->R_op_inv_ = permute_legs(qt->R_inv_, {1, 0});
  qt->triangular_ = qt->R_op_ * R == TensorElement::unit(H->legs(2));
  qt->R_ = std::move(R);
  return qt;
}

Report check_cocycle_property(const Quasitriangular& qt) {
  Report report(qt.label());
  const auto& H = qt.H();
  auto lhs = qt.R_at(0, 1, 3) * coproduct_on(H, qt.R(), 0);
  auto rhs = qt.R_at(1, 2, 3) * coproduct_on(H, qt.R(), 1);
  report.add("cocycle", lhs == rhs, first_difference(lhs, rhs));
  return report;
}

Report derived_identities(const Quasitriangular& qt) {
  Report report(qt.label());
  const auto& H = qt.H();
  const auto& R = qt.R();
  auto one2 = TensorElement::unit(H.legs(2));
  // sum x^i x^j (x) S(y^j) y^i
  auto t14 = multiply_legs(outer(R, antipode_on(H, R, 1)), {{0, 2}, {3, 1}});
  report.add("contraction-left", t14 == one2, first_difference(t14, one2));
  // sum x^i x^j (x) y^j S(y^i)
  auto t15 = multiply_legs(outer(antipode_on(H, R, 1), R), {{0, 2}, {3, 1}});
  report.add("contraction-right", t15 == one2, first_difference(t15, one2));
  auto s1 = antipode_on(H, R, 0);
  report.add("antipode-first-leg-inverts", s1 == qt.R_inv(), first_difference(s1, qt.R_inv()));
  auto ss = antipode_on(H, s1, 1);
  report.add("antipode-both-legs-fixes", ss == R, first_difference(ss, R));
  auto lhs = qt.R_at(0, 1, 3) * qt.R_at(0, 2, 3) * qt.R_at(1, 2, 3);
  auto rhs = qt.R_at(1, 2, 3) * qt.R_at(0, 2, 3) * qt.R_at(0, 1, 3);
  report.add("yang-baxter", lhs == rhs, first_difference(lhs, rhs));
  report.note("triangular", qt.triangular() ? "true" : "false");
  return report;
}

QtPtr co_opposite_structure(const Quasitriangular& qt) {
  auto cop = co_opposite(qt.H());
  return make_quasitriangular(cop, retype(qt.R_op(), cop->legs(2)), qt.r_name() + "_op");
}

TensorElement trivial_r(const HopfAlgebra& H) { return TensorElement::unit(H.legs(2)); }

TensorElement sweedler_r(const HopfAlgebra& h4, const Scalar& lambda) {
  const auto two = h4.legs(2);
  auto b = [&](std::size_t i, std::size_t j) { return TensorElement::basis(two, {i, j}); };
  // basis 1, g, x, gx
  auto grouplike = b(0, 0) + b(0, 1) + b(1, 0) - b(1, 1);
  auto nilpotent = b(2, 2) - b(2, 3) + b(3, 2) + b(3, 3);
  return grouplike * Scalar(1, 2) + nilpotent * (lambda * Scalar(1, 2));
}

TensorElement cyclic_zeta_r(const HopfAlgebra& zn) {
  const std::size_t n = zn.dim();
  const Scalar z = Scalar::zeta(zn.field());
  std::vector<Scalar> pw(n, Scalar(1));
  for (std::size_t k = 1; k < n; ++k) pw[k] = pw[k - 1] * z;
  SparseVec v;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) v.emplace_back(a * n + b, pw[(a * b) % n] * Scalar(1, static_cast<std::int64_t>(n)));
  return TensorElement(zn.legs(2), std::move(v));
}

}  // namespace hopfmon
