#include "doctest.h"
#include "hopfmon/crossed.hpp"
#include "hopfmon/error.hpp"
#include "oracle.hpp"

using namespace hopfmon;

namespace {

QtPtr h4_r(int lambda) {
  auto h4 = sweedler_h4();
  return make_quasitriangular(h4, sweedler_r(*h4, Scalar(lambda)), "R" + std::to_string(lambda));
}

QtPtr z3_zeta() {
  auto z3 = group_algebra("Z3c", cyclic_group_table(3), cyclic_group_labels(3), FieldSpec::cyclotomic(3));
  return make_quasitriangular(z3, cyclic_zeta_r(*z3), "Rzeta");
}

QtPtr z2_trivial() {
  auto z2 = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
  return make_quasitriangular(z2, trivial_r(*z2), "trivial");
}

}  // namespace

TEST_CASE("smash product with the trivial action is the tensor algebra") {
  auto h4 = sweedler_h4();
  auto s3 = group_algebra("S3", s3_table(), s3_labels());
  auto cp = smash_product(trivial_action(h4, s3->algebra()));
  auto t = tensor_algebra(s3->algebra(), h4->algebra());
  CHECK(cp.algebra->products() == t->products());
  CHECK(cp.algebra->unit() == t->unit());
}

TEST_CASE("adjoint smash product on H4") {
  auto h4 = sweedler_h4();
  auto cp = smash_product(adjoint_action(h4));
  CHECK(cp.algebra->dim() == 16);
  CHECK(check_algebra_axioms(*cp.algebra).ok());
}

TEST_CASE("left multiplication is not a module-algebra action") {
  auto h4 = sweedler_h4();
  ModuleAction bad = trivial_action(h4, h4->algebra());
  const std::size_t n = 4;
  std::vector<SparseVec> cols(n * n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t a = 0; a < n; ++a) cols[h * n + a] = h4->algebra()->product(h, a);
  bad.act = LinearMap({h4->algebra(), h4->algebra()}, {h4->algebra()}, cols);
  bad.name = "left-mult";
  CHECK_FALSE(check_module_action(bad).passed("module-algebra"));
  CHECK_THROWS_AS(smash_product(bad), Error);
  try {
    smash_product(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAModuleAction);
  }
}

TEST_CASE("gauged monodromy algebra and its defining extension") {
  for (auto qt : {z2_trivial(), h4_r(1), z3_zeta()}) {
    auto g = gauged_monodromy(qt);
    const std::size_t n = qt->H().dim();
    CHECK(g.algebra()->dim() == n * n);
    auto ext = check_monodromy_extension(g, g.i_M, g.M);
    CHECK_MESSAGE(ext.report.ok(), ext.report.first_failure());
    REQUIRE(ext.map.has_value());
    CHECK(*ext.map == LinearMap::identity({g.algebra()}));
  }
}

TEST_CASE("coproduct with R21 R12 extends to the gauged monodromy algebra") {
  auto qt = h4_r(1);
  const auto& H = qt->H();
  auto g = gauged_monodromy(qt);
  auto HH = tensor_algebra(H.algebra(), H.algebra());
  LinearMap f = H.comultiplication().retyped(H.legs(1), {HH});
  TensorElement rr = qt->R_op() * qt->R();
  TensorElement M = retype(embed_legs(rr, {0, 1}, H.legs(3)), {H.algebra(), HH});
  auto ext = check_monodromy_extension(g, f, M);
  CHECK_MESSAGE(ext.report.ok(), ext.report.first_failure());
}

TEST_CASE("twisting f by a non-central unit breaks the crossed relation") {
  auto qt = h4_r(1);
  auto g = gauged_monodromy(qt);
  const auto& A = *g.algebra();
  SparseVec u = g.i_M.column(1);  // i_M(g), an involution
  LinearMap f = LinearMap::from_images(qt->H().legs(1), {g.algebra()}, [&](Index a) {
    return TensorElement::vector(g.algebra(), A.multiply(A.multiply(u, g.i_M.column(a)), u));
  });
  CHECK(algebra_map_failure(f).empty());
  auto ext = check_monodromy_extension(g, f, g.M);
  CHECK_FALSE(ext.report.passed("crossed"));
  CHECK(ext.report.find("crossed")->detail.rfind("at (", 0) == 0);
  CHECK_FALSE(ext.map.has_value());
}

TEST_CASE("non-algebra-map f raises BadExtension") {
  auto qt = h4_r(1);
  auto g = gauged_monodromy(qt);
  LinearMap f = LinearMap::from_images(qt->H().legs(1), {g.algebra()},
                                       [&](Index a) { return g.i_M.image(a) * Scalar(2); });
  try {
    check_monodromy_extension(g, f, g.M);
    FAIL("expected BadExtension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadExtension);
  }
}

TEST_CASE("left monodromy inverse") {
  {
    auto qt = z2_trivial();
    auto g = gauged_monodromy(qt);
    auto inv = left_monodromy_inverse(qt, g.i_M, g.M);
    CHECK(inv.inverse == antipode_on(qt->H(), g.M, 0));
  }
  for (auto qt : {h4_r(1), z3_zeta()}) {
    auto g = gauged_monodromy(qt);
    auto inv = left_monodromy_inverse(qt, g.i_M, g.M);
    CHECK(inv.report.ok());
    CHECK(inv.inverse * g.M == TensorElement::unit(g.M.legs()));
    // Independent linear-solve inverse.
    CHECK(inv.inverse == tensor_invert(g.M));
  }
  auto qt = h4_r(1);
  auto g = gauged_monodromy(qt);
  try {
    left_monodromy_inverse(qt, g.i_M, g.M * Scalar(2));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotApplicable);
  }
}

TEST_CASE("right monodromy in the gauged monodromy algebra") {
  for (auto qt : {z2_trivial(), h4_r(0), h4_r(1), z3_zeta()}) {
    auto g = gauged_monodromy(qt);
    auto pair = right_monodromy(qt, g.i_M, g.M);
    CHECK_MESSAGE(pair.report.ok(), pair.report.first_failure());
    CHECK(pair.report.passed("images-commute"));
  }
}

TEST_CASE("right monodromy versus the plain inverse for triangular R") {
  {
    auto qt = z2_trivial();
    auto g = gauged_monodromy(qt);
    CHECK(right_monodromy(qt, g.i_M, g.M).right == tensor_invert(g.M));
  }
  // Triangular but R does not commute with M^-1: only the conjugate agrees.
  auto qt = h4_r(0);
  auto g = gauged_monodromy(qt);
  auto right = right_monodromy(qt, g.i_M, g.M).right;
  TensorElement inv = tensor_invert(g.M);
  CHECK(right != inv);
  CHECK(right == on_target(qt->R(), g.i_M) * inv * on_target(qt->R_inv(), g.i_M));
}

TEST_CASE("right monodromy is not the plain inverse for a factorizable R") {
  auto qt = z3_zeta();
  auto g = gauged_monodromy(qt);
  auto pair = right_monodromy(qt, g.i_M, g.M);
  CHECK(pair.right != tensor_invert(g.M));
}
