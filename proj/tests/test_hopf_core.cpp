#include "doctest.h"
#include "hopfmon/error.hpp"
#include "hopfmon/hopf.hpp"

using namespace hopfmon;

namespace {

HopfPtr z2() { return group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2)); }

}  // namespace

TEST_CASE("corpus builders pass the axioms") {
  for (auto H : {z2(), group_algebra("Z3", cyclic_group_table(3), cyclic_group_labels(3)),
                 group_algebra("S3", s3_table(), s3_labels()), sweedler_h4(),
                 function_algebra("F(S3)", s3_table(), s3_labels())}) {
    auto r = check_hopf_axioms(*H);
    CHECK_MESSAGE(r.ok(), H->name() << ": " << r.first_failure());
    auto d = dual(*H);
    CHECK(check_hopf_axioms(*d).ok());
  }
}

TEST_CASE("group algebra antipodes") {
  auto H = z2();
  CHECK(H->antipode() == LinearMap::identity(H->legs(1)));
  auto S3 = group_algebra("S3", s3_table(), s3_labels());
  auto S = S3->antipode();
  CHECK(S.after(S) == LinearMap::identity(S3->legs(1)));
  CHECK(S != LinearMap::identity(S3->legs(1)));
  for (std::size_t j = 0; j < 6; ++j) CHECK(S.column(j).size() == 1);
}

TEST_CASE("Sweedler antipode has order four") {
  auto H = sweedler_h4();
  auto S = H->antipode();
  auto S2 = S.after(S);
  auto id = LinearMap::identity(H->legs(1));
  CHECK(S2 != id);
  CHECK(S2.after(S2) == id);
  // S^2 is conjugation by g: g x g^{-1} = -x.
  auto x = TensorElement::basis(H->legs(1), {2});
  CHECK(S2.apply(x) == x * Scalar(-1));
}

TEST_CASE("broken antipode is reported") {
  auto H = z2();
  auto broken = HopfAlgebra::unchecked(H->algebra(), {H->coproduct(0), H->coproduct(1)}, H->counit(), {{}, {}});
  auto r = check_hopf_axioms(*broken);
  CHECK(!r.ok());
  const Check* c = r.find("antipode");
  REQUIRE(c != nullptr);
  CHECK(c->verdict == Verdict::Fail);
  CHECK(c->detail.find("at (e)") == 0);
  CHECK_THROWS_AS(HopfAlgebra::create(H->algebra(), {H->coproduct(0), H->coproduct(1)}, H->counit(), {{}, {}}),
                  Error);
}

TEST_CASE("broken coproduct is reported") {
  auto H = z2();
  // Delta(g) = g (x) e
  auto broken = HopfAlgebra::unchecked(H->algebra(), {H->coproduct(0), {{2, Scalar(1)}}}, H->counit(),
                                       {sparse_unit(0), sparse_unit(1)});
  auto r = check_hopf_axioms(*broken);
  CHECK(!r.ok());
  CHECK(!r.passed("counit"));
}

TEST_CASE("dual of Z2 is the function algebra") {
  auto d = dual(*z2());
  CHECK(d->algebra()->label(1) == "δ_g");
  // pointwise product
  CHECK(d->algebra()->product(0, 0) == sparse_unit(0));
  CHECK(d->algebra()->product(0, 1).empty());
  CHECK(d->algebra()->unit() == SparseVec{{0, Scalar(1)}, {1, Scalar(1)}});
}

TEST_CASE("double dual reproduces the structure tensors") {
  auto H = sweedler_h4();
  auto dd = dual(*dual(*H));
  CHECK(dd->algebra()->products() == H->algebra()->products());
  CHECK(dd->algebra()->unit() == H->algebra()->unit());
  CHECK(dd->algebra()->labels() == H->algebra()->labels());
  for (std::size_t i = 0; i < 4; ++i) CHECK(dd->coproduct(i) == H->coproduct(i));
  CHECK(dd->counit() == H->counit());
  CHECK(dd->antipode().retyped(H->legs(1), H->legs(1)) == H->antipode());
}

TEST_CASE("opposites") {
  auto H = group_algebra("Z3", cyclic_group_table(3), cyclic_group_labels(3));
  auto c = co_opposite(*H);
  for (std::size_t i = 0; i < 3; ++i) CHECK(c->coproduct(i) == H->coproduct(i));
  auto h4 = sweedler_h4();
  CHECK(check_hopf_axioms(*opposite(*h4)).ok());
  CHECK(check_hopf_axioms(*co_opposite(*h4)).ok());
}

TEST_CASE("iterated coproducts") {
  auto H = sweedler_h4();
  CHECK(iterated_coproduct(*H, 2) == H->comultiplication());
  auto d3 = iterated_coproduct(*H, 3);
  // hand expansion: x(x)1(x)1 + g(x)x(x)1 + g(x)g(x)x
  auto L = H->legs(3);
  auto expected = TensorElement::basis(L, {2, 0, 0}) + TensorElement::basis(L, {1, 2, 0}) +
                  TensorElement::basis(L, {1, 1, 2});
  CHECK(d3.image(2) == expected);
  // the other bracketing agrees
  auto other = apply_map(H->comultiplication().image(2), 0, H->comultiplication());
  CHECK(other == expected);
  auto g = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
  CHECK(iterated_coproduct(*g, 3).image(1) == TensorElement::basis(g->legs(3), {1, 1, 1}));
  CHECK(iterated_coproduct(*H, 0).image(1).value() == Scalar(1));
}

TEST_CASE("canonical element and generating matrices") {
  for (auto H : {sweedler_h4(), group_algebra("S3", s3_table(), s3_labels())}) {
    auto D = dual(*H);
    auto E = canonical_element(*H, D->algebra());
    auto r = check_generating_matrix(*H, E, D.get());
    CHECK_MESSAGE(r.ok(), r.first_failure());
    auto f = hom_from_generating_matrix(E, D->algebra());
    CHECK(f == LinearMap::identity({D->algebra()}));
    CHECK(counit_on(*H, E, 0) == TensorElement::unit({D->algebra()}));
    auto inv = generating_matrix_inverse(*H, E);
    CHECK(inv * E == TensorElement::unit(E.legs()));
    CHECK(inv == tensor_invert(E));
  }
  auto H = z2();
  auto D = dual(*H);
  auto E = canonical_element(*H, D->algebra());
  CHECK(generating_matrix_inverse(*H, E) == E);
  auto trivial = TensorElement::unit({H->algebra(), D->algebra()});
  CHECK(check_generating_matrix(*H, trivial).ok());
  CHECK(generating_matrix_inverse(*H, trivial) == trivial);
}
