#include "doctest.h"
#include "hopfmon/error.hpp"
#include "hopfmon/quasitriangular.hpp"
#include "oracle.hpp"

using namespace hopfmon;

TEST_CASE("trivial R on group algebras") {
  for (auto H : {group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2)),
                 group_algebra("S3", s3_table(), s3_labels())}) {
    auto qt = make_quasitriangular(H, trivial_r(*H), "trivial");
    CHECK(qt->triangular());
    CHECK(check_cocycle_property(*qt).ok());
    CHECK(derived_identities(*qt).ok());
  }
}

TEST_CASE("Sweedler R family") {
  auto H = sweedler_h4();
  const auto* A = H->algebra().get();
  for (int lambda : {0, 1, 2}) {
    auto R = sweedler_r(*H, Scalar(lambda));
    auto qt = make_quasitriangular(H, R, "R" + std::to_string(lambda));
    // Every member of the family is triangular.
    CHECK(qt->triangular());
    auto c = check_cocycle_property(*qt);
    CHECK_MESSAGE(c.ok(), c.first_failure());
    auto d = derived_identities(*qt);
    CHECK_MESSAGE(d.ok(), d.first_failure());
    // Oracle: dense products R * R^{-1} and R_op * R.
    auto dR = oracle::to_dense(R);
    auto dinv = oracle::to_dense(qt->R_inv());
    auto one = oracle::to_dense(TensorElement::unit(H->legs(2)));
    CHECK(oracle::mul({A, A}, dR, dinv).v == one.v);
    auto rop_r = oracle::mul({A, A}, oracle::permute(dR, {1, 0}), dR);
    CHECK(rop_r.v == one.v);
    if (lambda != 0) CHECK(R != sweedler_r(*H, Scalar(0)));
    // Oracle: inverse agrees with (S (x) id)(R), computed entrywise.
    auto S = H->antipode();
    oracle::Dense sr = oracle::zeros({4, 4});
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) sr.v[k * 4 + j] += S.at(k, i) * dR.v[i * 4 + j];
    CHECK(sr.v == dinv.v);
    // Oracle: brute-force flip equals R_op.
    oracle::Dense flip = oracle::zeros({4, 4});
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) flip.v[j * 4 + i] = dR.v[i * 4 + j];
    CHECK(oracle::same(flip, qt->R_op()));
    CHECK(embed_legs(R, {1, 0}, H->legs(2)) == qt->R_op());
    // the opposite structure validates on the co-opposite algebra
    CHECK_NOTHROW(co_opposite_structure(*qt));
  }
}

TEST_CASE("non-examples are rejected") {
  auto H = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
  auto R = TensorElement::basis(H->legs(2), {0, 1});
  auto r = check_quasitriangular(*H, R);
  CHECK(!r.passed("coproduct-first-leg"));
  try {
    make_quasitriangular(H, R, "bad");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotQuasitriangular);
  }
  auto h4 = sweedler_h4();
  // 1 (x) 1 on H4 fails the intertwining relation (H4 is not cocommutative).
  CHECK(!check_quasitriangular(*h4, trivial_r(*h4)).passed("intertwines-opposite-coproduct"));
}

TEST_CASE("cyclotomic R on Z3") {
  auto H = group_algebra("Z3w", cyclic_group_table(3), cyclic_group_labels(3), FieldSpec::cyclotomic(3));
  auto qt = make_quasitriangular(H, cyclic_zeta_r(*H), "Rw");
  CHECK(!qt->triangular());
  CHECK(derived_identities(*qt).ok());
  CHECK(check_cocycle_property(*qt).ok());
}
