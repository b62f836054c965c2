#include "doctest.h"
#include "hopfmon/error.hpp"
#include "hopfmon/twist.hpp"
#include "oracle.hpp"

using namespace hopfmon;

namespace {

QtPtr h4_r(int lambda) {
  auto h4 = sweedler_h4();
  return make_quasitriangular(h4, sweedler_r(*h4, Scalar(lambda)), "R" + std::to_string(lambda));
}

QtPtr z2_trivial() {
  auto z2 = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
  return make_quasitriangular(z2, trivial_r(*z2), "trivial");
}

struct Pipeline {
  TwistedSquare sq;
  DrinfeldDouble dd;
  Factorization f;
  LambdaR lambda;
};

Pipeline run(const QtPtr& qt) {
  Pipeline p{build_twisted_square(qt), drinfeld_double(qt->hopf()), factorize(qt), {}};
  p.lambda = lambda_R(qt, p.dd, p.f.g);
  return p;
}

}  // namespace

TEST_CASE("tensor product Hopf algebra") {
  auto h4 = sweedler_h4();
  auto hh = tensor_hopf(*h4, *h4);
  CHECK(hh->dim() == 16);
  CHECK(check_hopf_axioms(*hh).ok());
}

TEST_CASE("twisted square for trivial R") {
  auto qt = z2_trivial();
  auto sq = build_twisted_square(qt);
  CHECK(sq.report.ok());
  CHECK(sq.T == TensorElement::unit({sq.HH, sq.HH}));
  CHECK(sq.delta == sq.plain->comultiplication());
  CHECK(sq.script_R == TensorElement::unit({sq.HH, sq.HH}));
}

TEST_CASE("twisted square on H4") {
  for (int l : {0, 1, 2}) {
    auto sq = build_twisted_square(h4_r(l));
    CHECK_MESSAGE(sq.report.ok(), sq.report.first_failure());
    CHECK(sq.report.passed("cocycle"));
    CHECK(sq.report.passed("twist-equivalence"));
    CHECK(sq.report.passed("delta-of-coproduct"));
    CHECK(check_hopf_axioms(*sq.hopf).ok());
  }
  // For nontrivial R the twist really changes the coproduct.
  auto sq = build_twisted_square(h4_r(1));
  CHECK(sq.delta != sq.plain->comultiplication());
}

TEST_CASE("delta on H (x) 1 by index expansion") {
  // delta(a (x) 1) = sum a1 (x) u^i x^k (x) v^i a2 y^k (x) 1 with R^-1 = u (x) v.
  auto qt = h4_r(1);
  auto sq = build_twisted_square(qt);
  const auto& H = qt->H();
  const auto& A = *H.algebra();
  const std::size_t n = 4;
  for (std::size_t a = 0; a < n; ++a) {
    Accumulator acc;
    for (const auto& [uv, c1] : qt->R_inv().entries())
      for (const auto& [aa, c2] : H.coproduct(a))
        for (const auto& [xy, c3] : qt->R().entries()) {
          SparseVec l1 = A.multiply(sparse_unit(uv / n), sparse_unit(xy / n));
          SparseVec l2 = A.multiply(A.multiply(sparse_unit(uv % n), sparse_unit(aa % n)), sparse_unit(xy % n));
          for (const auto& [x, d1] : l1)
            for (const auto& [y, d2] : l2)
              for (const auto& [e, d3] : A.unit())
                acc.add(((aa / n * n + x) * n + y) * n + e, c1 * c2 * c3 * d1 * d2 * d3);
        }
    SparseVec a1;
    for (const auto& [e, c] : A.unit()) a1.emplace_back(a * n + e, c);
    CHECK(sq.delta.apply(TensorElement::vector(sq.HH, a1)) == TensorElement({sq.HH, sq.HH}, acc.take()));
  }
}

TEST_CASE("Lambda_R on trivial R") {
  auto qt = z2_trivial();
  auto p = run(qt);
  auto L = Lambda_R(p.sq, p.dd, p.f, p.lambda);
  CHECK_MESSAGE(L.report.ok(), L.report.first_failure());
  // Lambda(phi # a) = phi(1) Delta(a).
  const auto& H = qt->H();
  const std::size_t n = 2;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < n; ++a)
      CHECK(L.map.column(q * n + a) == sparse_scale(H.coproduct(a), sparse_get(H.algebra()->unit(), q)));
  CHECK(L.rank == 2);
}

TEST_CASE("Lambda_R on H4 with R1") {
  auto p = run(h4_r(1));
  auto L = Lambda_R(p.sq, p.dd, p.f, p.lambda);
  CHECK_MESSAGE(L.report.ok(), L.report.first_failure());
  for (const char* c : {"coproduct", "generating-matrix", "coalgebra-map", "R-matrix", "generating-coproduct", "uniqueness"})
    CHECK_MESSAGE(L.report.passed(c), c);
  CHECK(L.rank == 4);
  CHECK_FALSE(L.bijective);
}

TEST_CASE("Lambda_R is an isomorphism for D(Z2)") {
  auto z2 = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
  auto dz2 = drinfeld_double(z2);
  auto p = run(dz2.qt);
  auto L = Lambda_R(p.sq, p.dd, p.f, p.lambda);
  CHECK_MESSAGE(L.report.ok(), L.report.first_failure());
  CHECK(L.bijective);
  CHECK(L.rank == 16);
}

TEST_CASE("transported Hopf structure on the gauged monodromy algebra") {
  for (auto qt : {z2_trivial(), h4_r(1)}) {
    auto p = run(qt);
    auto t = transported_structure(p.dd, p.f.g, p.lambda);
    CHECK_MESSAGE(t.report.ok(), t.report.first_failure());
    CHECK(t.coproduct_a == t.coproduct_b);
    CHECK(t.antipode_a == t.antipode_b);
    CHECK(t.R_a == t.R_b);
    CHECK(t.report.passed("coproduct-on-M"));
  }
}

TEST_CASE("transported structure for trivial R matches D(H) through the identity grid") {
  auto qt = z2_trivial();
  auto p = run(qt);
  auto t = transported_structure(p.dd, p.f.g, p.lambda);
  const auto& DA = p.dd.D->algebra();
  const auto& MA = p.f.g.algebra();
  // lambda is the identity on basis labels here.
  CHECK(p.lambda.map == LinearMap::identity({DA}).retyped({DA}, {MA}));
  CHECK(t.coproduct_a.retyped({DA}, {DA, DA}) == p.dd.D->comultiplication());
}
