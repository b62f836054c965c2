#include "doctest.h"
#include "hopfmon/double.hpp"
#include "hopfmon/factorization.hpp"
#include "oracle.hpp"

using namespace hopfmon;

namespace {

QtPtr h4_r(int lambda) {
  auto h4 = sweedler_h4();
  return make_quasitriangular(h4, sweedler_r(*h4, Scalar(lambda)), "R" + std::to_string(lambda));
}

QtPtr trivial(const char* name) {
  std::string n = name;
  auto H = n == "S3" ? group_algebra("S3", s3_table(), s3_labels())
                     : group_algebra(n, cyclic_group_table(n == "Z2" ? 2 : 3), cyclic_group_labels(n == "Z2" ? 2 : 3));
  return make_quasitriangular(H, trivial_r(*H), "trivial");
}

// rank of phi -> (phi (x) id)(R_op R) by dense elimination.
std::size_t mon_rank_oracle(const Quasitriangular& qt) {
  const std::size_t n = qt.H().dim();
  const auto* A = qt.H().algebra().get();
  auto rr = oracle::mul({A, A}, oracle::permute(oracle::to_dense(qt.R()), {1, 0}), oracle::to_dense(qt.R()));
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rr.v[i * n + j];
  return oracle::matrix_rank(m);
}

}  // namespace

TEST_CASE("mon_R ranks") {
  auto dz2 = drinfeld_double(trivial("Z2")->hopf());
  for (auto qt : {trivial("Z2"), trivial("S3"), h4_r(0), h4_r(1), h4_r(2), dz2.qt}) {
    auto mon = monodromy_algebra(qt);
    auto m = mon_R(qt, mon);
    CHECK_MESSAGE(m.report.ok(), qt->label(), " ", m.report.first_failure());
    CHECK(m.rank == mon_rank_oracle(*qt));
    if (qt->triangular()) CHECK(m.rank == 1);
    CHECK(mon_R_op_dual_check(*qt).ok());
  }
  auto m = mon_R(dz2.qt, monodromy_algebra(dz2.qt));
  CHECK(m.rank == 4);
  CHECK(m.bijective);
}

TEST_CASE("trivial R: mon is evaluation at 1") {
  auto qt = trivial("S3");
  auto mon = monodromy_algebra(qt);
  auto m = mon_R(qt, mon);
  for (std::size_t p = 0; p < 6; ++p)
    CHECK(m.map.column(p) == sparse_scale(qt->H().algebra()->unit(), sparse_get(qt->H().algebra()->unit(), p)));
}

TEST_CASE("bosonization U on S3") {
  auto S3 = group_algebra("S3", s3_table(), s3_labels());
  auto cp = smash_product(adjoint_action(S3));
  auto U = bosonize_U(cp, LinearMap::identity(S3->legs(1)));
  CHECK(U.report.ok());
  // U(1 # b) = Delta(b), U(a # 1) = a (x) 1.
  for (std::size_t b = 0; b < 6; ++b) {
    CHECK(U.U.column(b) == S3->coproduct(b));
    CHECK(U.U.column(b * 6) == SparseVec{{b * 6, Scalar(1)}});
  }
}

TEST_CASE("factorization of triangular structures") {
  for (auto qt : {trivial("Z2"), h4_r(0), h4_r(1)}) {
    auto f = factorize(qt);
    CHECK_MESSAGE(f.report.ok(), qt->label(), " ", f.report.first_failure());
    CHECK_FALSE(f.pi.bijective);
    const std::size_t n = qt->H().dim();
    CHECK(f.pi.rank == n);
  }
  auto f = factorize(h4_r(0));
  CHECK(f.pi.rank == 4);
  CHECK(f.report.find("pi.left-image")->verdict == Verdict::Skip);
}

TEST_CASE("factorization of D(Z2)") {
  auto dz2 = drinfeld_double(trivial("Z2")->hopf());
  auto f = factorize(dz2.qt);
  CHECK_MESSAGE(f.report.ok(), f.report.first_failure());
  CHECK(f.pi.bijective);
  CHECK(f.pi.rank == 16);
  CHECK(f.report.passed("pi.left-image"));
  CHECK(f.report.passed("pi.right-image"));
  CHECK(f.report.find("pi.left-image")->verdict == Verdict::Pass);
}

TEST_CASE("factorization of the cyclotomic Z3") {
  auto z3 = group_algebra("Z3c", cyclic_group_table(3), cyclic_group_labels(3), FieldSpec::cyclotomic(3));
  auto qt = make_quasitriangular(z3, cyclic_zeta_r(*z3), "Rzeta");
  auto f = factorize(qt);
  CHECK_MESSAGE(f.report.ok(), f.report.first_failure());
  CHECK(f.pi.bijective);
}
