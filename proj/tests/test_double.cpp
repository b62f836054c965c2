#include "doctest.h"
#include "hopfmon/double.hpp"
#include "hopfmon/error.hpp"
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

// Coefficient of e_t in e_i e_j e_k.
Scalar triple(const Algebra& A, std::size_t i, std::size_t j, std::size_t k, std::size_t t) {
  Scalar s;
  for (std::size_t m = 0; m < A.dim(); ++m) s += oracle::coeff(A, i, j, m) * oracle::coeff(A, m, k, t);
  return s;
}

// (e^p # e_q)(e^r # e_s) from the defining formula by full loops: the dual
// triple coproduct of e^r is read off the triple products of H, the triple
// coproduct of e_q by applying the coproduct twice.
std::vector<Scalar> double_product_oracle(const HopfAlgebra& H, std::size_t p, std::size_t q, std::size_t r,
                                          std::size_t s) {
  const std::size_t n = H.dim();
  const Algebra& A = *H.algebra();
  std::vector<Scalar> d3(n * n * n);
  for (const auto& [uv, c] : H.coproduct(q))
    for (const auto& [vw, d] : H.coproduct(uv % n)) d3[(uv / n) * n * n + vw] += c * d;
  const LinearMap& sinv = H.antipode_inverse();
  std::vector<Scalar> out(n * n);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t i3 = 0; i3 < n; ++i3) {
        Scalar psi = triple(A, i1, i2, i3, r);
        if (psi.is_zero()) continue;
        for (std::size_t j1 = 0; j1 < n; ++j1)
          for (std::size_t j2 = 0; j2 < n; ++j2)
            for (std::size_t j3 = 0; j3 < n; ++j3) {
              Scalar a = d3[j1 * n * n + j2 * n + j3];
              if (a.is_zero() || j1 != i3) continue;
              Scalar c = psi * a * sinv.at(i1, j3);
              if (c.is_zero()) continue;
              // e^p e^{i2} is dual to the coproduct; e_{j2} e_s in H.
              for (std::size_t x = 0; x < n; ++x) {
                Scalar dp;
                for (const auto& [uv, e] : H.coproduct(x))
                  if (uv == p * n + i2) dp += e;
                if (dp.is_zero()) continue;
                for (std::size_t y = 0; y < n; ++y) out[x * n + y] += c * dp * oracle::coeff(A, j2, s, y);
              }
            }
      }
  return out;
}

}  // namespace

TEST_CASE("double product agrees with the index-loop oracle") {
  for (auto H : {sweedler_h4(), group_algebra("S3", s3_table(), s3_labels())}) {
    auto dd = drinfeld_double(H, false);
    const std::size_t n = H->dim(), N = n * n;
    const Algebra& D = *dd.D->algebra();
    std::size_t step = n == 4 ? 1 : 5;
    for (std::size_t x = 0; x < N; x += step)
      for (std::size_t y = 0; y < N; y += step) {
        auto expect = double_product_oracle(*H, x / n, x % n, y / n, y % n);
        std::vector<Scalar> got(N);
        for (const auto& [k, c] : D.product(x, y)) got[k] = c;
        CHECK(got == expect);
      }
  }
}

TEST_CASE("D(Z2)") {
  auto dd = drinfeld_double(z2_trivial()->hopf());
  CHECK(dd.D->dim() == 4);
  const Algebra& D = *dd.D->algebra();
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) CHECK(D.product(x, y) == D.product(y, x));
  CHECK(dd.qt->R().nnz() == 4);
  CHECK(dd.report.ok());
  CHECK(derived_identities(*dd.qt).ok());
  CHECK(check_cocycle_property(*dd.qt).ok());
  CHECK_FALSE(dd.qt->triangular());
}

TEST_CASE("D(H4) structure") {
  auto H = sweedler_h4();
  auto dd = drinfeld_double(H);
  CHECK(dd.D->dim() == 16);
  CHECK(dd.report.passed("straightening"));
  CHECK(check_hopf_axioms(*dd.D).ok());
  for (std::size_t a = 0; a < 4; ++a) {
    TensorElement ia = dd.i_D.image(a);
    CHECK(dd.D->counit_of(ia.entries()) == H->counit(a));
    CHECK(dd.D->antipode().apply(ia) == dd.i_D.apply(H->antipode().image(a)));
  }
  auto ext = check_double_extension(dd, dd.i_D, dd.DD);
  CHECK_MESSAGE(ext.report.ok(), ext.report.first_failure());
  REQUIRE(ext.map);
  CHECK(*ext.map == LinearMap::identity({dd.D->algebra()}));
  auto d = derived_identities(*dd.qt);
  CHECK_MESSAGE(d.ok(), d.first_failure());
}

TEST_CASE("trivial R: gauged monodromy algebra is the double") {
  auto qt = z2_trivial();
  auto dd = drinfeld_double(qt->hopf());
  auto g = gauged_monodromy(qt);
  CHECK(g.algebra()->products() == dd.D->algebra()->products());
  auto lam = lambda_R(qt, dd, g);
  CHECK(lam.map.retyped({g.algebra()}, {g.algebra()}) == LinearMap::identity({g.algebra()}));
}

TEST_CASE("lambda_R on H4") {
  for (int lambda : {0, 1, 2}) {
    auto qt = h4_r(lambda);
    auto dd = drinfeld_double(qt->hopf());
    auto g = gauged_monodromy(qt);
    auto lam = lambda_R(qt, dd, g);
    CHECK(lam.report.ok());
    CHECK(lam.map.rank() == 16);
    CHECK(lam.map.after(lam.inverse) == LinearMap::identity({g.algebra()}));
  }
}

TEST_CASE("M alone fails the double relation on H4/R1") {
  auto qt = h4_r(1);
  auto dd = drinfeld_double(qt->hopf());
  auto g = gauged_monodromy(qt);
  auto ext = check_double_extension(dd, g.i_M, g.M);
  CHECK_FALSE(ext.report.passed("twisted-crossed"));
  CHECK_FALSE(ext.map);
}

TEST_CASE("monodromies in the double") {
  {
    auto qt = z2_trivial();
    auto dd = drinfeld_double(qt->hopf());
    auto pair = double_monodromies(qt, dd);
    CHECK(pair.left == dd.DD);
    CHECK(pair.right == tensor_invert(dd.DD));
  }
  auto qt = h4_r(1);
  auto dd = drinfeld_double(qt->hopf());
  auto pair = double_monodromies(qt, dd);
  CHECK_MESSAGE(pair.report.ok(), pair.report.first_failure());
  CHECK(generating_matrix_inverse(qt->H(), dd.DD) == tensor_invert(dd.DD));
}
