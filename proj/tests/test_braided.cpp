#include "doctest.h"
#include "hopfmon/braided.hpp"
#include "hopfmon/error.hpp"
#include "oracle.hpp"

using namespace hopfmon;

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat two_leg(const SparseVec& v, std::size_t n) {
  Mat m(n, std::vector<Scalar>(n));
  for (const auto& [ij, c] : v) m[ij / n][ij % n] = c;
  return m;
}

// e_a e_b e_c coefficient on e_k, by structure constants.
Scalar triple(const Algebra& A, std::size_t a, std::size_t b, std::size_t c, std::size_t k) {
  Scalar s;
  for (std::size_t m = 0; m < A.dim(); ++m) s += oracle::coeff(A, a, b, m) * oracle::coeff(A, m, c, k);
  return s;
}

// Delta_R(a) = sum x^i a1 x^j (x) S(y^j) y^i a2 by full index loops.
oracle::Dense delta_R_oracle(const HopfAlgebra& H, const TensorElement& R, std::size_t a) {
  const std::size_t n = H.dim();
  const Algebra& A = *H.algebra();
  Mat r = two_leg(R.entries(), n), d = two_leg(H.coproduct(a), n);
  oracle::Dense out = oracle::zeros({n, n});
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      if (r[i1][j1].is_zero()) continue;
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          if (r[i2][j2].is_zero()) continue;
          for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
              if (d[u][v].is_zero()) continue;
              Scalar c = r[i1][j1] * r[i2][j2] * d[u][v];
              for (std::size_t s = 0; s < n; ++s) {
                Scalar sc = H.antipode().at(s, j2);
                if (sc.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                  for (std::size_t l = 0; l < n; ++l)
                    out.v[k * n + l] += c * sc * triple(A, i1, u, i2, k) * triple(A, s, j1, v, l);
              }
            }
        }
    }
  return out;
}

std::vector<QtPtr> small_structures() {
  auto h4 = sweedler_h4();
  auto z3 = group_algebra("Z3c", cyclic_group_table(3), cyclic_group_labels(3), FieldSpec::cyclotomic(3));
  auto z2 = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
  return {make_quasitriangular(h4, sweedler_r(*h4, Scalar(0)), "R0"),
          make_quasitriangular(h4, sweedler_r(*h4, Scalar(1)), "R1"),
          make_quasitriangular(h4, sweedler_r(*h4, Scalar(2)), "R2"),
          make_quasitriangular(z3, cyclic_zeta_r(*z3), "Rzeta"),
          make_quasitriangular(z2, trivial_r(*z2), "trivial")};
}

}  // namespace

TEST_CASE("Delta_R agrees with the index-loop oracle") {
  for (const auto& qt : small_structures()) {
    LinearMap dR = delta_R(*qt);
    for (std::size_t a = 0; a < qt->H().dim(); ++a)
      CHECK_MESSAGE(oracle::same(delta_R_oracle(qt->H(), qt->R(), a), dR.image(a)), qt->label());
  }
}

TEST_CASE("Delta_R and Delta' identities") {
  for (const auto& qt : small_structures()) {
    LinearMap dR = delta_R(*qt);
    auto r1 = check_delta_R(*qt, dR);
    CHECK_MESSAGE(r1.ok(), r1.first_failure());
    auto r2 = check_delta_R_equivariance(*qt, dR);
    CHECK_MESSAGE(r2.ok(), r2.first_failure());
    auto r3 = check_delta_prime(*qt);
    CHECK_MESSAGE(r3.ok(), r3.first_failure());
  }
}

TEST_CASE("Delta' is not an algebra map for the Sweedler R1") {
  auto qt = small_structures()[1];
  auto r = check_delta_prime(*qt);
  REQUIRE(r.notes().size() == 1);
  CHECK(r.notes()[0].second.rfind("no: ", 0) == 0);
  auto triv = small_structures()[4];
  CHECK(check_delta_prime(*triv).notes()[0].second == "yes");
}

TEST_CASE("trivial R gives the dual algebra") {
  auto S3 = group_algebra("S3", s3_table(), s3_labels());
  auto qt = make_quasitriangular(S3, trivial_r(*S3), "trivial");
  auto mon = monodromy_algebra(qt);
  auto d = dual(*S3);
  CHECK(mon.algebra->products() == d->algebra()->products());
  CHECK(mon.algebra->unit() == d->algebra()->unit());
}

TEST_CASE("monodromy algebras and coadjoint actions") {
  for (const auto& qt : small_structures()) {
    for (auto ch : {Chirality::Left, Chirality::Right}) {
      auto mon = monodromy_algebra(qt, ch);
      auto ax = check_algebra_axioms(*mon.algebra);
      CHECK_MESSAGE(ax.ok(), ax.first_failure());
      auto act = check_module_action(mon.action);
      CHECK_MESSAGE(act.ok(), qt->label(), " ", act.first_failure());
      auto rel = check_monodromy_relation(*mon.qt, mon.coproduct, mon.generating_matrix());
      CHECK_MESSAGE(rel.ok(), rel.first_failure());
    }
  }
}

TEST_CASE("coadjoint action agrees with the pairing oracle") {
  auto qt = small_structures()[2];
  const HopfAlgebra& H = qt->H();
  const Algebra& A = *H.algebra();
  const std::size_t n = H.dim();
  auto mon = monodromy_algebra(qt);
  for (std::size_t p = 0; p < n; ++p) {
    Mat d = two_leg(H.coproduct(p), n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < n; ++b) {
        // <e_p > e^j | e_b> = e_j coefficient of S(p1) e_b p2.
        Scalar expect;
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            for (std::size_t s = 0; s < n; ++s)
              expect += d[u][v] * H.antipode().at(s, u) * triple(A, s, b, v, j);
        CHECK(mon.action.act.at(b, p * n + j) == expect);
      }
  }
}

TEST_CASE("right coadjoint action is the left one for the co-opposite") {
  auto qt = small_structures()[1];
  auto mon_r = monodromy_algebra(qt, Chirality::Right);
  auto direct = right_coadjoint_action(qt->hopf(), mon_r.algebra);
  for (std::size_t c = 0; c < direct.act.cols(); ++c) CHECK(direct.act.column(c) == mon_r.action.act.column(c));
}

TEST_CASE("adjoint and trivial actions") {
  auto h4 = sweedler_h4();
  auto ad = check_module_action(adjoint_action(h4));
  CHECK_MESSAGE(ad.ok(), ad.first_failure());
  CHECK(check_module_action(trivial_action(h4, h4->algebra())).ok());
}

TEST_CASE("wrong generating matrix fails both relation forms") {
  auto qt = small_structures()[1];
  auto mon = monodromy_algebra(qt);
  // E read in the ordinary dual algebra, where the product differs.
  auto d = dual(qt->H());
  auto E = canonical_element(qt->H(), d->algebra());
  auto rel = check_monodromy_relation(*qt, mon.coproduct, E);
  CHECK_FALSE(rel.passed("braided-form"));
  CHECK_FALSE(rel.passed("Delta_R-form"));
}
