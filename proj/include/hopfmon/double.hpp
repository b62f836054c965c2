#pragma once

#include "hopfmon/crossed.hpp"

namespace hopfmon {

// D(H) on dual(H) (x) H, basis index phi * dim H + a, with
// (phi # a)(psi # b) = phi psi2 # a2 b <a1|psi3> <psi1|S^-1(a3)>.
struct DrinfeldDouble {
  HopfPtr H;
  HopfPtr Hdual;
  HopfPtr D;
  LinearMap i_D;    // H -> D
  LinearMap D_emb;  // dual(H) -> D
  TensorElement DD; // sum e_nu (x) D(e^nu) in H (x) D
  QtPtr qt;         // (D, R_D)
  Report report;    // construction checks
};

// Throws ConventionError if the product is not associative.  With validate
// set, the Hopf axioms of D and the quasitriangularity of R_D are checked.
DrinfeldDouble drinfeld_double(const HopfPtr& H, bool validate = true);

// D_A^13 D_A^23 = (Delta (x) id)(D_A), (eps (x) id)(D_A) = 1 and
// D_A [a1 (x) f(a2)] = [a2 (x) f(a1)] D_A; on success
// f_D(phi # a) = (phi (x) id)(D_A) f(a).  BadExtension when f is not an
// algebra map.
Extension check_double_extension(const DrinfeldDouble& dd, const LinearMap& f, const TensorElement& D_A,
                          bool verify_homomorphism = true);

struct LambdaR {
  LinearMap map;      // D(H) -> M_R(H)
  LinearMap inverse;  // M_R(H) -> D(H)
  TensorElement DD_M; // R_op^-1 M in H (x) M_R(H)
  Report report;
};

// Throws InvariantViolation when any check fails.
LambdaR lambda_R(const QtPtr& qt, const DrinfeldDouble& dd, const GaugedMonodromy& g);

// M^l = (id (x) i_D)(R_op) DD and M^r = (id (x) i_D)(R) DD^-1 in H (x) D(H).
MonodromyPair double_monodromies(const QtPtr& qt, const DrinfeldDouble& dd);

}  // namespace hopfmon
