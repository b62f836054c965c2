#pragma once

#include "hopfmon/double.hpp"
#include "hopfmon/factorization.hpp"

namespace hopfmon {

// H (x) H with the coproduct twisted by T = R_23^-1.  Elements of
// (H (x) H)^(x)k are stored on legs {HH, ..., HH}; as 2k H-legs they share the
// same flat indices, so lower indices R_ij refer to those H-legs.
struct TwistedSquare {
  QtPtr qt;
  HopfPtr plain;          // Delta_HH(a (x) b) = (a1 (x) b1) (x) (a2 (x) b2)
  AlgebraPtr HH;
  TensorElement T;        // R_23^-1 in HH (x) HH
  LinearMap delta;        // Ad T o Delta_HH
  TensorElement script_R; // R_41^-1 R_42^-1 R_13 R_23
  HopfPtr hopf;           // (HH, delta) with S_T = U S_HH U^-1, U = m(id (x) S_HH)(T)
  QtPtr twisted;          // (hopf, script_R)
  Report report;
};

// Throws InvariantViolation when the cocycle identity, coassociativity, the
// quasitriangularity of script_R or the twist equivalence fails.
TwistedSquare build_twisted_square(const QtPtr& qt);

// Views an element of H^(x)2k as an element of HH^(x)k.
TensorElement as_square_legs(const TwistedSquare& sq, const TensorElement& t);

// Lambda_R = pi_R o lambda_R : D(H) -> H (x) H with its report.
struct LambdaSquare {
  LinearMap map;
  std::size_t rank = 0;
  bool bijective = false;
  Report report;
};

LambdaSquare Lambda_R(const TwistedSquare& sq, const DrinfeldDouble& dd, const Factorization& f, const LambdaR& lambda);

// The Hopf structure of D(H) moved to M_R(H), computed by conjugation with
// lambda_R and by the closed formulas, then compared and validated.
struct TransportedStructure {
  HopfPtr hopf;
  QtPtr qt;
  LinearMap coproduct_a, coproduct_b;
  LinearMap antipode_a, antipode_b;
  TensorElement R_a, R_b;
  Report report;
};

// Throws InvariantViolation when the two computations disagree.
TransportedStructure transported_structure(const DrinfeldDouble& dd, const GaugedMonodromy& g, const LambdaR& lambda);

}  // namespace hopfmon
