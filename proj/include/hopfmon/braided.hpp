#pragma once

#include <string>

#include "hopfmon/quasitriangular.hpp"

namespace hopfmon {

enum class Chirality { Left, Right };

// Left action of a Hopf algebra H on an algebra A, act: H (x) A -> A.
struct ModuleAction {
  HopfPtr H;
  AlgebraPtr A;
  LinearMap act;
  std::string name;

  SparseVec apply(std::size_t h, const SparseVec& a) const;
  SparseVec apply(const SparseVec& h, const SparseVec& a) const;
};

// Unital and associative action, h > 1 = eps(h) 1, and the module-algebra
// law h > (ab) = (h1 > a)(h2 > b), all on basis tuples.
Report check_module_action(const ModuleAction& action);

// <a > phi | b> = <phi | S(a1) b a2> on an algebra whose space is dual to H.
ModuleAction coadjoint_action(const HopfPtr& H, const AlgebraPtr& on);
// <a >' phi | b> = <phi | S^-1(a2) b a1>.
ModuleAction right_coadjoint_action(const HopfPtr& H, const AlgebraPtr& on);
// (Ad a) b = a1 b S(a2) on H itself, or on A through iota: H -> A.
ModuleAction adjoint_action(const HopfPtr& H);
ModuleAction inner_action(const HopfPtr& H, const AlgebraPtr& A, const LinearMap& iota);
// h > a = eps(h) a.
ModuleAction trivial_action(const HopfPtr& H, const AlgebraPtr& A);

// Algebra on the dual space whose product is dual to a coproduct H -> H (x) H.
AlgebraPtr dual_algebra_of(const HopfAlgebra& H, const LinearMap& coproduct, const std::string& name);

// Delta_R(a) = sum (x^i (x) S(y^j) y^i) Delta(a) (x^j (x) 1).
LinearMap delta_R(const Quasitriangular& qt);
// Delta'(a) = R Delta(a).
LinearMap delta_prime(const Quasitriangular& qt);

// Coassociativity and counit of Delta_R.
Report check_delta_R(const Quasitriangular& qt, const LinearMap& dR);
// Coassociativity of Delta' and Delta'(ab) = Delta'(a) Delta(b) = Delta_op(a) Delta'(b).
Report check_delta_prime(const Quasitriangular& qt);
// Delta_R(S(a1) b a2) = [S(a1) (x) S(a3)] Delta_R(b) [a2 (x) a4].
Report check_delta_R_equivariance(const Quasitriangular& qt, const LinearMap& dR);

// The monodromy algebra with its coadjoint action.  The right version is the
// left construction on (cop(H), R_op).
struct MonodromyAlgebra {
  QtPtr qt;  // the structure the construction ran on
  Chirality chirality = Chirality::Left;
  AlgebraPtr algebra;
  LinearMap coproduct;  // Delta_R of qt
  ModuleAction action;

  // E with its second leg read in the monodromy algebra.
  TensorElement generating_matrix() const;
};

MonodromyAlgebra monodromy_algebra(const QtPtr& qt, Chirality chirality = Chirality::Left);

// Checks both M^13 R^12 M^23 = R^12 (Delta (x) id)(M) and
// M^13 M^23 = (Delta_R (x) id)(M); throws InvariantViolation when the two
// verdicts disagree.
Report check_monodromy_relation(const Quasitriangular& qt, const LinearMap& dR, const TensorElement& M);

}  // namespace hopfmon
