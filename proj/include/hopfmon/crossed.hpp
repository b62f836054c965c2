#pragma once

#include <optional>
#include <string>

#include "hopfmon/braided.hpp"

namespace hopfmon {

// A # H with (a # h)(b # k) = a (h1 > b) # h2 k; basis index a * dim H + h.
struct CrossedProduct {
  ModuleAction action;
  AlgebraPtr algebra;
  LinearMap i_A;  // a -> a # 1
  LinearMap i_H;  // h -> 1 # h
};

// Throws NotAModuleAction when the action fails verification.  With verify
// set, associativity on all basis triples and multiplicativity of both
// embeddings are checked (InvariantViolation otherwise).
CrossedProduct smash_product(const ModuleAction& action, const std::string& name = {}, bool verify = true);

// M_R(H) = mon(H/R) # H together with the generating data.
struct GaugedMonodromy {
  QtPtr qt;  // structure of the construction; co-opposite for the right version
  MonodromyAlgebra mon;
  CrossedProduct cp;
  LinearMap i_M;      // H -> M_R(H)
  LinearMap M_emb;    // mon algebra -> M_R(H)
  TensorElement M;    // sum e_nu (x) M(e^nu)
  TensorElement R_op; // (id (x) i_M)(R_op)

  const AlgebraPtr& algebra() const { return cp.algebra; }
};

GaugedMonodromy gauged_monodromy(const QtPtr& qt, Chirality chirality = Chirality::Left, bool verify = true);

struct Extension {
  Report report;
  std::optional<LinearMap> map;  // set when every condition holds
};

// Conditions for M in H (x) A and an algebra map f: H -> A to define
// f_M(phi # a) = (phi (x) id)(M) f(a) on M_R(H): the monodromy relation,
// (eps (x) id)(M) = 1 and [a1 (x) f(a2)] M = M [a1 (x) f(a2)].  f and M may be
// typed on H or on the leg of g.qt with the same dimension.  Throws
// BadExtension when f is not an algebra map.
Extension check_monodromy_extension(const GaugedMonodromy& g, const LinearMap& f, const TensorElement& M,
                         bool verify_homomorphism = true);

// (id (x) f)(x), f acting on the second leg.
TensorElement on_target(const TensorElement& x, const LinearMap& f);

struct MonodromyInverse {
  TensorElement D_A;      // (id (x) f)(R_op^-1) M
  TensorElement inverse;  // (S (x) id)(D_A) (id (x) f)(R_op^-1)
  Report report;
};

// Throws NotApplicable unless (qt, f, M) satisfies the extension conditions.
MonodromyInverse left_monodromy_inverse(const QtPtr& qt, const LinearMap& f, const TensorElement& M);

struct MonodromyPair {
  TensorElement left;
  TensorElement right;
  Report report;
};

// M^r = (id (x) f)(R) M^-1 (id (x) f)(R_op) with its relations, the commutation
// of left and right images and the right extension on co-opposite data.
// Throws InvariantViolation if any relation fails.
MonodromyPair right_monodromy(const QtPtr& qt, const LinearMap& f, const TensorElement& M_left);

// Checks the right-monodromy relations for a given pair without building M^r.
Report check_monodromy_pair(const Quasitriangular& qt, const LinearMap& f, const TensorElement& left,
                            const TensorElement& right);

}  // namespace hopfmon
