#pragma once

#include <string>
#include <vector>

#include "hopfmon/factorization.hpp"

namespace hopfmon {

// A (x)_R B with (a (x) b)(a' (x) b') = sum a (y^i > a') (x) (x^i > b) b' and
// h > (a (x) b) = (h1 > a) (x) (h2 > b); basis index a * dim B + b.
struct BraidedTensor {
  QtPtr qt;
  AlgebraPtr algebra;
  ModuleAction action;
  LinearMap i_A;  // a -> a (x) 1
  LinearMap i_B;  // b -> 1 (x) b
  Report report;
};

// Throws NotAModuleAction when either input action fails verification, and
// InvariantViolation when verify is set and the result fails.
BraidedTensor braided_tensor(const QtPtr& qt, const ModuleAction& A, const ModuleAction& B,
                             const std::string& name = {}, bool verify = true);

// (A1 (x)_R A2) (x)_R A3 and A1 (x)_R (A2 (x)_R A3) have the same structure
// constants, unit and action.
Report check_braided_associativity(const QtPtr& qt, const ModuleAction& A1, const ModuleAction& A2,
                                   const ModuleAction& A3);

// Largest allowed dim(L_m)^2, from HOPFMON_BUDGET or 4096.
std::size_t budget_from_env();

// Throws BudgetExceeded when dim^2 exceeds the budget.
void require_budget(std::size_t dim, std::size_t budget, const std::string& what);

// L_m, the left-nested m-fold braided tensor power of the monodromy algebra,
// with M_nu = (id (x) iota_nu)(E).
struct MultiLoop {
  QtPtr qt;
  std::size_t m = 0;
  MonodromyAlgebra mon;
  AlgebraPtr algebra;
  ModuleAction action;
  std::vector<LinearMap> iota;
  std::vector<TensorElement> M;
  Report report;  // per-factor monodromy relations and exchange relations
};

MultiLoop multiloop_algebra(const QtPtr& qt, std::size_t m, std::size_t budget = budget_from_env());

// V_A(a (x)_R h) = sum a iota(y^i y^j) (x) x^i h S(x^j) from A (x)_R H (A acted
// on through iota, H by Ad) onto A (x)_alg H, and delta_A = V_A^-1 o (iota (x) id) o Delta.
struct BosonizationV {
  BraidedTensor source;
  AlgebraPtr target;
  LinearMap V;
  LinearMap V_inv;
  LinearMap Delta_A;  // H -> A (x)_alg H
  LinearMap delta_A;  // H -> A (x)_R H
  Report report;
};

// Throws NotApplicable when iota is not a unital algebra map.
BosonizationV bosonize_V(const QtPtr& qt, const AlgebraPtr& A, const LinearMap& iota);

// delta_A for A = H, iota = id, against both closed forms and against Delta_R
// of the co-opposite structure.
Report delta_A_vs_Delta_R(const QtPtr& qt);

// mon_{R,m} = V_m o mon_R^(x)m : L_m -> H^(x)m.
struct MultiLoopMonodromy {
  MultiLoop loop;
  MonodromyMap mon;
  LinearMap mon_tensor;  // L_m -> braided power of (H, Ad)
  LinearMap V_m;         // braided power -> H^(x)m
  LinearMap map;
  std::size_t rank = 0;
  bool bijective = false;
  Report report;
};

MultiLoopMonodromy mon_R_m(const QtPtr& qt, std::size_t m, std::size_t budget = budget_from_env());

// (id (x) mon_{R,m})(M_nu) = N_nu (x) 1 for every nu; with the result for m - 1
// also the restriction to L_{m-1}.
Report check_multiloop_restriction(const MultiLoopMonodromy& mm, const MultiLoopMonodromy* previous = nullptr);

// Mon_{R,m}(x # h) = mon_{R,m}(x) # h followed by U with iota = Delta^(m).
struct ExtendedMultiLoop {
  CrossedProduct source;
  CrossedProduct target;
  Bosonization U;
  LinearMap map;  // L_m # H -> H^(x)(m+1)
  std::size_t rank = 0;
  bool bijective = false;
  Report report;
};

ExtendedMultiLoop Mon_R_m(const MultiLoopMonodromy& mm);

}  // namespace hopfmon
