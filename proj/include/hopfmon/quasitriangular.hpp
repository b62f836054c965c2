#pragma once

#include <memory>
#include <string>

#include "hopfmon/hopf.hpp"

namespace hopfmon {

// A validated R-matrix R = sum x^i (x) y^i in H (x) H with cached inverses.
class Quasitriangular {
 public:
  const HopfPtr& hopf() const { return hopf_; }
  const HopfAlgebra& H() const { return *hopf_; }
  const std::string& r_name() const { return r_name_; }
  const TensorElement& R() const { return R_; }
  const TensorElement& R_inv() const { return R_inv_; }
  const TensorElement& R_op() const { return R_op_; }
  const TensorElement& R_op_inv() const { return R_op_inv_; }
  bool triangular() const { return triangular_; }
  std::string label() const { return hopf_->name() + "/" + r_name_; }

  LegSignature legs(std::size_t n) const { return hopf_->legs(n); }
  // R placed at legs (i, j) of H^(x)n; lower-index notation R_ij.
  TensorElement R_at(std::size_t i, std::size_t j, std::size_t n) const;
  TensorElement R_inv_at(std::size_t i, std::size_t j, std::size_t n) const;

 private:
  friend std::shared_ptr<const Quasitriangular> make_quasitriangular(HopfPtr, TensorElement, std::string);
  Quasitriangular() = default;

  HopfPtr hopf_;
  std::string r_name_;
  TensorElement R_, R_inv_, R_op_, R_op_inv_;
  bool triangular_ = false;
};

using QtPtr = std::shared_ptr<const Quasitriangular>;

// The three defining relations, counit normalization and triangularity.
Report check_quasitriangular(const HopfAlgebra& H, const TensorElement& R);

// Throws NotQuasitriangular with the failing relation.
QtPtr make_quasitriangular(HopfPtr H, TensorElement R, std::string r_name);

// R^12 (Delta (x) id)(R) = R^23 (id (x) Delta)(R).
Report check_cocycle_property(const Quasitriangular& qt);

// Antipode identities, the two contraction identities and Yang-Baxter.
Report derived_identities(const Quasitriangular& qt);

// (R_op for the co-opposite Hopf algebra), validated.
QtPtr co_opposite_structure(const Quasitriangular& qt);

TensorElement trivial_r(const HopfAlgebra& H);
// R_lambda on the Sweedler algebra.
TensorElement sweedler_r(const HopfAlgebra& h4, const Scalar& lambda);
// (1/n) sum_{a,b} zeta^{ab} g^a (x) g^b on Q(zeta_n)[Z_n].
TensorElement cyclic_zeta_r(const HopfAlgebra& zn);

}  // namespace hopfmon
