#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfmon/tensor.hpp"

namespace hopfmon {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Finite-dimensional Hopf algebra by structure constants.  The coproduct of
// basis vector i is stored as a sparse vector over the flattened H (x) H, the
// counit as a covector, and the antipode as a linear map.
class HopfAlgebra {
 public:
  // Validated: throws InvariantViolation naming the first failing axiom.
  static HopfPtr create(AlgebraPtr algebra, std::vector<SparseVec> coproducts, SparseVec counit,
                        std::vector<SparseVec> antipode);
  // No axiom checks beyond dimensions; for deliberately broken fixtures.
  static HopfPtr unchecked(AlgebraPtr algebra, std::vector<SparseVec> coproducts, SparseVec counit,
                           std::vector<SparseVec> antipode);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::string& name() const { return algebra_->name(); }
  FieldSpec field() const { return algebra_->field(); }
  std::size_t dim() const { return algebra_->dim(); }
  const std::string& label(std::size_t i) const { return algebra_->label(i); }

  LegSignature legs(std::size_t n) const { return LegSignature(n, algebra_); }
  const SparseVec& coproduct(std::size_t i) const { return coproducts_.at(i); }
  const SparseVec& counit() const { return counit_; }
  const Scalar& counit(std::size_t i) const { return sparse_get(counit_, i); }

  const LinearMap& comultiplication() const { return comult_; }  // H -> H (x) H
  const LinearMap& counit_map() const { return counit_map_; }     // H -> k
  const LinearMap& antipode() const { return antipode_; }
  // Throws NotInvertible when the antipode is singular.
  const LinearMap& antipode_inverse() const;
  bool antipode_invertible() const { return antipode_inv_.has_value(); }

  Scalar counit_of(const SparseVec& v) const;

 private:
  HopfAlgebra() = default;
  static std::shared_ptr<HopfAlgebra> assemble(AlgebraPtr algebra, std::vector<SparseVec> coproducts,
                                               SparseVec counit, std::vector<SparseVec> antipode);

  AlgebraPtr algebra_;
  std::vector<SparseVec> coproducts_;
  SparseVec counit_;
  LinearMap comult_;
  LinearMap counit_map_;
  LinearMap antipode_;
  std::optional<LinearMap> antipode_inv_;
};

// Every Hopf axiom on all basis tuples, plus bijectivity of S and the anti-
// homomorphism properties of S.
Report check_hopf_axioms(const HopfAlgebra& H);

// Group given by its Cayley table table[a][b] = index of ab.
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
std::vector<std::vector<std::size_t>> s3_table();
std::vector<std::string> cyclic_group_labels(std::size_t n);
std::vector<std::string> s3_labels();

HopfPtr group_algebra(const std::string& name, const std::vector<std::vector<std::size_t>>& table,
                      const std::vector<std::string>& labels, FieldSpec field = FieldSpec::rationals());
HopfPtr function_algebra(const std::string& name, const std::vector<std::vector<std::size_t>>& table,
                         const std::vector<std::string>& labels);
// Basis {1, g, x, gx}.
HopfPtr sweedler_h4();

// Space tag used by builders: the space is the name, its dual is name^.
SpaceTag hopf_space_tag(const std::string& name);

HopfPtr dual(const HopfAlgebra& H);
HopfPtr opposite(const HopfAlgebra& H);
HopfPtr co_opposite(const HopfAlgebra& H);

// Tensor product algebra A (x)_alg B on the flattened space.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr tensor_power(const AlgebraPtr& a, std::size_t m);

// H (x) K on tensor_algebra with Delta(a (x) b) = (a1 (x) b1) (x) (a2 (x) b2).
HopfPtr tensor_hopf(const HopfAlgebra& H, const HopfAlgebra& K);

// E = sum_nu e_nu (x) e^nu in H (x) dual.
TensorElement canonical_element(const HopfAlgebra& H, const AlgebraPtr& dual_algebra);

// Delta^(0) = counit, Delta^(1) = id, Delta^(m+1) = (id^(m-1) (x) Delta) Delta^(m).
LinearMap iterated_coproduct(const HopfAlgebra& H, std::size_t m);

// Applies Delta to leg k of t.
TensorElement coproduct_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg);
TensorElement antipode_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg);
TensorElement antipode_inverse_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg);
TensorElement counit_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg);

// Generating matrices F in B (x) A encode maps f(phi) = (phi (x) id)(F) out of
// an algebra structure on the dual space of B.
struct GeneratingMatrixFlags {
  bool generating = false;
  bool unital = false;
  bool comultiplicative = false;
};

// Checks F^13 F^23 = (Delta (x) id)(F) and (eps (x) id)(F) = 1, and, when
// A_hopf is given, (id (x) Delta_A)(F) = F^12 F^13.
Report check_generating_matrix(const HopfAlgebra& B, const TensorElement& F, const HopfAlgebra* A_hopf = nullptr);
GeneratingMatrixFlags generating_matrix_flags(const Report& report);

// f(e^nu) = (e^nu (x) id)(F) as a map out of `domain`, whose basis is dual to
// that of F's first leg.
LinearMap hom_from_generating_matrix(const TensorElement& F, const AlgebraPtr& domain);

// (S_B (x) id)(F), verified to be a two-sided inverse.
TensorElement generating_matrix_inverse(const HopfAlgebra& B, const TensorElement& F);

}  // namespace hopfmon
