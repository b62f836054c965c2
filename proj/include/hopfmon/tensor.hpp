#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfmon/algebra.hpp"

namespace hopfmon {

// Ordered legs of a tensor product space.  Legs compare by algebra name and
// dimension, so two handles to the same named algebra are interchangeable.
using LegSignature = std::vector<AlgebraPtr>;

bool same_leg(const AlgebraPtr& a, const AlgebraPtr& b);
bool same_signature(const LegSignature& a, const LegSignature& b);
Index total_dim(const LegSignature& legs);
std::string signature_name(const LegSignature& legs);

// Element of a tensor product of leg spaces.  Entries are keyed by the
// row-major flattening of the multi-index in leg order, so a two-leg element
// of H (x) H and the same coefficients on the flattened algebra H (x)_alg H
// share indices.
class TensorElement {
 public:
  TensorElement() = default;  // the scalar 0 on no legs
  explicit TensorElement(LegSignature legs, SparseVec entries = {});

  static TensorElement zero(LegSignature legs) { return TensorElement(std::move(legs)); }
  static TensorElement unit(LegSignature legs);
  static TensorElement basis(LegSignature legs, const std::vector<std::size_t>& index, Scalar coeff = Scalar(1));
  static TensorElement scalar(Scalar value);
  static TensorElement vector(AlgebraPtr space, SparseVec v);

  const LegSignature& legs() const { return legs_; }
  const AlgebraPtr& leg(std::size_t i) const { return legs_.at(i); }
  std::size_t rank() const { return legs_.size(); }
  Index total_dim() const { return hopfmon::total_dim(legs_); }
  const SparseVec& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  std::vector<std::size_t> decode(Index flat) const;
  Index encode(const std::vector<std::size_t>& index) const;
  const Scalar& coefficient(const std::vector<std::size_t>& index) const;
  // Value of a rank-0 tensor.
  Scalar value() const;

  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  TensorElement& operator*=(const Scalar& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& s) { return a *= s; }
  friend TensorElement operator*(const Scalar& s, TensorElement a) { return a *= s; }
  // Product in the tensor product algebra of the legs.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  LegSignature legs_;
  SparseVec entries_;
};

// Linear map between tensor product spaces, stored by columns.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(LegSignature domain, LegSignature codomain);
  LinearMap(LegSignature domain, LegSignature codomain, std::vector<SparseVec> columns);

  static LinearMap identity(LegSignature legs);
  // Builds column j from image(j) for every flat domain index j.
  static LinearMap from_images(LegSignature domain, LegSignature codomain,
                               const std::function<TensorElement(Index)>& image);

  const LegSignature& domain() const { return domain_; }
  const LegSignature& codomain() const { return codomain_; }
  Index rows() const { return total_dim(codomain_); }
  Index cols() const { return columns_.size(); }
  const SparseVec& column(Index j) const { return columns_.at(j); }
  TensorElement image(Index j) const { return TensorElement(codomain_, columns_.at(j)); }
  const Scalar& at(Index row, Index col) const { return sparse_get(columns_.at(col), row); }

  TensorElement apply(const TensorElement& t) const;
  // (*this) o inner.
  LinearMap after(const LinearMap& inner) const;
  // Acts on concatenated legs: (this (x) other)(a (x) b) = this(a) (x) other(b).
  LinearMap kron(const LinearMap& other) const;
  LinearMap transpose(LegSignature domain, LegSignature codomain) const;
  LinearMap retyped(LegSignature domain, LegSignature codomain) const;
  std::size_t rank() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  LegSignature domain_;
  LegSignature codomain_;
  std::vector<SparseVec> columns_;
};

// Places t's legs at placement[k] in target and pads the remaining legs with
// their units.  Permuted placements realize flips: R^{21} is R placed at
// (1, 0).
TensorElement embed_legs(const TensorElement& t, const std::vector<std::size_t>& placement,
                         const LegSignature& target);

// Result leg k is t's leg order[k].
TensorElement permute_legs(const TensorElement& t, const std::vector<std::size_t>& order);

TensorElement outer(const TensorElement& a, const TensorElement& b);

// Two-sided inverse in the tensor product algebra, by solving the
// left-regular system and checking the product on both sides.
TensorElement tensor_invert(const TensorElement& t);

// Replaces legs [first, first + f.domain().size()) by f's codomain legs.
TensorElement apply_map(const TensorElement& t, std::size_t first, const LinearMap& f);

// Output leg k is the ordered product of t's legs groups[k]; every leg of t
// must appear in exactly one group and a group's legs must share an algebra.
TensorElement multiply_legs(const TensorElement& t, const std::vector<std::vector<std::size_t>>& groups);

// Contracts leg pairs (leg of a, leg of phi) through the dual-basis pairing.
// Unpaired legs of a come first, then unpaired legs of phi.
TensorElement pair(const TensorElement& a, const TensorElement& phi,
                   const std::vector<std::pair<std::size_t, std::size_t>>& matching);

// (e^index on leg) applied to t; the leg disappears.
TensorElement slice(const TensorElement& t, std::size_t leg, std::size_t index);

// Same coefficients viewed on legs of identical dimensions.
TensorElement retype(const TensorElement& t, LegSignature legs);

// Describes the first flat index where a and b differ, with both values;
// empty when equal.
std::string first_difference(const TensorElement& a, const TensorElement& b);

// Inverse of a square map, or nullopt when singular.
std::optional<LinearMap> invert_map(const LinearMap& f);

// Basis multiplicativity f(e_i e_j) = f(e_i) f(e_j) over a single-leg domain,
// plus unitality.  Returns the first failure, empty on success.
std::string algebra_map_failure(const LinearMap& f);

}  // namespace hopfmon
