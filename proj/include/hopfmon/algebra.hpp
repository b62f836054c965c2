#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfmon/report.hpp"
#include "hopfmon/sparse.hpp"

namespace hopfmon {

// Identifies the underlying vector space of a leg, and the space it is in
// duality with.  H and its dual have swapped tags; the monodromy algebra on
// the dual keeps the dual's tag because only the product changes.
struct SpaceTag {
  std::string space;
  std::string dual;
};

// Finite-dimensional unital associative algebra by structure constants:
// products[i * dim + j] is e_i * e_j.  A space without products is a plain
// vector space and cannot carry an algebra leg.
class Algebra {
 public:
  Algebra(std::string name, FieldSpec field, std::vector<std::string> labels,
          std::vector<SparseVec> products, SparseVec unit, SpaceTag tag = {});

  static std::shared_ptr<const Algebra> vector_space(std::string name, FieldSpec field,
                                                     std::vector<std::string> labels, SpaceTag tag = {});

  const std::string& name() const { return name_; }
  FieldSpec field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const SpaceTag& tag() const { return tag_; }

  bool has_product() const { return !products_.empty() || labels_.empty(); }
  const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const std::vector<SparseVec>& products() const { return products_; }
  const SparseVec& unit() const { return unit_; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> products_;
  SparseVec unit_;
  SpaceTag tag_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Associativity on all basis triples and both unit laws.
Report check_algebra_axioms(const Algebra& algebra);

// The one-dimensional ground-field algebra.
AlgebraPtr ground_algebra(FieldSpec field);

std::string format_vector(const Algebra& algebra, const SparseVec& v);

}  // namespace hopfmon
