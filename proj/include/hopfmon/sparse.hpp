#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfmon/scalar.hpp"

namespace hopfmon {

using Index = std::uint64_t;

// Sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<Index, Scalar>>;

// Collects (index, value) terms and hands back their canonical sum.
class Accumulator {
 public:
  Accumulator() = default;

  void add(Index index, const Scalar& value);
  void add(Index index, Scalar&& value);
  void add_scaled(const SparseVec& v, const Scalar& factor);
  void reserve(std::size_t n) { terms_.reserve(n); }
  SparseVec take();

 private:
  std::vector<std::pair<Index, Scalar>> terms_;
};

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_sub(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Scalar& s);
const Scalar& sparse_get(const SparseVec& v, Index i);
SparseVec sparse_unit(Index i);

}  // namespace hopfmon
