#pragma once

#include <optional>
#include <vector>

#include "hopfmon/sparse.hpp"

namespace hopfmon {

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Columns given as sparse vectors of length rows.
  static Matrix from_columns(std::size_t rows, const std::vector<SparseVec>& columns);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(Matrix m);

// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

// Same, for a sparse n x n matrix given by columns; elimination keeps rows sparse.
std::optional<std::vector<Scalar>> solve_sparse(const std::vector<SparseVec>& columns, std::vector<Scalar> b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(Matrix a);

// Reduced row echelon basis of span(vectors) in a space of dimension dim.
// Canonical: equal spans give identical bases.
std::vector<SparseVec> echelon_basis(const std::vector<SparseVec>& vectors, Index dim);

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, Index dim);

}  // namespace hopfmon
