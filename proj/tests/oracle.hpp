#pragma once

// Naive dense reference arithmetic used as an independent oracle in tests.
// Everything is computed by explicit loops over full index ranges, never via
// the sparse leg-calculus kernel.

#include <vector>

#include "hopfmon/tensor.hpp"

namespace oracle {

using hopfmon::Scalar;

struct Dense {
  std::vector<std::size_t> dims;
  std::vector<Scalar> v;

  std::size_t size() const { return v.size(); }
};

inline Dense zeros(std::vector<std::size_t> dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return {std::move(dims), std::vector<Scalar>(n)};
}

inline std::vector<std::size_t> digits(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = flat % dims[k];
    flat /= dims[k];
  }
  return out;
}

inline std::size_t flatten(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
  return f;
}

// Structure constant c[i][j][k] of e_i e_j.
inline Scalar coeff(const hopfmon::Algebra& A, std::size_t i, std::size_t j, std::size_t k) {
  return hopfmon::sparse_get(A.product(i, j), k);
}

// Product in the tensor product of the given algebras, by full loops.
inline Dense mul(const std::vector<const hopfmon::Algebra*>& algs, const Dense& a, const Dense& b) {
  Dense out = zeros(a.dims);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.v[x].is_zero()) continue;
    auto ix = digits(x, a.dims);
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b.v[y].is_zero()) continue;
      auto iy = digits(y, a.dims);
      for (std::size_t z = 0; z < out.size(); ++z) {
        auto iz = digits(z, a.dims);
        Scalar c = a.v[x] * b.v[y];
        for (std::size_t k = 0; k < algs.size() && !c.is_zero(); ++k) c *= coeff(*algs[k], ix[k], iy[k], iz[k]);
        if (!c.is_zero()) out.v[z] += c;
      }
    }
  }
  return out;
}

// Legs permuted so that output leg k is input leg order[k].
inline Dense permute(const Dense& a, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) dims[k] = a.dims[order[k]];
  Dense out = zeros(dims);
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto ix = digits(x, a.dims);
    std::vector<std::size_t> iz(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) iz[k] = ix[order[k]];
    out.v[flatten(iz, dims)] = a.v[x];
  }
  return out;
}

// Inverse of a dense square matrix by Gauss-Jordan elimination.
inline std::vector<std::vector<Scalar>> matrix_inverse(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c].is_zero()) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Scalar s = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      Scalar f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline std::size_t matrix_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Dense to_dense(const hopfmon::TensorElement& t) {
  std::vector<std::size_t> dims;
  for (const auto& l : t.legs()) dims.push_back(l->dim());
  Dense d = zeros(dims);
  for (const auto& [i, c] : t.entries()) d.v[i] = c;
  return d;
}

inline bool same(const Dense& d, const hopfmon::TensorElement& t) {
  Dense e = to_dense(t);
  return e.dims == d.dims && e.v == d.v;
}

}  // namespace oracle
