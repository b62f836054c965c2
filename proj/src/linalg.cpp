#include "hopfmon/linalg.hpp"

#include <algorithm>
#include <map>

namespace hopfmon {

Matrix Matrix::from_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m(r, c) = v;
  return m;
}

std::size_t rank(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Bareiss step; the division is exact.
        Scalar v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        if (!v.is_zero()) v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = Scalar();
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    Scalar inv = a(c, c).inverse();
    for (std::size_t j = c; j < n; ++j)
      if (!a(c, j).is_zero()) a(c, j) *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
      if (!b[c].is_zero()) b[i] -= f * b[c];
    }
  }
  return b;
}

std::optional<std::vector<Scalar>> solve_sparse(const std::vector<SparseVec>& columns, std::vector<Scalar> b) {
  const std::size_t n = columns.size();
  std::vector<SparseVec> rows(n);
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [r, v] : columns[c]) rows[r].emplace_back(c, v);
  // Forward elimination; unpivoted rows only ever hold columns >= c.
  std::vector<std::size_t> pivot_row(n);
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = 0; r < n; ++r)
      if (!used[r] && !rows[r].empty() && rows[r].front().first == c &&
          (best == n || rows[r].size() < rows[best].size()))
        best = r;
    if (best == n) return std::nullopt;
    used[best] = true;
    pivot_row[c] = best;
    Scalar inv = rows[best].front().second.inverse();
    rows[best] = sparse_scale(rows[best], inv);
    b[best] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (used[r] || rows[r].empty() || rows[r].front().first != c) continue;
      Scalar f = rows[r].front().second;
      rows[r] = sparse_sub(rows[r], sparse_scale(rows[best], f));
      if (!b[best].is_zero()) b[r] -= f * b[best];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t c = n; c-- > 0;) {
    std::size_t r = pivot_row[c];
    Scalar v = b[r];
    for (const auto& [j, a] : rows[r])
      if (j != c && !x[j].is_zero()) v -= a * x[j];
    x[c] = std::move(v);
  }
  return x;
}

std::optional<Matrix> inverse(Matrix a) {
  const std::size_t n = a.rows();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Scalar(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Scalar s = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= s;
      if (!inv(c, j).is_zero()) inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<SparseVec> echelon_basis(const std::vector<SparseVec>& vectors, Index) {
  // Rows keyed by pivot index, each normalized to pivot 1 and fully reduced.
  std::map<Index, SparseVec> pivots;
  auto reduce = [&](SparseVec v) {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [i, c] : v) {
        auto it = pivots.find(i);
        if (it == pivots.end()) continue;
        v = sparse_sub(v, sparse_scale(it->second, c));
        changed = true;
        break;
      }
    }
    return v;
  };
  for (const auto& vec : vectors) {
    SparseVec v = reduce(vec);
    if (v.empty()) continue;
    Scalar inv = v.front().second.inverse();
    v = sparse_scale(v, inv);
    Index p = v.front().first;
    for (auto& [k, row] : pivots) {
      const Scalar& c = sparse_get(row, p);
      if (!c.is_zero()) row = sparse_sub(row, sparse_scale(v, c));
    }
    pivots.emplace(p, std::move(v));
  }
  std::vector<SparseVec> out;
  out.reserve(pivots.size());
  for (auto& [p, row] : pivots) out.push_back(std::move(row));
  return out;
}

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, Index dim) {
  return echelon_basis(a, dim) == echelon_basis(b, dim);
}

}  // namespace hopfmon
