#include "hopfmon/sparse.hpp"

#include <algorithm>

namespace hopfmon {

void Accumulator::add(Index index, const Scalar& value) {
  if (!value.is_zero()) terms_.emplace_back(index, value);
}

void Accumulator::add(Index index, Scalar&& value) {
  if (!value.is_zero()) terms_.emplace_back(index, std::move(value));
}

void Accumulator::add_scaled(const SparseVec& v, const Scalar& factor) {
  if (factor.is_zero()) return;
  if (factor.is_one()) {
    terms_.insert(terms_.end(), v.begin(), v.end());
    return;
  }
  for (const auto& [i, c] : v) terms_.emplace_back(i, c * factor);
}

SparseVec Accumulator::take() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  std::size_t i = 0;
  while (i < terms_.size()) {
    Index idx = terms_[i].first;
    Scalar sum = std::move(terms_[i].second);
    ++i;
    while (i < terms_.size() && terms_[i].first == idx) sum += terms_[i++].second;
    if (!sum.is_zero()) out.emplace_back(idx, std::move(sum));
  }
  terms_.clear();
  return out;
}

namespace {

template <typename Op>
SparseVec merge(const SparseVec& a, const SparseVec& b, Op op) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(Scalar(), b[j].second));
      ++j;
    } else {
      Scalar s = op(a[i].second, b[j].second);
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  return merge(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

SparseVec sparse_sub(const SparseVec& a, const SparseVec& b) {
  return merge(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& s) {
  SparseVec out;
  if (s.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, c] : a) out.emplace_back(i, c * s);
  return out;
}

const Scalar& sparse_get(const SparseVec& v, Index i) {
  static const Scalar zero;
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return zero;
}

SparseVec sparse_unit(Index i) { return SparseVec{{i, Scalar(1)}}; }

}  // namespace hopfmon
