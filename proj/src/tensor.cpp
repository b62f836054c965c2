#include "hopfmon/tensor.hpp"

#include <algorithm>
#include <unordered_map>

#include "hopfmon/error.hpp"
#include "hopfmon/linalg.hpp"

namespace hopfmon {

bool same_leg(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->name() == b->name() && a->dim() == b->dim();
}

bool same_signature(const LegSignature& a, const LegSignature& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_leg(a[i], b[i])) return false;
  return true;
}

Index total_dim(const LegSignature& legs) {
  Index n = 1;
  for (const auto& l : legs) n *= l->dim();
  return n;
}

std::string signature_name(const LegSignature& legs) {
  if (legs.empty()) return "k";
  std::string out;
  for (const auto& l : legs) {
    if (!out.empty()) out += " (x) ";
    out += l->name();
  }
  return out;
}

namespace {

void require_algebra(const AlgebraPtr& leg) {
  if (!leg->has_product()) throw Error(ErrorCode::NotAnAlgebra, "leg " + leg->name() + " carries no product");
}

void require_signature(const LegSignature& a, const LegSignature& b, const char* what) {
  if (!same_signature(a, b))
    throw Error(ErrorCode::SignatureMismatch,
                std::string(what) + ": " + signature_name(a) + " vs " + signature_name(b));
}

std::vector<Index> strides(const LegSignature& legs) {
  std::vector<Index> s(legs.size(), 1);
  for (std::size_t k = legs.size(); k-- > 1;) s[k - 1] = s[k] * legs[k]->dim();
  return s;
}

// Expands a product of per-leg vectors into flat indices.
void expand(const std::vector<const SparseVec*>& factors, const LegSignature& legs, const Scalar& coeff,
            Accumulator& acc) {
  std::vector<std::pair<Index, Scalar>> cur{{0, coeff}}, next;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    next.clear();
    const Index d = legs[k]->dim();
    for (const auto& [idx, c] : cur)
      for (const auto& [p, v] : *factors[k]) next.emplace_back(idx * d + p, c * v);
    std::swap(cur, next);
    if (cur.empty()) return;
  }
  for (auto& [idx, c] : cur) acc.add(idx, std::move(c));
}

}  // namespace

TensorElement::TensorElement(LegSignature legs, SparseVec entries) : legs_(std::move(legs)), entries_(std::move(entries)) {
  const Index n = hopfmon::total_dim(legs_);
  for (const auto& e : entries_)
    if (e.first >= n) throw Error(ErrorCode::SignatureMismatch, "tensor entry index out of range");
}

TensorElement TensorElement::unit(LegSignature legs) {
  std::vector<const SparseVec*> units;
  for (const auto& l : legs) {
    require_algebra(l);
    units.push_back(&l->unit());
  }
  Accumulator acc;
  expand(units, legs, Scalar(1), acc);
  return TensorElement(std::move(legs), acc.take());
}

TensorElement TensorElement::basis(LegSignature legs, const std::vector<std::size_t>& index, Scalar coeff) {
  TensorElement t(std::move(legs));
  if (!coeff.is_zero()) t.entries_.emplace_back(t.encode(index), std::move(coeff));
  return t;
}

TensorElement TensorElement::scalar(Scalar value) {
  TensorElement t;
  if (!value.is_zero()) t.entries_.emplace_back(0, std::move(value));
  return t;
}

TensorElement TensorElement::vector(AlgebraPtr space, SparseVec v) { return TensorElement({std::move(space)}, std::move(v)); }

std::vector<std::size_t> TensorElement::decode(Index flat) const {
  std::vector<std::size_t> idx(legs_.size());
  for (std::size_t k = legs_.size(); k-- > 0;) {
    const Index d = legs_[k]->dim();
    idx[k] = flat % d;
    flat /= d;
  }
  return idx;
}

Index TensorElement::encode(const std::vector<std::size_t>& index) const {
  if (index.size() != legs_.size()) throw Error(ErrorCode::SignatureMismatch, "multi-index has wrong length");
  Index flat = 0;
  for (std::size_t k = 0; k < legs_.size(); ++k) {
    if (index[k] >= legs_[k]->dim()) throw Error(ErrorCode::SignatureMismatch, "multi-index out of range");
    flat = flat * legs_[k]->dim() + index[k];
  }
  return flat;
}

const Scalar& TensorElement::coefficient(const std::vector<std::size_t>& index) const {
  return sparse_get(entries_, encode(index));
}

Scalar TensorElement::value() const {
  if (!legs_.empty()) throw Error(ErrorCode::SignatureMismatch, "value() of a tensor with legs");
  return entries_.empty() ? Scalar() : entries_.front().second;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  require_signature(legs_, rhs.legs_, "tensor addition");
  entries_ = sparse_add(entries_, rhs.entries_);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  require_signature(legs_, rhs.legs_, "tensor subtraction");
  entries_ = sparse_sub(entries_, rhs.entries_);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
  entries_ = sparse_scale(entries_, s);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  require_signature(a.legs_, b.legs_, "tensor product");
  for (const auto& l : a.legs_) require_algebra(l);
  const std::size_t r = a.rank();
  std::vector<std::vector<std::size_t>> da, db;
  da.reserve(a.nnz());
  db.reserve(b.nnz());
  for (const auto& e : a.entries_) da.push_back(a.decode(e.first));
  for (const auto& e : b.entries_) db.push_back(b.decode(e.first));
  Accumulator acc;
  std::vector<const SparseVec*> factors(r);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      bool zero = false;
      for (std::size_t k = 0; k < r; ++k) {
        factors[k] = &a.legs_[k]->product(da[i][k], db[j][k]);
        if (factors[k]->empty()) {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      expand(factors, a.legs_, a.entries_[i].second * b.entries_[j].second, acc);
    }
  }
  return TensorElement(a.legs_, acc.take());
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return same_signature(a.legs_, b.legs_) && a.entries_ == b.entries_;
}

std::string TensorElement::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [flat, c] : entries_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one() || legs_.empty()) out += c.to_string();
    if (legs_.empty()) continue;
    if (!c.is_one()) out += "*";
    auto idx = decode(flat);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += "(x)";
      out += legs_[k]->label(idx[k]);
    }
  }
  return out;
}

LinearMap::LinearMap(LegSignature domain, LegSignature codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(total_dim(domain_)) {}

LinearMap::LinearMap(LegSignature domain, LegSignature codomain, std::vector<SparseVec> columns)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(std::move(columns)) {
  if (columns_.size() != total_dim(domain_))
    throw Error(ErrorCode::SignatureMismatch, "linear map has wrong number of columns");
  const Index n = total_dim(codomain_);
  for (const auto& col : columns_)
    for (const auto& e : col)
      if (e.first >= n) throw Error(ErrorCode::SignatureMismatch, "linear map row out of range");
}

LinearMap LinearMap::identity(LegSignature legs) {
  std::vector<SparseVec> cols(total_dim(legs));
  for (Index j = 0; j < cols.size(); ++j) cols[j] = sparse_unit(j);
  return LinearMap(legs, legs, std::move(cols));
}

LinearMap LinearMap::from_images(LegSignature domain, LegSignature codomain,
                                 const std::function<TensorElement(Index)>& image) {
  const Index n = total_dim(domain);
  std::vector<SparseVec> cols(n);
  for (Index j = 0; j < n; ++j) {
    TensorElement t = image(j);
    if (t.total_dim() != total_dim(codomain) || t.rank() != codomain.size())
      require_signature(t.legs(), codomain, "map image");
    cols[j] = t.entries();
  }
  return LinearMap(std::move(domain), std::move(codomain), std::move(cols));
}

TensorElement LinearMap::apply(const TensorElement& t) const {
  require_signature(t.legs(), domain_, "map argument");
  Accumulator acc;
  for (const auto& [j, c] : t.entries()) acc.add_scaled(columns_[j], c);
  return TensorElement(codomain_, acc.take());
}

LinearMap LinearMap::after(const LinearMap& inner) const {
  if (total_dim(inner.codomain_) != total_dim(domain_))
    require_signature(inner.codomain_, domain_, "map composition");
  std::vector<SparseVec> cols(inner.columns_.size());
  for (Index j = 0; j < cols.size(); ++j) {
    Accumulator acc;
    for (const auto& [i, c] : inner.columns_[j]) acc.add_scaled(columns_[i], c);
    cols[j] = acc.take();
  }
  return LinearMap(inner.domain_, codomain_, std::move(cols));
}

LinearMap LinearMap::kron(const LinearMap& other) const {
  LegSignature dom = domain_, cod = codomain_;
  dom.insert(dom.end(), other.domain_.begin(), other.domain_.end());
  cod.insert(cod.end(), other.codomain_.begin(), other.codomain_.end());
  const Index rb = other.rows();
  std::vector<SparseVec> cols;
  cols.reserve(columns_.size() * other.columns_.size());
  for (const auto& ca : columns_) {
    for (const auto& cb : other.columns_) {
      SparseVec col;
      col.reserve(ca.size() * cb.size());
      for (const auto& [p, x] : ca)
        for (const auto& [q, y] : cb) col.emplace_back(p * rb + q, x * y);
      cols.push_back(std::move(col));
    }
  }
  return LinearMap(std::move(dom), std::move(cod), std::move(cols));
}

LinearMap LinearMap::transpose(LegSignature domain, LegSignature codomain) const {
  if (total_dim(domain) != rows() || total_dim(codomain) != cols())
    throw Error(ErrorCode::SignatureMismatch, "transpose signature has wrong dimensions");
  std::vector<SparseVec> cols(rows());
  for (Index j = 0; j < columns_.size(); ++j)
    for (const auto& [i, c] : columns_[j]) cols[i].emplace_back(j, c);
  return LinearMap(std::move(domain), std::move(codomain), std::move(cols));
}

LinearMap LinearMap::retyped(LegSignature domain, LegSignature codomain) const {
  if (total_dim(domain) != cols() || total_dim(codomain) != rows())
    throw Error(ErrorCode::SignatureMismatch, "retyped signature has wrong dimensions");
  return LinearMap(std::move(domain), std::move(codomain), columns_);
}

std::size_t LinearMap::rank() const { return hopfmon::rank(Matrix::from_columns(rows(), columns_)); }

bool operator==(const LinearMap& a, const LinearMap& b) {
  return same_signature(a.domain_, b.domain_) && same_signature(a.codomain_, b.codomain_) &&
         a.columns_ == b.columns_;
}

TensorElement embed_legs(const TensorElement& t, const std::vector<std::size_t>& placement,
                         const LegSignature& target) {
  if (placement.size() != t.rank()) throw Error(ErrorCode::SignatureMismatch, "placement length differs from rank");
  std::vector<bool> used(target.size(), false);
  for (std::size_t k = 0; k < placement.size(); ++k) {
    const std::size_t p = placement[k];
    if (p >= target.size() || used[p]) throw Error(ErrorCode::SignatureMismatch, "placement is not injective");
    if (!same_leg(t.leg(k), target[p]))
      throw Error(ErrorCode::SignatureMismatch,
                  "leg " + t.leg(k)->name() + " placed on " + target[p]->name());
    used[p] = true;
  }
  const auto st = strides(target);
  // Unit padding on the unplaced legs.
  std::vector<std::pair<Index, Scalar>> pad{{0, Scalar(1)}};
  for (std::size_t p = 0; p < target.size(); ++p) {
    if (used[p]) continue;
    require_algebra(target[p]);
    std::vector<std::pair<Index, Scalar>> next;
    for (const auto& [idx, c] : pad)
      for (const auto& [u, v] : target[p]->unit()) next.emplace_back(idx + u * st[p], c * v);
    pad = std::move(next);
  }
  Accumulator acc;
  for (const auto& [flat, c] : t.entries()) {
    auto idx = t.decode(flat);
    Index base = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) base += idx[k] * st[placement[k]];
    for (const auto& [off, v] : pad) acc.add(base + off, c * v);
  }
  return TensorElement(target, acc.take());
}

TensorElement permute_legs(const TensorElement& t, const std::vector<std::size_t>& order) {
  if (order.size() != t.rank()) throw Error(ErrorCode::SignatureMismatch, "permutation length differs from rank");
  LegSignature target(order.size());
  std::vector<std::size_t> placement(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    target[k] = t.leg(order.at(k));
    placement[order[k]] = k;
  }
  return embed_legs(t, placement, target);
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
  LegSignature legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  const Index db = b.total_dim();
  SparseVec out;
  out.reserve(a.nnz() * b.nnz());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) out.emplace_back(i * db + j, x * y);
  return TensorElement(std::move(legs), std::move(out));
}

TensorElement tensor_invert(const TensorElement& t) {
  for (const auto& l : t.legs()) require_algebra(l);
  const Index n = t.total_dim();
  // Column j of the left-regular matrix is t * e_j.
  std::vector<SparseVec> cols(n);
  for (Index j = 0; j < n; ++j) cols[j] = (t * TensorElement(t.legs(), sparse_unit(j))).entries();
  TensorElement one = TensorElement::unit(t.legs());
  std::vector<Scalar> rhs(n);
  for (const auto& [i, c] : one.entries()) rhs[i] = c;
  auto sol = solve_sparse(cols, std::move(rhs));
  if (!sol) throw Error(ErrorCode::NotInvertible, "element of " + signature_name(t.legs()) + " is singular");
  SparseVec v;
  for (Index i = 0; i < n; ++i)
    if (!(*sol)[i].is_zero()) v.emplace_back(i, std::move((*sol)[i]));
  TensorElement inv(t.legs(), std::move(v));
  if (t * inv != one || inv * t != one)
    throw Error(ErrorCode::NotInvertible, "one-sided inverse only in " + signature_name(t.legs()));
  return inv;
}

TensorElement apply_map(const TensorElement& t, std::size_t first, const LinearMap& f) {
  const std::size_t k = f.domain().size();
  if (first + k > t.rank()) throw Error(ErrorCode::SignatureMismatch, "map legs exceed tensor rank");
  for (std::size_t i = 0; i < k; ++i)
    if (!same_leg(t.leg(first + i), f.domain()[i]))
      throw Error(ErrorCode::SignatureMismatch,
                  "map expects " + f.domain()[i]->name() + " on leg " + std::to_string(first + i) + ", found " +
                      t.leg(first + i)->name());
  LegSignature legs(t.legs().begin(), t.legs().begin() + first);
  legs.insert(legs.end(), f.codomain().begin(), f.codomain().end());
  legs.insert(legs.end(), t.legs().begin() + first + k, t.legs().end());
  Index suffix = 1;
  for (std::size_t i = first + k; i < t.rank(); ++i) suffix *= t.leg(i)->dim();
  const Index mid = total_dim(f.domain());
  const Index cod = f.rows();
  Accumulator acc;
  for (const auto& [flat, c] : t.entries()) {
    const Index s = flat % suffix;
    const Index m = (flat / suffix) % mid;
    const Index p = flat / (suffix * mid);
    for (const auto& [r, v] : f.column(m)) acc.add((p * cod + r) * suffix + s, c * v);
  }
  return TensorElement(std::move(legs), acc.take());
}

TensorElement multiply_legs(const TensorElement& t, const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<bool> seen(t.rank(), false);
  LegSignature legs;
  for (const auto& g : groups) {
    if (g.empty()) throw Error(ErrorCode::SignatureMismatch, "empty leg group");
    for (auto i : g) {
      if (i >= t.rank() || seen[i]) throw Error(ErrorCode::SignatureMismatch, "leg grouping is not a partition");
      seen[i] = true;
      if (!same_leg(t.leg(i), t.leg(g.front())))
        throw Error(ErrorCode::SignatureMismatch, "grouped legs carry different algebras");
    }
    if (g.size() > 1) require_algebra(t.leg(g.front()));
    legs.push_back(t.leg(g.front()));
  }
  for (bool s : seen)
    if (!s) throw Error(ErrorCode::SignatureMismatch, "leg grouping is not a partition");
  Accumulator acc;
  std::vector<SparseVec> prods(groups.size());
  std::vector<const SparseVec*> factors(groups.size());
  for (const auto& [flat, c] : t.entries()) {
    auto idx = t.decode(flat);
    bool zero = false;
    for (std::size_t g = 0; g < groups.size() && !zero; ++g) {
      const auto& alg = *legs[g];
      SparseVec p = sparse_unit(idx[groups[g][0]]);
      for (std::size_t q = 1; q < groups[g].size(); ++q) {
        const std::size_t b = idx[groups[g][q]];
        if (p.size() == 1) {
          Scalar s = p.front().second;
          p = sparse_scale(alg.product(p.front().first, b), s);
        } else {
          p = alg.multiply(p, sparse_unit(b));
        }
        if (p.empty()) break;
      }
      if (p.empty()) zero = true;
      prods[g] = std::move(p);
      factors[g] = &prods[g];
    }
    if (!zero) expand(factors, legs, c, acc);
  }
  return TensorElement(std::move(legs), acc.take());
}

TensorElement pair(const TensorElement& a, const TensorElement& phi,
                   const std::vector<std::pair<std::size_t, std::size_t>>& matching) {
  std::vector<bool> pa(a.rank(), false), pp(phi.rank(), false);
  for (const auto& [i, j] : matching) {
    if (i >= a.rank() || j >= phi.rank() || pa[i] || pp[j])
      throw Error(ErrorCode::SignatureMismatch, "invalid leg matching");
    const auto& x = a.leg(i);
    const auto& y = phi.leg(j);
    if (x->dim() != y->dim() || x->tag().space != y->tag().dual || x->tag().dual != y->tag().space)
      throw Error(ErrorCode::SignatureMismatch, x->name() + " is not paired with " + y->name());
    pa[i] = pp[j] = true;
  }
  LegSignature legs;
  std::vector<std::size_t> rest_a, rest_p;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!pa[i]) {
      rest_a.push_back(i);
      legs.push_back(a.leg(i));
    }
  for (std::size_t j = 0; j < phi.rank(); ++j)
    if (!pp[j]) {
      rest_p.push_back(j);
      legs.push_back(phi.leg(j));
    }
  Index dim_rest_p = 1;
  for (auto j : rest_p) dim_rest_p *= phi.leg(j)->dim();
  auto key_of = [&](const std::vector<std::size_t>& idx, bool first) {
    Index key = 0;
    for (const auto& m : matching) {
      const std::size_t leg = first ? m.first : m.second;
      key = key * (first ? a.leg(leg)->dim() : phi.leg(leg)->dim()) + idx[leg];
    }
    return key;
  };
  auto rest_of = [](const TensorElement& t, const std::vector<std::size_t>& idx, const std::vector<std::size_t>& rest) {
    Index r = 0;
    for (auto i : rest) r = r * t.leg(i)->dim() + idx[i];
    return r;
  };
  std::unordered_map<Index, std::vector<std::pair<Index, const Scalar*>>> by_key;
  for (const auto& [flat, c] : phi.entries()) {
    auto idx = phi.decode(flat);
    by_key[key_of(idx, false)].emplace_back(rest_of(phi, idx, rest_p), &c);
  }
  Accumulator acc;
  for (const auto& [flat, c] : a.entries()) {
    auto idx = a.decode(flat);
    auto it = by_key.find(key_of(idx, true));
    if (it == by_key.end()) continue;
    const Index ra = rest_of(a, idx, rest_a);
    for (const auto& [rp, v] : it->second) acc.add(ra * dim_rest_p + rp, c * *v);
  }
  return TensorElement(std::move(legs), acc.take());
}

TensorElement slice(const TensorElement& t, std::size_t leg, std::size_t index) {
  if (leg >= t.rank()) throw Error(ErrorCode::SignatureMismatch, "slice leg out of range");
  LegSignature legs = t.legs();
  legs.erase(legs.begin() + leg);
  Index suffix = 1;
  for (std::size_t i = leg + 1; i < t.rank(); ++i) suffix *= t.leg(i)->dim();
  const Index d = t.leg(leg)->dim();
  SparseVec out;
  for (const auto& [flat, c] : t.entries()) {
    if ((flat / suffix) % d != index) continue;
    out.emplace_back((flat / (suffix * d)) * suffix + flat % suffix, c);
  }
  return TensorElement(std::move(legs), std::move(out));
}

TensorElement retype(const TensorElement& t, LegSignature legs) {
  if (total_dim(legs) != t.total_dim())
    throw Error(ErrorCode::SignatureMismatch,
                "cannot view " + signature_name(t.legs()) + " as " + signature_name(legs));
  return TensorElement(std::move(legs), t.entries());
}

std::string algebra_map_failure(const LinearMap& f) {
  const LegSignature& dom = f.domain();
  for (const auto& l : dom) require_algebra(l);
  for (const auto& l : f.codomain()) require_algebra(l);
  if (f.apply(TensorElement::unit(dom)) != TensorElement::unit(f.codomain())) return "unit not preserved";
  const Index n = total_dim(dom);
  std::vector<TensorElement> images(n);
  for (Index i = 0; i < n; ++i) images[i] = f.image(i);
  for (Index i = 0; i < n; ++i) {
    TensorElement ei(dom, sparse_unit(i));
    for (Index j = 0; j < n; ++j) {
      TensorElement ej(dom, sparse_unit(j));
      TensorElement lhs = f.apply(ei * ej);
      TensorElement rhs = images[i] * images[j];
      if (lhs != rhs)
        return "at (" + ei.to_string() + ", " + ej.to_string() + "): " + lhs.to_string() + " != " + rhs.to_string();
    }
  }
  return {};
}

std::string first_difference(const TensorElement& a, const TensorElement& b) {
  if (!same_signature(a.legs(), b.legs()))
    return "signatures differ: " + signature_name(a.legs()) + " vs " + signature_name(b.legs());
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Index idx;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      idx = x[i].first;
    } else if (i == x.size() || y[j].first < x[i].first) {
      idx = y[j].first;
    } else {
      if (x[i].second != y[j].second) {
        idx = x[i].first;
      } else {
        ++i;
        ++j;
        continue;
      }
    }
    auto multi = a.decode(idx);
    std::string where;
    for (std::size_t k = 0; k < multi.size(); ++k) {
      if (k) where += ",";
      where += a.leg(k)->label(multi[k]);
    }
    return "entry (" + where + "): " + sparse_get(x, idx).to_string() + " vs " + sparse_get(y, idx).to_string();
  }
  return {};
}

std::optional<LinearMap> invert_map(const LinearMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  std::vector<SparseVec> cols(f.cols());
  for (Index j = 0; j < f.cols(); ++j) cols[j] = f.column(j);
  auto inv = inverse(Matrix::from_columns(f.rows(), cols));
  if (!inv) return std::nullopt;
  std::vector<SparseVec> out(f.rows());
  for (Index j = 0; j < f.rows(); ++j)
    for (Index i = 0; i < f.cols(); ++i)
      if (!(*inv)(i, j).is_zero()) out[j].emplace_back(i, (*inv)(i, j));
  return LinearMap(f.codomain(), f.domain(), std::move(out));
}

}  // namespace hopfmon
