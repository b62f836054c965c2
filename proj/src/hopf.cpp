#include "hopfmon/hopf.hpp"

#include <array>

#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

const std::string kDualPrefix = "δ_";

std::string dual_label(const std::string& l) {
  if (l.rfind(kDualPrefix, 0) == 0) return l.substr(kDualPrefix.size());
  return kDualPrefix + l;
}

std::vector<SparseVec> transpose_columns(const std::vector<SparseVec>& cols, std::size_t rows) {
  std::vector<SparseVec> out(rows);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) out[i].emplace_back(j, c);
  return out;
}

std::vector<SparseVec> columns_of(const LinearMap& f) {
  std::vector<SparseVec> cols(f.cols());
  for (Index j = 0; j < f.cols(); ++j) cols[j] = f.column(j);
  return cols;
}

}  // namespace

std::shared_ptr<HopfAlgebra> HopfAlgebra::assemble(AlgebraPtr algebra, std::vector<SparseVec> coproducts,
                                                   SparseVec counit, std::vector<SparseVec> antipode) {
  const std::size_t n = algebra->dim();
  if (!algebra->has_product()) throw Error(ErrorCode::MalformedPresentation, algebra->name() + ": no product");
  if (coproducts.size() != n || antipode.size() != n)
    throw Error(ErrorCode::MalformedPresentation, algebra->name() + ": structure tensors have wrong size");
  for (const auto& e : counit)
    if (e.first >= n) throw Error(ErrorCode::MalformedPresentation, algebra->name() + ": counit index out of range");
  std::shared_ptr<HopfAlgebra> h(new HopfAlgebra());
  h->algebra_ = algebra;
  LegSignature one{algebra}, two{algebra, algebra};
  try {
    h->comult_ = LinearMap(one, two, coproducts);
    h->antipode_ = LinearMap(one, one, std::move(antipode));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedPresentation, algebra->name() + ": " + e.what());
  }
  std::vector<SparseVec> eps(n);
  for (const auto& [i, c] : counit) eps[i] = {{0, c}};
  h->counit_map_ = LinearMap(one, {}, std::move(eps));
  h->coproducts_ = std::move(coproducts);
  h->counit_ = std::move(counit);
  h->antipode_inv_ = invert_map(h->antipode_);
  return h;
}

HopfPtr HopfAlgebra::create(AlgebraPtr algebra, std::vector<SparseVec> coproducts, SparseVec counit,
                            std::vector<SparseVec> antipode) {
  auto h = assemble(std::move(algebra), std::move(coproducts), std::move(counit), std::move(antipode));
  Report r = check_hopf_axioms(*h);
  if (!r.ok()) throw Error(ErrorCode::InvariantViolation, h->name() + ": " + r.first_failure());
  return h;
}

HopfPtr HopfAlgebra::unchecked(AlgebraPtr algebra, std::vector<SparseVec> coproducts, SparseVec counit,
                               std::vector<SparseVec> antipode) {
  return assemble(std::move(algebra), std::move(coproducts), std::move(counit), std::move(antipode));
}

const LinearMap& HopfAlgebra::antipode_inverse() const {
  if (!antipode_inv_) throw Error(ErrorCode::NotInvertible, name() + ": antipode is singular");
  return *antipode_inv_;
}

Scalar HopfAlgebra::counit_of(const SparseVec& v) const {
  Scalar s;
  for (const auto& [i, c] : v) s += c * counit(i);
  return s;
}

Report check_hopf_axioms(const HopfAlgebra& H) {
  Report report(H.name());
  report.merge(check_algebra_axioms(*H.algebra()));
  const std::size_t n = H.dim();
  const auto one = H.legs(1), two = H.legs(2);
  auto basis = [&](std::size_t i) { return TensorElement(one, sparse_unit(i)); };
  auto delta = [&](std::size_t i) { return TensorElement(two, H.coproduct(i)); };

  std::string fail;
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    auto d = delta(i);
    auto l = coproduct_on(H, d, 0), r = coproduct_on(H, d, 1);
    if (l != r) fail = "at " + H.label(i) + ": " + first_difference(l, r);
  }
  report.add("coassociativity", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    auto d = delta(i);
    if (counit_on(H, d, 0) != basis(i) || counit_on(H, d, 1) != basis(i)) fail = "at " + H.label(i);
  }
  report.add("counit", fail.empty(), fail);

  fail.clear();
  const auto& A = *H.algebra();
  if (TensorElement(two, H.comultiplication().apply(TensorElement(one, A.unit())).entries()) !=
      TensorElement::unit(two))
    fail = "coproduct of the unit is not 1(x)1";
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    for (std::size_t j = 0; j < n && fail.empty(); ++j) {
      auto lhs = H.comultiplication().apply(TensorElement(one, A.product(i, j)));
      auto rhs = delta(i) * delta(j);
      if (lhs != rhs) fail = "at (" + H.label(i) + ", " + H.label(j) + "): " + first_difference(lhs, rhs);
    }
  }
  report.add("comultiplicative", fail.empty(), fail);

  fail.clear();
  if (!H.counit_of(A.unit()).is_one()) fail = "counit of the unit is not 1";
  for (std::size_t i = 0; i < n && fail.empty(); ++i)
    for (std::size_t j = 0; j < n && fail.empty(); ++j)
      if (H.counit_of(A.product(i, j)) != H.counit(i) * H.counit(j))
        fail = "at (" + H.label(i) + ", " + H.label(j) + ")";
  report.add("counit-multiplicative", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    auto d = delta(i);
    auto target = TensorElement(one, sparse_scale(A.unit(), H.counit(i)));
    auto l = multiply_legs(antipode_on(H, d, 0), {{0, 1}});
    auto r = multiply_legs(antipode_on(H, d, 1), {{0, 1}});
    if (l != target) fail = "at (" + H.label(i) + "): S(a1)a2 = " + l.to_string() + ", expected " + target.to_string();
    else if (r != target)
      fail = "at (" + H.label(i) + "): a1S(a2) = " + r.to_string() + ", expected " + target.to_string();
  }
  report.add("antipode", fail.empty(), fail);

  report.add("antipode-bijective", H.antipode_invertible(), H.antipode_invertible() ? "" : "antipode is singular");

  fail.clear();
  const auto& S = H.antipode();
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    for (std::size_t j = 0; j < n && fail.empty(); ++j) {
      auto lhs = S.apply(TensorElement(one, A.product(i, j)));
      auto rhs = S.image(j) * S.image(i);
      if (lhs != rhs) fail = "at (" + H.label(i) + ", " + H.label(j) + "): " + first_difference(lhs, rhs);
    }
  }
  report.add("antipode-antimultiplicative", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    auto lhs = H.comultiplication().apply(S.image(i));
    auto rhs = permute_legs(antipode_on(H, antipode_on(H, delta(i), 0), 1), {1, 0});
    if (lhs != rhs) fail = "at " + H.label(i) + ": " + first_difference(lhs, rhs);
    else if (H.counit_of(S.column(i)) != H.counit(i))
      fail = "counit not preserved at " + H.label(i);
  }
  report.add("antipode-anticomultiplicative", fail.empty(), fail);
  return report;
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::vector<std::string> cyclic_group_labels(std::size_t n) {
  std::vector<std::string> l{"e"};
  for (std::size_t k = 1; k < n; ++k) l.push_back(k == 1 ? "g" : "g" + std::to_string(k));
  return l;
}

// Elements as permutations of {0,1,2}: e, (12), (23), (13), (123), (132).
std::vector<std::vector<std::size_t>> s3_table() {
  const std::vector<std::array<int, 3>> perm = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto find = [&](const std::array<int, 3>& p) {
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (perm[k] == p) return k;
    return perm.size();
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      // (ab)(x) = a(b(x))
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perm[a][perm[b][x]];
      t[a][b] = find(c);
    }
  return t;
}

std::vector<std::string> s3_labels() { return {"e", "t12", "t23", "t13", "c123", "c132"}; }

SpaceTag hopf_space_tag(const std::string& name) { return {name, name + "^"}; }

namespace {

std::size_t check_group(const std::vector<std::vector<std::size_t>>& t, std::size_t n_labels) {
  const std::size_t n = t.size();
  if (n == 0 || n != n_labels) throw Error(ErrorCode::MalformedPresentation, "group table and labels disagree");
  for (const auto& row : t) {
    if (row.size() != n) throw Error(ErrorCode::MalformedPresentation, "group table is not square");
    for (auto v : row)
      if (v >= n) throw Error(ErrorCode::MalformedPresentation, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw Error(ErrorCode::MalformedPresentation, "group table is not associative");
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool id = true;
    for (std::size_t b = 0; b < n; ++b) id = id && t[a][b] == b && t[b][a] == b;
    if (id) e = a;
  }
  if (e == n) throw Error(ErrorCode::MalformedPresentation, "group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has = false;
    for (std::size_t b = 0; b < n; ++b) has = has || (t[a][b] == e && t[b][a] == e);
    if (!has) throw Error(ErrorCode::MalformedPresentation, "group table lacks inverses");
  }
  return e;
}

}  // namespace

HopfPtr group_algebra(const std::string& name, const std::vector<std::vector<std::size_t>>& table,
                      const std::vector<std::string>& labels, FieldSpec field) {
  const std::size_t e = check_group(table, labels.size());
  const std::size_t n = table.size();
  std::vector<SparseVec> prods(n * n), coprods(n), anti(n);
  SparseVec counit;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      prods[a * n + b] = sparse_unit(table[a][b]);
      if (table[a][b] == e) anti[a] = sparse_unit(b);
    }
    coprods[a] = sparse_unit(a * n + a);
    counit.emplace_back(a, Scalar(1));
  }
  auto alg = std::make_shared<const Algebra>(name, field, labels, std::move(prods), sparse_unit(e), hopf_space_tag(name));
  return HopfAlgebra::create(alg, std::move(coprods), std::move(counit), std::move(anti));
}

HopfPtr function_algebra(const std::string& name, const std::vector<std::vector<std::size_t>>& table,
                         const std::vector<std::string>& labels) {
  auto d = dual(*group_algebra(name + "_group", table, labels));
  const auto& A = *d->algebra();
  auto alg = std::make_shared<const Algebra>(name, A.field(), A.labels(), A.products(), A.unit(), hopf_space_tag(name));
  std::vector<SparseVec> coprods(d->dim());
  for (std::size_t i = 0; i < d->dim(); ++i) coprods[i] = d->coproduct(i);
  return HopfAlgebra::create(alg, std::move(coprods), d->counit(), columns_of(d->antipode()));
}

HopfPtr sweedler_h4() {
  // Basis order: 1, g, x, gx.
  const Scalar one(1), m1(-1);
  std::vector<SparseVec> p(16);
  auto set = [&](std::size_t i, std::size_t j, SparseVec v) { p[i * 4 + j] = std::move(v); };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, sparse_unit(i));
    set(i, 0, sparse_unit(i));
  }
  set(1, 1, sparse_unit(0));
  set(1, 2, sparse_unit(3));
  set(1, 3, sparse_unit(2));
  set(2, 1, {{3, m1}});
  set(2, 2, {});
  set(2, 3, {});
  set(3, 1, {{2, m1}});
  set(3, 2, {});
  set(3, 3, {});
  auto alg = std::make_shared<const Algebra>("H4", FieldSpec::rationals(), std::vector<std::string>{"1", "g", "x", "gx"},
                                             std::move(p), sparse_unit(0), hopf_space_tag("H4"));
  auto idx = [](std::size_t a, std::size_t b) { return static_cast<Index>(a * 4 + b); };
  std::vector<SparseVec> cop = {
      {{idx(0, 0), one}},
      {{idx(1, 1), one}},
      {{idx(1, 2), one}, {idx(2, 0), one}},
      {{idx(0, 3), one}, {idx(3, 1), one}},
  };
  SparseVec counit = {{0, one}, {1, one}};
  std::vector<SparseVec> anti = {sparse_unit(0), sparse_unit(1), {{3, m1}}, sparse_unit(2)};
  return HopfAlgebra::create(alg, std::move(cop), std::move(counit), std::move(anti));
}

HopfPtr dual(const HopfAlgebra& H) {
  const std::size_t n = H.dim();
  const auto& A = *H.algebra();
  // (e^i e^j)(e_k) = coefficient of e_i (x) e_j in Delta(e_k).
  std::vector<SparseVec> prods(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ij, c] : H.coproduct(k)) prods[ij].emplace_back(k, c);
  SparseVec unit = H.counit();
  std::vector<SparseVec> coprods(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) coprods[k].emplace_back(i * n + j, c);
  SparseVec counit = A.unit();
  std::vector<std::string> labels;
  for (const auto& l : A.labels()) labels.push_back(dual_label(l));
  std::string name = "dual(" + H.name() + ")";
  auto alg = std::make_shared<const Algebra>(name, H.field(), std::move(labels), std::move(prods), std::move(unit),
                                             SpaceTag{A.tag().dual, A.tag().space});
  auto anti = transpose_columns(columns_of(H.antipode()), n);
  return HopfAlgebra::create(alg, std::move(coprods), std::move(counit), std::move(anti));
}

HopfPtr opposite(const HopfAlgebra& H) {
  const std::size_t n = H.dim();
  const auto& A = *H.algebra();
  std::vector<SparseVec> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods[i * n + j] = A.product(j, i);
  auto alg = std::make_shared<const Algebra>("op(" + H.name() + ")", H.field(), A.labels(), std::move(prods), A.unit(),
                                             A.tag());
  std::vector<SparseVec> coprods(n);
  for (std::size_t i = 0; i < n; ++i) coprods[i] = H.coproduct(i);
  return HopfAlgebra::create(alg, std::move(coprods), H.counit(), columns_of(H.antipode_inverse()));
}

HopfPtr co_opposite(const HopfAlgebra& H) {
  const std::size_t n = H.dim();
  const auto& A = *H.algebra();
  auto alg = std::make_shared<const Algebra>("cop(" + H.name() + ")", H.field(), A.labels(), A.products(), A.unit(),
                                             A.tag());
  std::vector<SparseVec> coprods(n);
  for (std::size_t i = 0; i < n; ++i) {
    Accumulator acc;
    for (const auto& [ab, c] : H.coproduct(i)) acc.add((ab % n) * n + ab / n, c);
    coprods[i] = acc.take();
  }
  return HopfAlgebra::create(alg, std::move(coprods), H.counit(), columns_of(H.antipode_inverse()));
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t na = a->dim(), nb = b->dim(), n = na * nb;
  LegSignature legs{a, b};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a->label(i) + "(x)" + b->label(j));
  std::vector<SparseVec> prods(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      prods[x * n + y] = outer(TensorElement({a}, a->product(x / nb, y / nb)),
                               TensorElement({b}, b->product(x % nb, y % nb)))
                             .entries();
  SparseVec unit = TensorElement::unit(legs).entries();
  std::string name = "(" + a->name() + "(x)" + b->name() + ")";
  return std::make_shared<const Algebra>(name, a->field(), std::move(labels), std::move(prods), std::move(unit),
                                         SpaceTag{name, name + "^"});
}

AlgebraPtr tensor_power(const AlgebraPtr& a, std::size_t m) {
  if (m == 0) return ground_algebra(a->field());
  AlgebraPtr out = a;
  for (std::size_t k = 1; k < m; ++k) out = tensor_algebra(out, a);
  return out;
}

HopfPtr tensor_hopf(const HopfAlgebra& H, const HopfAlgebra& K) {
  const std::size_t na = H.dim(), nb = K.dim(), n = na * nb;
  AlgebraPtr alg = tensor_algebra(H.algebra(), K.algebra());
  std::vector<SparseVec> coprods(n), anti(n);
  SparseVec counit;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      Accumulator acc;
      for (const auto& [aa, c] : H.coproduct(a))
        for (const auto& [bb, d] : K.coproduct(b))
          acc.add((aa / na * nb + bb / nb) * n + (aa % na * nb + bb % nb), c * d);
      coprods[a * nb + b] = acc.take();
      Scalar e = H.counit(a) * K.counit(b);
      if (!e.is_zero()) counit.emplace_back(a * nb + b, e);
      for (const auto& [s, c] : H.antipode().column(a))
        for (const auto& [t, d] : K.antipode().column(b)) anti[a * nb + b].emplace_back(s * nb + t, c * d);
    }
  return HopfAlgebra::create(alg, std::move(coprods), std::move(counit), std::move(anti));
}

TensorElement canonical_element(const HopfAlgebra& H, const AlgebraPtr& dual_algebra) {
  const std::size_t n = H.dim();
  if (dual_algebra->dim() != n) throw Error(ErrorCode::SignatureMismatch, "dual algebra has wrong dimension");
  SparseVec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(i * n + i, Scalar(1));
  return TensorElement({H.algebra(), dual_algebra}, std::move(v));
}

LinearMap iterated_coproduct(const HopfAlgebra& H, std::size_t m) {
  if (m == 0) return H.counit_map();
  LinearMap cur = LinearMap::identity(H.legs(1));
  for (std::size_t k = 2; k <= m; ++k) {
    const LinearMap prev = cur;
    cur = LinearMap::from_images(H.legs(1), H.legs(k),
                                 [&](Index j) { return apply_map(prev.image(j), k - 2, H.comultiplication()); });
  }
  return cur;
}

TensorElement coproduct_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg) {
  return apply_map(t, leg, H.comultiplication());
}

TensorElement antipode_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg) {
  return apply_map(t, leg, H.antipode());
}

TensorElement antipode_inverse_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg) {
  return apply_map(t, leg, H.antipode_inverse());
}

TensorElement counit_on(const HopfAlgebra& H, const TensorElement& t, std::size_t leg) {
  return apply_map(t, leg, H.counit_map());
}

Report check_generating_matrix(const HopfAlgebra& B, const TensorElement& F, const HopfAlgebra* A_hopf) {
  Report report("generating matrix in " + signature_name(F.legs()));
  if (F.rank() != 2) throw Error(ErrorCode::SignatureMismatch, "generating matrix must have two legs");
  const auto& A = F.leg(1);
  LegSignature three{F.leg(0), F.leg(0), A};
  auto lhs = embed_legs(F, {0, 2}, three) * embed_legs(F, {1, 2}, three);
  auto rhs = coproduct_on(B, F, 0);
  report.add("generating", lhs == rhs, first_difference(lhs, rhs));
  auto u = counit_on(B, F, 0);
  auto one = TensorElement::unit({A});
  report.add("unital", u == one, first_difference(u, one));
  if (A_hopf != nullptr) {
    LegSignature bAA{F.leg(0), A, A};
    auto l = coproduct_on(*A_hopf, F, 1);
    auto r = embed_legs(F, {0, 1}, bAA) * embed_legs(F, {0, 2}, bAA);
    report.add("comultiplicative", l == r, first_difference(l, r));
  }
  return report;
}

GeneratingMatrixFlags generating_matrix_flags(const Report& report) {
  return {report.passed("generating"), report.passed("unital"), report.passed("comultiplicative")};
}

LinearMap hom_from_generating_matrix(const TensorElement& F, const AlgebraPtr& domain) {
  if (F.rank() < 1 || domain->dim() != F.leg(0)->dim())
    throw Error(ErrorCode::SignatureMismatch, "domain is not dual to the first leg");
  LegSignature rest(F.legs().begin() + 1, F.legs().end());
  return LinearMap::from_images({domain}, rest, [&](Index nu) { return slice(F, 0, nu); });
}

TensorElement generating_matrix_inverse(const HopfAlgebra& B, const TensorElement& F) {
  auto G = antipode_on(B, F, 0);
  auto one = TensorElement::unit(F.legs());
  if (G * F != one || F * G != one)
    throw Error(ErrorCode::InvariantViolation, "(S (x) id)(F) is not an inverse of F");
  return G;
}

}  // namespace hopfmon
