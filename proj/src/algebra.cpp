#include "hopfmon/algebra.hpp"

#include "hopfmon/error.hpp"

namespace hopfmon {

Algebra::Algebra(std::string name, FieldSpec field, std::vector<std::string> labels,
                 std::vector<SparseVec> products, SparseVec unit, SpaceTag tag)
    : name_(std::move(name)), field_(field), labels_(std::move(labels)), products_(std::move(products)),
      unit_(std::move(unit)), tag_(std::move(tag)) {
  const std::size_t n = labels_.size();
  if (!products_.empty() && products_.size() != n * n)
    throw Error(ErrorCode::MalformedPresentation, name_ + ": product table has wrong size");
  auto in_range = [n](const SparseVec& v) {
    for (const auto& e : v)
      if (e.first >= n) return false;
    return true;
  };
  for (const auto& p : products_)
    if (!in_range(p)) throw Error(ErrorCode::MalformedPresentation, name_ + ": product index out of range");
  if (!in_range(unit_)) throw Error(ErrorCode::MalformedPresentation, name_ + ": unit index out of range");
  if (tag_.space.empty()) tag_.space = name_;
}

AlgebraPtr Algebra::vector_space(std::string name, FieldSpec field, std::vector<std::string> labels, SpaceTag tag) {
  return std::make_shared<const Algebra>(std::move(name), field, std::move(labels), std::vector<SparseVec>{},
                                         SparseVec{}, std::move(tag));
}

SparseVec Algebra::multiply(const SparseVec& a, const SparseVec& b) const {
  if (!has_product()) throw Error(ErrorCode::NotAnAlgebra, name_ + " carries no product");
  Accumulator acc;
  const std::size_t n = dim();
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      Scalar xy = x * y;
      acc.add_scaled(products_[i * n + j], xy);
    }
  }
  return acc.take();
}

std::optional<std::size_t> Algebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string format_vector(const Algebra& algebra, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + "*";
    out += algebra.label(i);
  }
  return out;
}

Report check_algebra_axioms(const Algebra& algebra) {
  Report report(algebra.name());
  if (!algebra.has_product()) {
    report.fail("algebra", "no product");
    return report;
  }
  const std::size_t n = algebra.dim();
  bool assoc_ok = true;
  for (std::size_t i = 0; i < n && assoc_ok; ++i) {
    for (std::size_t j = 0; j < n && assoc_ok; ++j) {
      const SparseVec& ij = algebra.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec lhs = algebra.multiply(ij, sparse_unit(k));
        SparseVec rhs = algebra.multiply(sparse_unit(i), algebra.product(j, k));
        if (lhs != rhs) {
          report.fail("associativity", "at (" + algebra.label(i) + ", " + algebra.label(j) + ", " +
                                           algebra.label(k) + "): " + format_vector(algebra, lhs) + " != " +
                                           format_vector(algebra, rhs));
          assoc_ok = false;
          break;
        }
      }
    }
  }
  if (assoc_ok) report.pass("associativity");
  bool unit_ok = true;
  for (std::size_t i = 0; i < n && unit_ok; ++i) {
    SparseVec l = algebra.multiply(algebra.unit(), sparse_unit(i));
    SparseVec r = algebra.multiply(sparse_unit(i), algebra.unit());
    if (l != sparse_unit(i) || r != sparse_unit(i)) {
      report.fail("unit", "at " + algebra.label(i));
      unit_ok = false;
    }
  }
  if (unit_ok) report.pass("unit");
  return report;
}

AlgebraPtr ground_algebra(FieldSpec field) {
  return std::make_shared<const Algebra>("k", field, std::vector<std::string>{"1"},
                                         std::vector<SparseVec>{sparse_unit(0)}, sparse_unit(0), SpaceTag{"k", "k"});
}

}  // namespace hopfmon
