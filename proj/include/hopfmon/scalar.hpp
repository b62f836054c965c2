#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfmon/rational.hpp"

namespace hopfmon {

// Base field: the rationals or a cyclotomic extension Q(zeta_n).  Orders 1
// and 2 both describe Q itself and are normalized to order 1.
class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec cyclotomic(std::uint32_t n);

  std::uint32_t order() const { return order_; }
  std::size_t degree() const;
  bool is_rationals() const { return order_ == 1; }
  std::string to_string() const;

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.order_ == b.order_; }
  friend bool operator!=(FieldSpec a, FieldSpec b) { return a.order_ != b.order_; }

 private:
  std::uint32_t order_ = 1;
};

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

// Reduction data for Q(zeta_n) = Q[x] / Phi_n(x).
struct CyclotomicField {
  explicit CyclotomicField(std::uint32_t n);

  std::uint32_t order;
  std::size_t degree;
  // reduce[k - degree] holds x^k mod Phi_n for degree <= k <= 2*degree - 2.
  std::vector<std::vector<Rational>> reduce;
};

// Exact element of a FieldSpec.  A scalar without a field pointer is a plain
// rational and combines freely with any cyclotomic scalar (Q sits inside
// every Q(zeta_n)); two scalars from different cyclotomic fields do not mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value) : c0_(value) {}  // NOLINT(implicit)
  Scalar(Rational value) : c0_(std::move(value)) {}  // NOLINT(implicit)
  Scalar(std::int64_t num, std::int64_t den) : c0_(num, den) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  // zeta_n as an element of Q(zeta_n); for n in {1, 2} this is 1 or -1.
  static Scalar zeta(FieldSpec field);
  static Scalar from_coefficients(FieldSpec field, std::vector<Rational> coeffs);
  static Scalar parse(std::string_view text) { return Scalar(Rational::parse(text)); }

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  const Rational& rational_part() const { return c0_; }
  std::vector<Rational> coefficients() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  std::string to_string() const;

 private:
  void adopt_field(const Scalar& other);

  Rational c0_;
  std::vector<Rational> rest_;  // coefficients of zeta^1 .. zeta^(deg-1)
  std::shared_ptr<const CyclotomicField> field_;
};

}  // namespace hopfmon
