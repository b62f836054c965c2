#include "hopfmon/scalar.hpp"

#include <numeric>

#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

std::size_t euler_phi(std::uint32_t n) {
  std::size_t result = n;
  std::uint32_t m = n;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// Exact division of integer polynomials, constant term first.
std::vector<std::int64_t> poly_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    std::int64_t c = num[k] / den[dn];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

FieldSpec FieldSpec::cyclotomic(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::MalformedPresentation, "cyclotomic order must be positive");
  FieldSpec f;
  f.order_ = n;
  return f;
}

std::size_t FieldSpec::degree() const { return euler_phi(order_); }

std::string FieldSpec::to_string() const {
  if (order_ == 1) return "rationals";
  return "cyclotomic(" + std::to_string(order_) + ")";
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide(p, cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicField::CyclotomicField(std::uint32_t n) : order(n), degree(euler_phi(n)) {
  auto phi = cyclotomic_polynomial(n);
  // x^deg = -sum_{j<deg} phi_j x^j, then shift upwards.
  std::vector<Rational> cur(degree);
  for (std::size_t j = 0; j < degree; ++j) cur[j] = Rational(-phi[j]);
  for (std::size_t k = degree; k + 1 < 2 * degree; ++k) {
    reduce.push_back(cur);
    std::vector<Rational> next(degree);
    Rational top = cur[degree - 1];
    for (std::size_t j = degree - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = Rational(0);
    if (!top.is_zero()) {
      for (std::size_t j = 0; j < degree; ++j) next[j] -= top * Rational(phi[j]);
    }
    cur = std::move(next);
  }
}

Scalar Scalar::zeta(FieldSpec field) {
  if (field.degree() == 1) return Scalar(field.order() == 2 ? -1 : 1);
  std::vector<Rational> coeffs(field.degree());
  coeffs[1] = Rational(1);
  return from_coefficients(field, std::move(coeffs));
}

Scalar Scalar::from_coefficients(FieldSpec field, std::vector<Rational> coeffs) {
  Scalar s;
  std::size_t deg = field.degree();
  if (coeffs.size() != deg)
    throw Error(ErrorCode::MalformedPresentation,
                "expected " + std::to_string(deg) + " coefficients for " + field.to_string());
  s.c0_ = coeffs[0];
  if (deg > 1) {
    s.field_ = std::make_shared<const CyclotomicField>(field.order());
    s.rest_.assign(coeffs.begin() + 1, coeffs.end());
  }
  return s;
}

FieldSpec Scalar::field() const { return field_ ? FieldSpec::cyclotomic(field_->order) : FieldSpec::rationals(); }

bool Scalar::is_zero() const {
  if (!c0_.is_zero()) return false;
  for (const auto& r : rest_)
    if (!r.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const {
  if (!c0_.is_one()) return false;
  for (const auto& r : rest_)
    if (!r.is_zero()) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (const auto& r : rest_)
    if (!r.is_zero()) return false;
  return true;
}

std::vector<Rational> Scalar::coefficients() const {
  std::vector<Rational> out;
  out.push_back(c0_);
  out.insert(out.end(), rest_.begin(), rest_.end());
  return out;
}

void Scalar::adopt_field(const Scalar& other) {
  if (!other.field_) return;
  if (!field_) {
    field_ = other.field_;
    rest_.assign(field_->degree - 1, Rational(0));
    return;
  }
  if (field_->order != other.field_->order)
    throw Error(ErrorCode::FieldMismatch,
                "cyclotomic(" + std::to_string(field_->order) + ") vs cyclotomic(" +
                    std::to_string(other.field_->order) + ")");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.c0_ = -r.c0_;
  for (auto& c : r.rest_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  adopt_field(rhs);
  c0_ += rhs.c0_;
  for (std::size_t i = 0; i < rhs.rest_.size(); ++i) rest_[i] += rhs.rest_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  adopt_field(rhs);
  c0_ -= rhs.c0_;
  for (std::size_t i = 0; i < rhs.rest_.size(); ++i) rest_[i] -= rhs.rest_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!field_ && !rhs.field_) {
    c0_ *= rhs.c0_;
    return *this;
  }
  if (!rhs.field_) {
    c0_ *= rhs.c0_;
    for (auto& c : rest_) c *= rhs.c0_;
    return *this;
  }
  if (!field_) {
    Rational k = c0_;
    *this = rhs;
    c0_ *= k;
    for (auto& c : rest_) c *= k;
    return *this;
  }
  adopt_field(rhs);
  std::size_t deg = field_->degree;
  auto a = coefficients();
  auto b = rhs.coefficients();
  std::vector<Rational> prod(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b[j].is_zero()) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  for (std::size_t k = deg; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& red = field_->reduce[k - deg];
    for (std::size_t j = 0; j < deg; ++j) prod[j] += prod[k] * red[j];
  }
  c0_ = prod[0];
  for (std::size_t j = 1; j < deg; ++j) rest_[j - 1] = prod[j];
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
  if (!field_ || is_rational()) {
    Scalar r(c0_.inverse());
    if (field_) {
      r.field_ = field_;
      r.rest_.assign(field_->degree - 1, Rational(0));
    }
    return r;
  }
  // Solve (multiplication by *this) x = 1 over Q; the columns are *this * zeta^k.
  std::size_t deg = field_->degree;
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
  Scalar col = *this;
  Scalar z = zeta(FieldSpec::cyclotomic(field_->order));
  for (std::size_t k = 0; k < deg; ++k) {
    auto c = col.coefficients();
    for (std::size_t r = 0; r < deg; ++r) m[r][k] = c[r];
    col *= z;
  }
  m[0][deg] = Rational(1);
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t p = c;
    while (p < deg && m[p][c].is_zero()) ++p;
    if (p == deg) throw Error(ErrorCode::InvariantViolation, "singular multiplication matrix in cyclotomic field");
    std::swap(m[p], m[c]);
    Rational inv = m[c][c].inverse();
    for (auto& v : m[c]) v *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j <= deg; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> coeffs(deg);
  for (std::size_t r = 0; r < deg; ++r) coeffs[r] = m[r][deg];
  return from_coefficients(FieldSpec::cyclotomic(field_->order), std::move(coeffs));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ && b.field_ && a.field_->order != b.field_->order) return false;
  if (a.c0_ != b.c0_) return false;
  std::size_t n = std::max(a.rest_.size(), b.rest_.size());
  static const Rational zero;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x = i < a.rest_.size() ? a.rest_[i] : zero;
    const Rational& y = i < b.rest_.size() ? b.rest_[i] : zero;
    if (x != y) return false;
  }
  return true;
}

std::string Scalar::to_string() const {
  if (is_rational()) return c0_.to_string();
  std::string out;
  auto coeffs = coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string term = coeffs[k].to_string();
    if (k > 0) term = "(" + term + ")z" + (k > 1 ? "^" + std::to_string(k) : "");
    if (!out.empty()) out += " + ";
    out += term;
  }
  return "[" + out + "]";
}

}  // namespace hopfmon
