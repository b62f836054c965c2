#include "hopfmon/rational.hpp"

#include <cctype>
#include <limits>

#include "hopfmon/error.hpp"

namespace hopfmon {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? 0 - std::uint64_t(a) : std::uint64_t(a);
  std::uint64_t y = b < 0 ? 0 - std::uint64_t(b) : std::uint64_t(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return std::int64_t(x);
}

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpq_class to_mpq128(i128 v) {
  // GMP has no 128-bit setter; go through two 64-bit halves.
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi = static_cast<unsigned long>(std::uint64_t(u >> 64));
  mpz_class lo = static_cast<unsigned long>(std::uint64_t(u));
  mpz_class z = (hi << 64) + lo;
  if (neg) z = -z;
  return mpq_class(z);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  assign(i128(num), i128(den));
}

Rational::Rational(const mpq_class& value) { assign(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

void Rational::assign(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(value);
    big_->canonicalize();
    num_ = 0;
    den_ = 1;
  }
}

void Rational::assign(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(uabs(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  if (fits(num) && fits(den)) {
    num_ = std::int64_t(num);
    den_ = std::int64_t(den);
    big_.reset();
    return;
  }
  mpq_class q = to_mpq128(num) / to_mpq128(den);
  assign(q);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> mpz_class {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw Error(ErrorCode::MalformedPresentation, "bad rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error(ErrorCode::MalformedPresentation, "bad rational '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational '" + std::string(text) + "' has zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) {
    r.assign(mpq_class(-to_mpq()));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out;
      if (!__builtin_add_overflow(num_, rhs.num_, &out)) {
        num_ = out;
        return *this;
      }
    }
    assign(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    return *this;
  }
  assign(mpq_class(to_mpq() + rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out;
      if (!__builtin_sub_overflow(num_, rhs.num_, &out)) {
        num_ = out;
        return *this;
      }
    }
    assign(i128(num_) * rhs.den_ - i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    return *this;
  }
  assign(mpq_class(to_mpq() - rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    // Cross-cancel first so the common small case never needs a gcd on i128.
    std::int64_t g1 = gcd64(num_, rhs.den_);
    std::int64_t g2 = gcd64(rhs.num_, den_);
    i128 n = i128(num_ / g1) * (rhs.num_ / g2);
    i128 d = i128(den_ / g2) * (rhs.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      return *this;
    }
    assign(n, d);
    return *this;
  }
  assign(mpq_class(to_mpq() * rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= rhs.inverse();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Rational r;
  if (big_) {
    r.assign(mpq_class(1 / *big_));
  } else {
    r.assign(i128(den_), i128(num_));
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical form guarantees a big value never equals an inline one.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hopfmon
