#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace purecoeffs {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit by intent, integers are rationals
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed text
  /// and on a zero denominator.
  static Rational parse(std::string_view text);

  static Rational factorial(unsigned n);
  static Rational binomial(std::int64_t n, std::int64_t k);
  static Rational power(const Rational& base, unsigned exponent);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  bool fits_int64() const;
  std::int64_t to_int64() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws Error(InvalidArgument) on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace purecoeffs
