#include "purecoeffs/rational.hpp"

#include <cctype>
#include <ostream>

#include "purecoeffs/error.hpp"

namespace purecoeffs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::ZeroBetaZero: return "ZeroBetaZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::InvalidCodim: return "InvalidCodim";
    case ErrorCode::NonzeroD0: return "NonzeroD0";
    case ErrorCode::NonzeroMinDegree: return "NonzeroMinDegree";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(std::int64_t n, std::int64_t k) {
  // C(n, k) = 0 outside 0 <= k <= n for the nonnegative n used here; negative
  // n follows the falling-product extension.
  if (k < 0) return Rational(0);
  if (n >= 0 && k > n) return Rational(0);
  Rational result(1);
  for (std::int64_t r = 1; r <= k; ++r) result = result * Rational(n - k + r) / Rational(r);
  return result;
}

Rational Rational::power(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

bool Rational::fits_int64() const {
  return is_integer() && value_.get_num().fits_slong_p();
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw Error(ErrorCode::InvalidArgument, str() + " is not a 64-bit integer");
  return value_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace purecoeffs
