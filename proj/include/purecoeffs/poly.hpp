#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "purecoeffs/rational.hpp"

namespace purecoeffs {

/// Dense univariate polynomial over the rationals. coeffs()[k] is the
/// coefficient of t^k; trailing zeros are always stripped, so the zero
/// polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, unsigned degree);
  /// (1 - t)^s
  static Poly one_minus_t_power(unsigned s);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;

  /// Human-readable rendering in the given variable, highest power first.
  std::string str(char var = 't') const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_sub(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_scale(const Rational& c, const Poly& p);

inline Poly operator+(const Poly& p, const Poly& q) { return poly_add(p, q); }
inline Poly operator-(const Poly& p, const Poly& q) { return poly_sub(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return poly_mul(p, q); }
inline Poly operator*(const Rational& c, const Poly& p) { return poly_scale(c, p); }

/// order-th formal derivative.
Poly derivative(const Poly& p, unsigned order);

/// Horner evaluation.
Rational eval_at(const Poly& p, const Rational& x);

/// Returns q with q * (1 - t)^s == p. Throws Error(NotDivisible) when t = 1
/// is a root of p of multiplicity < s (and p != 0).
Poly divide_by_one_minus_t_power(const Poly& p, unsigned s);

/// Coefficients 0..order of the power series num(t) / (1 - t)^denom_power.
std::vector<Rational> series_expand(const Poly& num, unsigned denom_power, unsigned order);

/// C(x + k, k) as a polynomial in x.
Poly binomial_basis_poly(unsigned k);

/// sum_i (-1)^i e_i C(x + d - i, d - i), for e = (e_0, ..., e_d).
/// Throws Error(InvalidArgument) unless e has exactly d + 1 entries.
Poly from_binomial_basis(std::span<const Rational> e, unsigned d);

/// Inverse of from_binomial_basis. Throws Error(DegreeTooHigh) when deg p > d.
std::vector<Rational> to_binomial_basis(const Poly& p, unsigned d);

/// p(x + a), expanded.
Poly substitute_shift(const Poly& p, std::int64_t a);

}  // namespace purecoeffs
