#include "purecoeffs/poly.hpp"

#include <algorithm>
#include <sstream>

#include "purecoeffs/error.hpp"

namespace purecoeffs {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { strip(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::one_minus_t_power(unsigned s) {
  std::vector<Rational> v(s + 1);
  for (unsigned k = 0; k <= s; ++k) {
    v[k] = Rational::binomial(s, k);
    if (k % 2 == 1) v[k] = -v[k];
  }
  return Poly(std::move(v));
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Poly::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly poly_add(const Poly& p, const Poly& q) {
  std::vector<Rational> v(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(k) + q.coeff(k);
  return Poly(std::move(v));
}

Poly poly_sub(const Poly& p, const Poly& q) { return poly_add(p, poly_scale(Rational(-1), q)); }

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rational> v(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t a = 0; a < p.coeffs().size(); ++a)
    for (std::size_t b = 0; b < q.coeffs().size(); ++b) v[a + b] += p.coeffs()[a] * q.coeffs()[b];
  return Poly(std::move(v));
}

Poly poly_scale(const Rational& c, const Poly& p) {
  std::vector<Rational> v = p.coeffs();
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly derivative(const Poly& p, unsigned order) {
  if (order == 0) return p;
  const auto& c = p.coeffs();
  if (c.size() <= order) return Poly();
  std::vector<Rational> v(c.size() - order);
  for (std::size_t k = order; k < c.size(); ++k) {
    // d^order/dt^order t^k = k!/(k-order)! t^(k-order)
    Rational falling(1);
    for (std::size_t r = 0; r < order; ++r) falling *= Rational(static_cast<std::int64_t>(k - r));
    v[k - order] = falling * c[k];
  }
  return Poly(std::move(v));
}

Rational eval_at(const Poly& p, const Rational& x) {
  Rational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly divide_by_one_minus_t_power(const Poly& p, unsigned s) {
  std::vector<Rational> cur = p.coeffs();
  for (unsigned step = 0; step < s; ++step) {
    if (cur.empty()) return Poly();
    // p = q (1 - t)  <=>  q_k = p_0 + ... + p_k, with p(1) = 0.
    std::vector<Rational> q(cur.size() - 1);
    Rational running;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      running += cur[k];
      q[k] = running;
    }
    running += cur.back();
    if (!running.is_zero())
      throw Error(ErrorCode::NotDivisible,
                  "polynomial is not divisible by (1 - t)^" + std::to_string(s) +
                      " (root t = 1 has multiplicity " + std::to_string(step) + ")");
    cur = std::move(q);
  }
  return Poly(std::move(cur));
}

std::vector<Rational> series_expand(const Poly& num, unsigned denom_power, unsigned order) {
  std::vector<Rational> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = num.coeff(k);
  for (unsigned pass = 0; pass < denom_power; ++pass)
    for (std::size_t k = 1; k <= order; ++k) out[k] += out[k - 1];
  return out;
}

Poly binomial_basis_poly(unsigned k) {
  // prod_{r=1..k} (x + r) / k!
  Poly acc = Poly::constant(Rational(1));
  for (unsigned r = 1; r <= k; ++r) acc = acc * Poly{Rational(r), Rational(1)};
  return poly_scale(Rational(1) / Rational::factorial(k), acc);
}

Poly from_binomial_basis(std::span<const Rational> e, unsigned d) {
  if (e.size() != d + 1)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(d + 1) +
                                                " binomial coefficients, got " +
                                                std::to_string(e.size()));
  Poly acc;
  for (unsigned i = 0; i <= d; ++i) {
    const Rational c = i % 2 == 0 ? e[i] : -e[i];
    acc = acc + poly_scale(c, binomial_basis_poly(d - i));
  }
  return acc;
}

std::vector<Rational> to_binomial_basis(const Poly& p, unsigned d) {
  if (p.degree() > static_cast<int>(d))
    throw Error(ErrorCode::DegreeTooHigh, "degree " + std::to_string(p.degree()) +
                                              " exceeds binomial basis dimension " +
                                              std::to_string(d));
  std::vector<Rational> e(d + 1);
  Poly rest = p;
  // C(x+k, k) has leading coefficient 1/k!; peel from the top.
  for (int k = static_cast<int>(d); k >= 0; --k) {
    const auto ku = static_cast<unsigned>(k);
    const Rational c = rest.coeff(ku) * Rational::factorial(ku);
    rest = rest - poly_scale(c, binomial_basis_poly(ku));
    const unsigned i = d - ku;
    e[i] = i % 2 == 0 ? c : -c;
  }
  if (!rest.is_zero()) throw Error(ErrorCode::Internal, "binomial basis conversion left a remainder");
  return e;
}

Poly substitute_shift(const Poly& p, std::int64_t a) {
  // Horner in the shifted variable: p(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) ...)
  const Poly xa{Rational(a), Rational(1)};
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xa + Poly::constant(*it);
  return acc;
}

}  // namespace purecoeffs
