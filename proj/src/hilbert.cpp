#include "purecoeffs/hilbert.hpp"

#include <algorithm>
#include <string>

#include "purecoeffs/error.hpp"
#include "purecoeffs/symfun.hpp"

namespace purecoeffs {

Poly numerator_from_diagram(const BettiDiagram& D) {
  std::int64_t lo = 0, hi = 0;
  for (const auto& [idx, value] : D.entries()) {
    lo = std::min(lo, idx.j);
    hi = std::max(hi, idx.j);
  }
  if (lo < 0)
    throw Error(ErrorCode::InvalidArgument,
                "Betti numbers in negative degree; shift the diagram to start in degree >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(hi) + 1);
  for (const auto& [idx, value] : D.entries())
    c[static_cast<std::size_t>(idx.j)] += idx.i % 2 == 0 ? value : -value;
  return Poly(std::move(c));
}

HilbertData coefficients_oracle(const BettiDiagram& D) {
  const Poly p = numerator_from_diagram(D);
  HilbertData h;
  try {
    h.q_poly = divide_by_one_minus_t_power(p, static_cast<unsigned>(D.codim()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    throw Error(ErrorCode::NotDivisible, "diagram violates Herzog-Kuhl conditions for codimension " +
                                             std::to_string(D.codim()));
  }
  shifts(D);  // EmptyRow
  h.dim = D.dim();
  h.coefficients.resize(static_cast<std::size_t>(h.dim) + 1);
  for (unsigned i = 0; i <= static_cast<unsigned>(h.dim); ++i)
    h.coefficients[i] = eval_at(derivative(h.q_poly, i), Rational(1)) / Rational::factorial(i);
  h.hilbert_poly = from_binomial_basis(h.coefficients, static_cast<unsigned>(h.dim));
  return h;
}

std::vector<Rational> coefficients_from_numerator_derivatives(const BettiDiagram& D) {
  const Poly p = numerator_from_diagram(D);
  const auto s = static_cast<unsigned>(D.codim());
  std::vector<Rational> e(static_cast<std::size_t>(D.dim()) + 1);
  for (unsigned i = 0; i < e.size(); ++i) {
    Rational v = eval_at(derivative(p, s + i), Rational(1)) / Rational::factorial(s + i);
    e[i] = s % 2 == 0 ? v : -v;
  }
  return e;
}

std::vector<Rational> coefficients_pure_closed_form(const PureType& t, const Rational& beta0,
                                                    unsigned count) {
  if (t.d0() != 0)
    throw Error(ErrorCode::NonzeroD0, "closed form needs d_0 = 0, got type (" + t.str() +
                                          "); use shift_transform");
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "coefficient count must be positive");
  const auto s = static_cast<unsigned>(t.codim());
  Rational prod(1);
  for (std::int64_t d : t.tail()) prod *= Rational(d);
  std::vector<Rational> e(count);
  for (unsigned i = 0; i < count; ++i)
    e[i] = beta0 * prod / Rational::factorial(s + i) * h_sum(i, t.tail());
  return e;
}

std::vector<Rational> coefficients_linear_case(std::int64_t d, unsigned s, const Rational& beta0,
                                               unsigned count) {
  std::vector<Rational> e(count);
  const std::int64_t top = d + static_cast<std::int64_t>(s) - 1;
  for (unsigned i = 0; i < count; ++i) {
    const auto si = static_cast<std::int64_t>(s + i);
    // C(s+i-1, i) with s = i = 0 is C(-1, 0) = 1.
    e[i] = beta0 * Rational::binomial(top, si) * Rational::binomial(si - 1, i);
  }
  return e;
}

std::vector<Rational> shift_transform(std::span<const Rational> e_shifted, unsigned dim,
                                      std::int64_t d0) {
  const Poly shifted = from_binomial_basis(e_shifted, dim);
  return to_binomial_basis(substitute_shift(shifted, -d0), dim);
}

std::vector<Rational> hilbert_values(const HilbertData& H, std::int64_t from, std::int64_t to) {
  if (from > to) throw Error(ErrorCode::InvalidArgument, "empty evaluation range");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t x = from; x <= to; ++x) out.push_back(eval_at(H.hilbert_poly, Rational(x)));
  return out;
}

std::vector<Rational> hilbert_series_terms(const BettiDiagram& D, unsigned order) {
  return series_expand(numerator_from_diagram(D), static_cast<unsigned>(D.n_vars()) + 1, order);
}

}  // namespace purecoeffs
