#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "purecoeffs/betti.hpp"
#include "purecoeffs/poly.hpp"
#include "purecoeffs/rational.hpp"

namespace purecoeffs {

/// Hilbert data of a diagram, under the cumulative convention
/// H(N, i) = sum_{j <= i} dim N_j, whose series is Q(t) / (1 - t)^(dim + 1).
struct HilbertData {
  Poly q_poly;                        // Q_N(t) = P_N(t) / (1 - t)^s
  int dim = 0;                        // n - s
  std::vector<Rational> coefficients;  // e_0, ..., e_dim
  Poly hilbert_poly;                  // sum (-1)^i e_i C(x + dim - i, dim - i)
};

/// sum_{i,j} (-1)^i beta_{i,j} t^j
Poly numerator_from_diagram(const BettiDiagram& D);

/// e_i = Q^(i)(1) / i! with Q obtained by exact division. Throws
/// Error(NotDivisible) when the diagram violates the Herzog-Kuhl equations
/// for its codimension, and Error(EmptyRow) for a gap in the rows.
HilbertData coefficients_oracle(const BettiDiagram& D);

/// Second route that never divides: e_i = (-1)^s P^(s+i)(1) / (s+i)!. Only
/// meaningful on HK-valid diagrams; on those it must equal the oracle.
std::vector<Rational> coefficients_from_numerator_derivatives(const BettiDiagram& D);

/// Closed form for a pure type with d_0 = 0:
///   e_i = beta0 * prod d_j / (s + i)! * h_i(d_1, ..., d_s),  i < count.
/// Throws Error(NonzeroD0) if d_0 != 0, Error(InvalidArgument) if count == 0.
std::vector<Rational> coefficients_pure_closed_form(const PureType& t, const Rational& beta0,
                                                    unsigned count);

/// Type (0, d, d+1, ..., d+s-1):  e_i = beta0 C(d+s-1, s+i) C(s+i-1, i).
std::vector<Rational> coefficients_linear_case(std::int64_t d, unsigned s, const Rational& beta0,
                                               unsigned count);

/// Recovers e(N) from e(N(d0)), where N(d0)_j = N_{d0+j}. Works by
/// substituting x -> x - d0 into the Hilbert polynomial and converting back,
/// which amounts to
///   e_i(N) = sum_{j <= i} C(d0, i - j) e_j(N(d0)).
/// Requires e_shifted.size() == dim + 1.
std::vector<Rational> shift_transform(std::span<const Rational> e_shifted, unsigned dim,
                                      std::int64_t d0);

/// Hilbert polynomial values at from, from + 1, ..., to.
std::vector<Rational> hilbert_values(const HilbertData& H, std::int64_t from, std::int64_t to);

/// First terms of the cumulative Hilbert series P_N(t) / (1 - t)^(n + 1).
std::vector<Rational> hilbert_series_terms(const BettiDiagram& D, unsigned order);

}  // namespace purecoeffs
