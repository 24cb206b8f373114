#pragma once

#include <optional>
#include <span>
#include <vector>

#include "purecoeffs/betti.hpp"
#include "purecoeffs/rational.hpp"

namespace purecoeffs {

struct DecompositionTerm {
  Rational weight;
  PureType type;
};

/// A normalized diagram written as sum_k weight_k * pi(type_k). Types come
/// out of the greedy loop as a chain: each is componentwise <= the next
/// and differs from it.
struct Decomposition {
  int codim = 0;
  std::vector<DecompositionTerm> terms;
};

struct BoundsRow {
  unsigned index = 0;
  Rational lower;
  Rational actual;
  Rational upper;
  bool lower_ok = false;
  bool upper_ok = false;
  // Only filled by decomposition_bound_certificate: beta0 times the smallest
  // and largest pure coefficient among the decomposition's terms.
  std::optional<Rational> term_min;
  std::optional<Rational> term_max;
};

struct BoundsReport {
  std::vector<std::int64_t> minimal;  // m_0..m_s
  std::vector<std::int64_t> maximal;  // M_0..M_s
  Rational beta0;
  std::vector<BoundsRow> rows;  // i = 0..dim

  bool all_ok() const;
};

/// Hilbert coefficient functional of a pure diagram with d_0 = 0:
///   e_i(pi(d)) = prod d_j / (s + i)! * h_i(d_1, ..., d_s).
/// Throws Error(NonzeroD0).
Rational pure_coefficient(const PureType& t, unsigned i);

/// Greedy Boij-Soderberg decomposition of a normalized diagram: repeatedly
/// subtract the largest multiple of pi(minimal shifts) that keeps the
/// remainder nonnegative. Throws Error(NotInCone) when the diagram is not
/// HK-valid, when the minimal shifts stop being strictly increasing, or when
/// a row empties before the whole remainder does; Error(InvalidArgument)
/// when beta_0 != 1.
Decomposition decompose(const BettiDiagram& D);

/// beta0 * sum_k weight_k * pi(type_k) as a diagram in n_vars variables.
BettiDiagram reconstruct(const Decomposition& dec, const Rational& beta0, int n_vars);

/// Conjectured lower and upper bounds evaluated at the minimal and maximal
/// shifts, next to the actual coefficients from the oracle. Throws
/// Error(NonzeroMinDegree) when m_0 != 0, plus everything coefficients_oracle
/// throws.
BoundsReport conjecture_bounds(const BettiDiagram& D);

/// Graded tensor product; codimensions add. The caller picks n_vars.
BettiDiagram tensor_diagrams(const BettiDiagram& A, const BettiDiagram& B, int n_vars);

/// Two-term diagram of S/(f) with deg f = degree: {(0,0): 1, (1,degree): 1}.
BettiDiagram koszul_factor(std::int64_t degree);

/// Betti diagram of a complete intersection of forms of the given degrees.
BettiDiagram complete_intersection(std::span<const std::int64_t> degrees, int n_vars);

/// Decomposes normalize(D), recomputes each e_i as beta0 * sum c * e_i(pi(d)),
/// checks it against the oracle (Error(Internal) on mismatch), and reports
/// the conjectured bounds with flags set along the chain
///   lower <= beta0 * min_term <= actual <= beta0 * max_term <= upper.
/// Requires every term to have d_0 = 0 (Error(NonzeroMinDegree)).
BoundsReport decomposition_bound_certificate(const BettiDiagram& D);

}  // namespace purecoeffs
