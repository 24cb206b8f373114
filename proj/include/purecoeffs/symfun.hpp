#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "purecoeffs/rational.hpp"

namespace purecoeffs {

/// An integer sequence (d_1, ..., d_s). Any order and any length, including
/// empty; strictness belongs to PureType.
using IntSeq = std::vector<std::int64_t>;

/// Sum over a-subsets {i_1 < ... < i_a} of {1..b} of i_1 * ... * i_a
/// (the elementary symmetric polynomial e_a(1, ..., b)). Zero for a > b.
Rational g_sum(unsigned a, unsigned b);

/// Complete homogeneous symmetric polynomial of degree k evaluated at d.
Rational f_complete(unsigned k, std::span<const std::int64_t> d);

/// Weakly increasing index sum
///   sum_{1 <= j_1 <= ... <= j_i <= s} prod_{k=1..i} (d_{j_k} - (j_k + k - 1)).
/// This is the functional that turns a pure type into its i-th Hilbert
/// coefficient, up to the factor prod d_j / (s + i)!.
Rational h_sum(unsigned i, std::span<const std::int64_t> d);

/// Calls visit(factors) once for each summand of h_sum(i, d), with the i
/// integer factors d_{j_k} - (j_k + k - 1) of that summand.
void for_each_h_term(unsigned i, std::span<const std::int64_t> d,
                     const std::function<void(std::span<const std::int64_t>)>& visit);

/// sum_{j=0..i} (-1)^(i-j) g_{i-j}(s + i - 1) f_j(d); an algebraic route to
/// h_sum through elementary and complete symmetric functions.
Rational expansion_identity_rhs(unsigned i, std::span<const std::int64_t> d);

/// Determinant of the s x s matrix whose rows are d^0, d^1, ..., d^(s-2), d^k,
/// by exact Gaussian elimination. Requires s >= 1 and k >= s - 1; throws
/// Error(InvalidArgument) otherwise.
Rational modified_vandermonde_det(std::span<const std::int64_t> d, unsigned k);

/// prod_{i<j} (d_j - d_i)
Rational vandermonde_product(std::span<const std::int64_t> d);

/// Exact determinant of a square matrix given as a list of rows.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace purecoeffs
