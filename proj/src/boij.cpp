#include "purecoeffs/boij.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "purecoeffs/error.hpp"
#include "purecoeffs/hilbert.hpp"
#include "purecoeffs/symfun.hpp"

namespace purecoeffs {

bool BoundsReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundsRow& r) { return r.lower_ok && r.upper_ok; });
}

Rational pure_coefficient(const PureType& t, unsigned i) {
  if (t.d0() != 0)
    throw Error(ErrorCode::NonzeroD0, "pure coefficient needs d_0 = 0, got type (" + t.str() + ")");
  const auto s = static_cast<unsigned>(t.codim());
  Rational prod(1);
  for (std::int64_t d : t.tail()) prod *= Rational(d);
  return prod / Rational::factorial(s + i) * h_sum(i, t.tail());
}

Decomposition decompose(const BettiDiagram& D) {
  if (beta0(D) != Rational(1))
    throw Error(ErrorCode::InvalidArgument, "decompose expects a normalized diagram (beta_0 = 1), got beta_0 = " +
                                                beta0(D).str());
  if (!is_hk_valid(D))
    throw Error(ErrorCode::NotInCone, "diagram violates Herzog-Kuhl conditions for codimension " +
                                          std::to_string(D.codim()));
  const auto rows = static_cast<std::size_t>(D.codim()) + 1;
  BettiEntries rest = D.entries();
  const std::size_t cap = rest.size();
  Decomposition dec{D.codim(), {}};

  while (!rest.empty()) {
    if (dec.terms.size() >= cap)
      throw Error(ErrorCode::Internal, "greedy decomposition exceeded its iteration bound");

    std::vector<std::int64_t> mins(rows, std::numeric_limits<std::int64_t>::max());
    std::vector<bool> seen(rows, false);
    for (const auto& [idx, value] : rest) {
      const auto i = static_cast<std::size_t>(idx.i);
      seen[i] = true;
      mins[i] = std::min(mins[i], idx.j);
    }
    for (std::size_t i = 0; i < rows; ++i)
      if (!seen[i])
        throw Error(ErrorCode::NotInCone, "row " + std::to_string(i) +
                                              " of the remainder emptied before the others");
    for (std::size_t i = 1; i < rows; ++i)
      if (mins[i] <= mins[i - 1])
        throw Error(ErrorCode::NotInCone, "minimal shifts of the remainder are not strictly increasing");

    PureType type(mins);
    const auto pi = pure_betti_numbers(type);
    Rational c = rest.at({0, mins[0]}) / pi[0];
    for (std::size_t i = 1; i < rows; ++i)
      c = std::min(c, rest.at({static_cast<int>(i), mins[i]}) / pi[i]);

    for (std::size_t i = 0; i < rows; ++i) {
      const BettiIndex idx{static_cast<int>(i), mins[i]};
      Rational& v = rest.at(idx);
      v -= c * pi[i];
      if (v.sign() < 0) throw Error(ErrorCode::NotInCone, "greedy step produced a negative entry");
      if (v.is_zero()) rest.erase(idx);
    }
    dec.terms.push_back({c, std::move(type)});
  }
  return dec;
}

BettiDiagram reconstruct(const Decomposition& dec, const Rational& beta0, int n_vars) {
  BettiEntries out;
  for (const auto& term : dec.terms) {
    const auto pi = pure_betti_numbers(term.type);
    for (int i = 0; i <= term.type.codim(); ++i)
      out[{i, term.type[static_cast<std::size_t>(i)]}] += beta0 * term.weight * pi[static_cast<std::size_t>(i)];
  }
  return BettiDiagram(n_vars, dec.codim, std::move(out));
}

BoundsReport conjecture_bounds(const BettiDiagram& D) {
  const ShiftBounds sb = shifts(D);
  if (sb.minimal[0] != 0)
    throw Error(ErrorCode::NonzeroMinDegree, "bounds are stated for modules generated in degree 0, m_0 = " +
                                                 std::to_string(sb.minimal[0]));
  const HilbertData h = coefficients_oracle(D);
  BoundsReport report{sb.minimal, sb.maximal, beta0(D), {}};
  // h_i and prod d_j only need d_1..d_s; the m/M sequences need not be a
  // valid PureType (M may be non-strict), so evaluate directly.
  auto eval = [&](const std::vector<std::int64_t>& seq, unsigned i) {
    const std::span<const std::int64_t> tail = std::span(seq).subspan(1);
    Rational prod(1);
    for (std::int64_t d : tail) prod *= Rational(d);
    return report.beta0 * prod / Rational::factorial(static_cast<unsigned>(D.codim()) + i) * h_sum(i, tail);
  };
  for (unsigned i = 0; i < h.coefficients.size(); ++i) {
    BoundsRow row;
    row.index = i;
    row.lower = eval(sb.minimal, i);
    row.upper = eval(sb.maximal, i);
    row.actual = h.coefficients[i];
    row.lower_ok = row.lower <= row.actual;
    row.upper_ok = row.actual <= row.upper;
    report.rows.push_back(std::move(row));
  }
  return report;
}

BettiDiagram tensor_diagrams(const BettiDiagram& A, const BettiDiagram& B, int n_vars) {
  BettiEntries out;
  for (const auto& [a, va] : A.entries())
    for (const auto& [b, vb] : B.entries()) out[{a.i + b.i, a.j + b.j}] += va * vb;
  return BettiDiagram(n_vars, A.codim() + B.codim(), std::move(out));
}

BettiDiagram koszul_factor(std::int64_t degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "form degree must be positive");
  return BettiDiagram(1, 1, {{{0, 0}, Rational(1)}, {{1, degree}, Rational(1)}});
}

BettiDiagram complete_intersection(std::span<const std::int64_t> degrees, int n_vars) {
  BettiDiagram acc(n_vars, 0, {{{0, 0}, Rational(1)}});
  for (std::int64_t deg : degrees) acc = tensor_diagrams(acc, koszul_factor(deg), n_vars);
  return acc;
}

BoundsReport decomposition_bound_certificate(const BettiDiagram& D) {
  const Decomposition dec = decompose(normalize(D));
  for (const auto& term : dec.terms)
    if (term.type.d0() != 0)
      throw Error(ErrorCode::NonzeroMinDegree, "decomposition term (" + term.type.str() +
                                                   ") is not generated in degree 0");
  BoundsReport report = conjecture_bounds(D);
  const Rational& b0 = report.beta0;
  for (auto& row : report.rows) {
    Rational weighted;
    std::optional<Rational> lo, hi;
    for (const auto& term : dec.terms) {
      const Rational e = pure_coefficient(term.type, row.index);
      weighted += term.weight * e;
      lo = lo ? std::min(*lo, e) : e;
      hi = hi ? std::max(*hi, e) : e;
    }
    weighted *= b0;
    if (weighted != row.actual)
      throw Error(ErrorCode::Internal, "decomposition-weighted e_" + std::to_string(row.index) + " = " +
                                           weighted.str() + " disagrees with oracle " + row.actual.str());
    row.term_min = b0 * *lo;
    row.term_max = b0 * *hi;
    row.lower_ok = row.lower <= *row.term_min && *row.term_min <= row.actual;
    row.upper_ok = row.actual <= *row.term_max && *row.term_max <= row.upper;
  }
  return report;
}

}  // namespace purecoeffs
