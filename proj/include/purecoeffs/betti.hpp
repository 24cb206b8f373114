#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "purecoeffs/rational.hpp"

namespace purecoeffs {

/// Shift sequence (d_0 < d_1 < ... < d_s) of a pure resolution.
class PureType {
 public:
  /// Throws Error(NotStrictlyIncreasing) or Error(InvalidArgument) for an
  /// empty list.
  explicit PureType(std::vector<std::int64_t> shifts);

  std::span<const std::int64_t> shifts() const { return shifts_; }
  /// d_1, ..., d_s (everything after d_0).
  std::span<const std::int64_t> tail() const { return std::span(shifts_).subspan(1); }
  int codim() const { return static_cast<int>(shifts_.size()) - 1; }
  std::int64_t d0() const { return shifts_.front(); }
  std::int64_t operator[](std::size_t i) const { return shifts_[i]; }

  /// "0,2,3"
  std::string str() const;

  friend auto operator<=>(const PureType&, const PureType&) = default;

 private:
  std::vector<std::int64_t> shifts_;
};

PureType make_pure_type(std::vector<std::int64_t> shifts);

/// Parses "0,2,3". Throws Error(ParseError) on malformed text.
PureType parse_pure_type(std::string_view text);

/// Homological index i and internal degree j of a graded Betti number.
struct BettiIndex {
  int i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const BettiIndex&, const BettiIndex&) = default;
};

using BettiEntries = std::map<BettiIndex, Rational>;

/// Graded Betti table beta_{i,j} with 0 <= i <= codim, entries nonnegative.
/// Zero entries are never stored.
class BettiDiagram {
 public:
  /// Validates: n_vars >= 1, 0 <= codim <= n_vars (InvalidCodim); every
  /// index within 0..codim (InvalidCodim); no negative value (NegativeEntry);
  /// row 0 nonempty (ZeroBetaZero).
  BettiDiagram(int n_vars, int codim, BettiEntries entries);

  int n_vars() const { return n_vars_; }
  int codim() const { return codim_; }
  /// Krull dimension n - s; the number of Hilbert coefficients is dim() + 1.
  int dim() const { return n_vars_ - codim_; }
  const BettiEntries& entries() const { return entries_; }
  Rational at(int i, std::int64_t j) const;

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  int n_vars_;
  int codim_;
  BettiEntries entries_;
};

struct ShiftBounds {
  std::vector<std::int64_t> minimal;
  std::vector<std::int64_t> maximal;
};

/// pi(d)_{i, d_i} = (-1)^(i+1) prod_{k != 0, i} (d_k - d_0) / (d_k - d_i) for
/// i >= 1, and 1 at i = 0. Entry i of the result is the value at (i, d_i).
std::vector<Rational> pure_betti_numbers(const PureType& t);

/// beta0 * pi(d) as a diagram in n_vars variables. Throws InvalidArgument
/// for beta0 <= 0 and InvalidCodim for n_vars < s.
BettiDiagram diagram_from_pure(const PureType& t, const Rational& beta0, int n_vars);

/// Per-row minimal and maximal degrees of the support. Throws Error(EmptyRow).
ShiftBounds shifts(const BettiDiagram& D);

/// (sum_{i,j} (-1)^i j^k beta_{i,j})_{k = 0..s-1}, with 0^0 = 1.
std::vector<Rational> hk_validate(const BettiDiagram& D);
bool is_hk_valid(const BettiDiagram& D);

Rational beta0(const BettiDiagram& D);

/// D / beta0(D). Throws Error(ZeroBetaZero).
BettiDiagram normalize(const BettiDiagram& D);

/// c * D entrywise for c > 0.
BettiDiagram scale(const Rational& c, const BettiDiagram& D);

/// Entrywise sum; both diagrams must share n_vars and codim.
BettiDiagram add(const BettiDiagram& A, const BettiDiagram& B);

enum class DiagramFormat { json, tsv };

/// Parses the canonical JSON document
///   {"variables": n, "codimension": s, "betti": [{"i":..,"j":..,"value":..}]}
/// or the TSV form
///   # vars=<n> codim=<s>
///   <i>\t<j>\t<value>
/// Values are integers or exact "p/q" strings. Duplicate (i, j) entries add.
/// Throws Error(ParseError) with a position, NegativeEntry or InvalidCodim.
BettiDiagram parse_diagram(std::string_view text, DiagramFormat format);

/// Deterministic rendering, entries sorted by (i, j).
std::string serialize_diagram(const BettiDiagram& D, DiagramFormat format);

/// Column-per-homological-degree table in the usual Macaulay2 layout
/// (row r holds beta_{i, i + r}).
std::string render_table(const BettiDiagram& D);

}  // namespace purecoeffs
