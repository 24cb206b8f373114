#include "purecoeffs/symfun.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "purecoeffs/error.hpp"

namespace purecoeffs {

Rational g_sum(unsigned a, unsigned b) {
  if (a > b) return Rational(0);
  // row[x] holds g_x(m) for the current m; g_x(m) = g_x(m-1) + m g_{x-1}(m-1).
  std::vector<Rational> row(a + 1);
  row[0] = Rational(1);
  for (unsigned m = 1; m <= b; ++m)
    for (unsigned x = std::min(a, m); x >= 1; --x) row[x] += Rational(m) * row[x - 1];
  return row[a];
}

Rational f_complete(unsigned k, std::span<const std::int64_t> d) {
  // col[x] holds f_x(d_1..d_r) for the current prefix r;
  // f_x(d_1..d_r) = f_x(d_1..d_{r-1}) + d_r f_{x-1}(d_1..d_r).
  std::vector<Rational> col(k + 1);
  col[0] = Rational(1);
  for (std::int64_t v : d) {
    const Rational dv(v);
    for (unsigned x = 1; x <= k; ++x) col[x] += dv * col[x - 1];
  }
  return col[k];
}

namespace {

void visit_weak(std::span<const std::int64_t> d, unsigned length, unsigned k, std::size_t min_j,
                std::vector<std::int64_t>& factors,
                const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (k > length) {
    visit(factors);
    return;
  }
  for (std::size_t j = min_j; j <= d.size(); ++j) {
    // 1-based index j at position k contributes d_j - (j + k - 1).
    factors.push_back(d[j - 1] - static_cast<std::int64_t>(j + k - 1));
    visit_weak(d, length, k + 1, j, factors, visit);
    factors.pop_back();
  }
}

}  // namespace

void for_each_h_term(unsigned i, std::span<const std::int64_t> d,
                     const std::function<void(std::span<const std::int64_t>)>& visit) {
  std::vector<std::int64_t> factors;
  factors.reserve(i);
  visit_weak(d, i, 1, 1, factors, visit);
}

Rational h_sum(unsigned i, std::span<const std::int64_t> d) {
  Rational total;
  for_each_h_term(i, d, [&](std::span<const std::int64_t> factors) {
    Rational prod(1);
    for (std::int64_t f : factors) {
      if (f == 0) return;
      prod *= Rational(f);
    }
    total += prod;
  });
  return total;
}

Rational expansion_identity_rhs(unsigned i, std::span<const std::int64_t> d) {
  const auto s = static_cast<std::int64_t>(d.size());
  const std::int64_t b = s + static_cast<std::int64_t>(i) - 1;
  Rational total;
  for (unsigned j = 0; j <= i; ++j) {
    // g_{i-j}(b) with b = -1 only happens for s = 0, i = 0: the empty sum g_0 = 1.
    const unsigned a = i - j;
    const Rational g = b < 0 ? Rational(a == 0 ? 1 : 0) : g_sum(a, static_cast<unsigned>(b));
    Rational term = g * f_complete(j, d);
    if (a % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Rational vandermonde_product(std::span<const std::int64_t> d) {
  Rational prod(1);
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b) prod *= Rational(d[b] - d[a]);
  return prod;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Rational modified_vandermonde_det(std::span<const std::int64_t> d, unsigned k) {
  const std::size_t s = d.size();
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "modified Vandermonde needs s >= 1");
  if (k + 1 < s)
    throw Error(ErrorCode::InvalidArgument,
                "modified Vandermonde needs k >= s - 1, got k = " + std::to_string(k));
  std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
  for (std::size_t col = 0; col < s; ++col) {
    const Rational x(d[col]);
    for (std::size_t row = 0; row + 1 < s; ++row)
      m[row][col] = Rational::power(x, static_cast<unsigned>(row));
    m[s - 1][col] = Rational::power(x, k);
  }
  return determinant(std::move(m));
}

}  // namespace purecoeffs
