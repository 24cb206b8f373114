#include <doctest.h>

#include <tuple>

#include "oracles.hpp"
#include "purecoeffs/boij.hpp"
#include "purecoeffs/error.hpp"
#include "purecoeffs/hilbert.hpp"
#include "purecoeffs/sampling.hpp"

using namespace purecoeffs;
using V = std::vector<Rational>;

namespace {

std::vector<std::tuple<int, std::int64_t, Rational>> flat(const BettiDiagram& D) {
  std::vector<std::tuple<int, std::int64_t, Rational>> out;
  for (const auto& [idx, v] : D.entries()) out.emplace_back(idx.i, idx.j, v);
  return out;
}

PureType with_zero(const std::vector<std::int64_t>& tail) {
  std::vector<std::int64_t> d{0};
  d.insert(d.end(), tail.begin(), tail.end());
  return PureType(d);
}

}  // namespace

TEST_CASE("numerator from diagram") {
  CHECK(numerator_from_diagram(diagram_from_pure(PureType({0, 1, 2}), 1, 4)) ==
        Poly{Rational(1), Rational(-2), Rational(1)});
  CHECK(numerator_from_diagram(diagram_from_pure(PureType({0, 2, 3}), 1, 4)) ==
        Poly{Rational(1), Rational(0), Rational(-3), Rational(2)});
  CHECK(numerator_from_diagram(diagram_from_pure(PureType({0, 4}), Rational(3), 2)) ==
        Poly{Rational(3), Rational(0), Rational(0), Rational(0), Rational(-3)});
}

TEST_CASE("oracle coefficients on named diagrams") {
  const auto k = coefficients_oracle(diagram_from_pure(PureType({0, 1, 2}), 1, 4));
  CHECK(k.q_poly == Poly::constant(Rational(1)));
  CHECK(k.coefficients == V{1, 0, 0});

  const auto m = coefficients_oracle(diagram_from_pure(PureType({0, 2, 3}), 1, 4));
  CHECK(m.q_poly == Poly{Rational(1), Rational(2)});
  CHECK(m.coefficients == V{3, 2, 0});

  const auto c = coefficients_oracle(diagram_from_pure(PureType({0, 3}), 1, 2));
  CHECK(c.q_poly == Poly{Rational(1), Rational(1), Rational(1)});
  CHECK(c.coefficients == V{3, 3});
  CHECK(c.hilbert_poly == from_binomial_basis(c.coefficients, 1));

  // free module: s = 0 gives (beta0, 0, ..., 0)
  const BettiDiagram free(3, 0, {{{0, 0}, Rational(5)}});
  CHECK(coefficients_oracle(free).coefficients == V{5, 0, 0, 0});
}

TEST_CASE("oracle errors") {
  const BettiDiagram bad(4, 2, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}});
  try {
    coefficients_oracle(bad);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
    CHECK(std::string(e.what()) == "diagram violates Herzog-Kuhl conditions for codimension 2");
  }
  // HK-valid but with an empty middle row
  const BettiDiagram gap(5, 3, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(3)}, {{3, 3}, Rational(-0)},
                                {{1, 2}, Rational(0)}, {{3, 4}, Rational(0)}});
  CHECK_THROWS_AS(coefficients_oracle(gap), Error);
}

TEST_CASE("closed form on the named types") {
  CHECK(coefficients_pure_closed_form(PureType({0, 1, 2}), 1, 3) == V{1, 0, 0});
  CHECK(coefficients_pure_closed_form(PureType({0, 2, 3}), 1, 3) == V{3, 2, 0});
  CHECK(coefficients_pure_closed_form(PureType({0, 3}), 1, 3) == V{3, 3, 1});
  CHECK_THROWS_AS(coefficients_pure_closed_form(PureType({1, 3}), 1, 3), Error);
  CHECK_THROWS_AS(coefficients_pure_closed_form(PureType({0, 3}), 1, 0), Error);
}

TEST_CASE("explicit e_0, e_1, e_2 displays") {
  // e_0 = b prod d / s!, e_1 = b prod d/(s+1)! sum (d_i - i),
  // e_2 = b prod d/(s+2)! sum_{i<=j} (d_i - i)(d_j - j - 1)
  for (unsigned s = 1; s <= 4; ++s)
    for_each_strict_sequence(s, 1, 9, [&](const std::vector<std::int64_t>& d) {
      const Rational b(7, 2);
      Rational prod(1), sum1, sum2;
      for (std::size_t i = 0; i < d.size(); ++i) {
        prod *= Rational(d[i]);
        sum1 += Rational(d[i] - static_cast<std::int64_t>(i + 1));
        for (std::size_t j = i; j < d.size(); ++j)
          sum2 += Rational(d[i] - static_cast<std::int64_t>(i + 1)) *
                  Rational(d[j] - static_cast<std::int64_t>(j + 1) - 1);
      }
      const auto e = coefficients_pure_closed_form(with_zero(d), b, 3);
      CHECK(e[0] == b * prod / Rational::factorial(s));
      CHECK(e[0].sign() > 0);
      CHECK(e[1] == b * prod / Rational::factorial(s + 1) * sum1);
      CHECK(e[2] == b * prod / Rational::factorial(s + 2) * sum2);
    });
}

TEST_CASE("linear resolutions") {
  CHECK(coefficients_linear_case(3, 1, 1, 3) == V{3, 3, 1});
  CHECK(coefficients_linear_case(2, 2, 1, 3) == V{3, 2, 0});
  CHECK(coefficients_linear_case(1, 4, 1, 4) == V{1, 0, 0, 0});
  for (std::int64_t d = 1; d <= 6; ++d)
    for (unsigned s = 1; s <= 5; ++s) {
      std::vector<std::int64_t> type{0};
      for (unsigned k = 0; k < s; ++k) type.push_back(d + k);
      CHECK(coefficients_linear_case(d, s, 3, 5) == coefficients_pure_closed_form(PureType(type), 3, 5));
    }
}

TEST_CASE("closed form equals the oracle, exhaustively on small types") {
  for (unsigned s = 0; s <= 5; ++s)
    for_each_strict_sequence(s, 1, 9, [&](const std::vector<std::int64_t>& d) {
      const PureType t = with_zero(d);
      for (const Rational& b : {Rational(1), Rational(2, 3)}) {
        const auto D = diagram_from_pure(t, b, static_cast<int>(s) + 3);
        CHECK(coefficients_pure_closed_form(t, b, 4) == coefficients_oracle(D).coefficients);
      }
    });
}

TEST_CASE("both oracle routes agree") {
  Sampler rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = static_cast<unsigned>(rng.uniform(0, 4));
    const auto a = rng.strict_sequence(s, 1, 10), b = rng.strict_sequence(s, 1, 10);
    const int n = static_cast<int>(s) + static_cast<int>(rng.uniform(s == 0 ? 1 : 0, 3));
    const auto D = add(diagram_from_pure(with_zero(a), Rational(rng.uniform(1, 5)), n),
                       diagram_from_pure(with_zero(b), Rational(1, rng.uniform(1, 5)), n));
    CHECK(coefficients_from_numerator_derivatives(D) == coefficients_oracle(D).coefficients);
  }
}

TEST_CASE("oracle is additive") {
  Sampler rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = static_cast<unsigned>(rng.uniform(1, 4));
    const int n = static_cast<int>(s) + 2;
    const auto A = diagram_from_pure(with_zero(rng.strict_sequence(s, 1, 10)), Rational(rng.uniform(1, 5)), n);
    const auto B = diagram_from_pure(with_zero(rng.strict_sequence(s, 1, 10)), Rational(1, 3), n);
    const auto ea = coefficients_oracle(A).coefficients, eb = coefficients_oracle(B).coefficients;
    const auto es = coefficients_oracle(add(A, B)).coefficients;
    for (std::size_t i = 0; i < es.size(); ++i) CHECK(es[i] == ea[i] + eb[i]);
  }
}

TEST_CASE("shift transform") {
  CHECK(shift_transform(V{2, 1, 0}, 2, 1) == V{2, 3, 1});
  CHECK(shift_transform(V{4, 5, 6}, 2, 0) == V{4, 5, 6});
  CHECK(shift_transform(V{1, 0}, 1, 2) == V{1, 2});
  // the hypersurface example, end to end against the oracle
  CHECK(coefficients_oracle(diagram_from_pure(PureType({1, 3}), 1, 3)).coefficients == V{2, 3, 1});

  for (std::int64_t d0 = 1; d0 <= 4; ++d0)
    for (unsigned s = 1; s <= 4; ++s)
      for_each_strict_sequence(s, 1, 7, [&](const std::vector<std::int64_t>& tail) {
        const int n = static_cast<int>(s) + 3;
        std::vector<std::int64_t> shifted{d0};
        for (auto x : tail) shifted.push_back(x + d0);
        const auto dim = static_cast<unsigned>(n) - s;
        const auto e0 = coefficients_pure_closed_form(with_zero(tail), 1, dim + 1);
        const auto expect = coefficients_oracle(diagram_from_pure(PureType(shifted), 1, n)).coefficients;
        CHECK(shift_transform(e0, dim, d0) == expect);
        CHECK(oracle::shift_by_convolution(e0, d0) == expect);
      });
}

TEST_CASE("Hilbert polynomial values") {
  const auto k = coefficients_oracle(diagram_from_pure(PureType({0, 1, 2}), 1, 3));
  CHECK(hilbert_values(k, 0, 3) == V{1, 2, 3, 4});
  const auto z = coefficients_oracle(diagram_from_pure(PureType({0, 2, 3}), 1, 2));
  CHECK(hilbert_values(z, 1, 5) == V{3, 3, 3, 3, 3});
  CHECK_THROWS_AS(hilbert_values(k, 3, 2), Error);
}

TEST_CASE("series agrees with the polynomial from the top shift on") {
  Sampler rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = static_cast<unsigned>(rng.uniform(0, 4));
    const int n = static_cast<int>(s) + static_cast<int>(rng.uniform(s == 0 ? 1 : 0, 3));
    const auto D = add(diagram_from_pure(with_zero(rng.strict_sequence(s, 1, 9)), 1, n),
                       diagram_from_pure(with_zero(rng.strict_sequence(s, 1, 9)), Rational(5, 2), n));
    const auto top = shifts(D).maximal.back();
    const auto T = static_cast<unsigned>(top + 10);
    const auto series = hilbert_series_terms(D, T);
    const auto h = coefficients_oracle(D);
    const auto poly = hilbert_values(h, top, top + 10);
    for (std::int64_t i = top; i <= top + 10; ++i) {
      CHECK(series[static_cast<std::size_t>(i)] == poly[static_cast<std::size_t>(i - top)]);
      CHECK(series[static_cast<std::size_t>(i)] == oracle::cumulative_hilbert(flat(D), n, i));
    }
    // same series through Q(t) / (1 - t)^(dim + 1)
    CHECK(series_expand(h.q_poly, static_cast<unsigned>(h.dim) + 1, T) == series);
  }
}
