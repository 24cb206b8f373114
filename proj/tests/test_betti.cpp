#include <doctest.h>

#include <string>

#include "purecoeffs/betti.hpp"
#include "purecoeffs/error.hpp"
#include "purecoeffs/sampling.hpp"

using namespace purecoeffs;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Internal;
}

BettiDiagram koszul2(int n = 4) { return diagram_from_pure(PureType({0, 1, 2}), Rational(1), n); }

BettiDiagram mixture() {
  return add(scale(Rational(1, 2), koszul2()),
             scale(Rational(1, 2), diagram_from_pure(PureType({0, 2, 3}), Rational(1), 4)));
}

}  // namespace

TEST_CASE("pure type validation") {
  CHECK_NOTHROW(make_pure_type({0, 1, 2}));
  CHECK(code_of([] { make_pure_type({0, 2, 2}); }) == ErrorCode::NotStrictlyIncreasing);
  CHECK(make_pure_type({2, 3}).d0() == 2);
  CHECK(parse_pure_type("0, 2,3") == PureType({0, 2, 3}));
  CHECK(code_of([] { parse_pure_type("0,,3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pure_type("0,x"); }) == ErrorCode::ParseError);
}

TEST_CASE("diagram from a pure type") {
  const auto k = koszul2();
  CHECK(k.entries() == BettiEntries{{{0, 0}, Rational(1)}, {{1, 1}, Rational(2)}, {{2, 2}, Rational(1)}});
  const auto q = diagram_from_pure(PureType({0, 2, 3}), Rational(1), 4);
  CHECK(q.entries() == BettiEntries{{{0, 0}, Rational(1)}, {{1, 2}, Rational(3)}, {{2, 3}, Rational(2)}});
  const auto h = diagram_from_pure(PureType({0, 5}), Rational(7), 3);
  CHECK(h.entries() == BettiEntries{{{0, 0}, Rational(7)}, {{1, 5}, Rational(7)}});
  CHECK(code_of([] { diagram_from_pure(PureType({0, 1, 2}), Rational(0), 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { diagram_from_pure(PureType({0, 1, 2}), Rational(1), 1); }) == ErrorCode::InvalidCodim);
}

TEST_CASE("shifts") {
  const auto k = shifts(koszul2());
  CHECK(k.minimal == std::vector<std::int64_t>{0, 1, 2});
  CHECK(k.maximal == std::vector<std::int64_t>{0, 1, 2});
  const auto m = shifts(mixture());
  CHECK(m.minimal == std::vector<std::int64_t>{0, 1, 2});
  CHECK(m.maximal == std::vector<std::int64_t>{0, 2, 3});
  const BettiDiagram gap(4, 2, {{{0, 0}, Rational(1)}, {{2, 2}, Rational(1)}});
  CHECK(code_of([&] { shifts(gap); }) == ErrorCode::EmptyRow);
}

TEST_CASE("Herzog-Kuhl moments") {
  CHECK(hk_validate(koszul2()) == std::vector<Rational>{0, 0});
  CHECK(hk_validate(diagram_from_pure(PureType({0, 2, 3}), Rational(1), 4)) == std::vector<Rational>{0, 0});
  const BettiDiagram bad(4, 2, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}});
  CHECK(hk_validate(bad) == std::vector<Rational>{0, -1});
  CHECK_FALSE(is_hk_valid(bad));
}

TEST_CASE("every pure diagram satisfies the Herzog-Kuhl equations") {
  for (unsigned s = 0; s <= 6; ++s)
    for_each_strict_sequence(s, 1, 15, [&](const std::vector<std::int64_t>& tail) {
      std::vector<std::int64_t> d{0};
      d.insert(d.end(), tail.begin(), tail.end());
      const PureType t(d);
      const auto D = diagram_from_pure(t, Rational(1), 8);
      CHECK(is_hk_valid(D));
      for (const auto& [idx, v] : D.entries()) CHECK(v.sign() > 0);
      const auto sb = shifts(D);
      CHECK(sb.minimal == d);
      CHECK(sb.maximal == d);
    });
  Sampler rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = static_cast<unsigned>(rng.uniform(5, 6));
    auto tail = rng.strict_sequence(s, 1, 15);
    const std::int64_t d0 = rng.uniform(-3, 3);
    std::vector<std::int64_t> d{d0};
    for (auto x : tail) d.push_back(x + d0);
    CHECK(is_hk_valid(diagram_from_pure(PureType(d), Rational(1), 8)));
  }
}

TEST_CASE("nonnegative combinations of HK-valid diagrams stay HK-valid") {
  Sampler rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = rng.strict_sequence(3, 1, 10), b = rng.strict_sequence(3, 1, 10);
    a.insert(a.begin(), 0);
    b.insert(b.begin(), 0);
    const auto D = add(scale(Rational(rng.uniform(1, 9), 4), diagram_from_pure(PureType(a), Rational(1), 5)),
                       scale(Rational(rng.uniform(1, 9), 7), diagram_from_pure(PureType(b), Rational(1), 5)));
    CHECK(is_hk_valid(D));
  }
}

TEST_CASE("normalization") {
  const auto D = mixture();
  CHECK(normalize(scale(Rational(7), D)) == normalize(D));
  CHECK(normalize(koszul2()) == koszul2());
  CHECK(normalize(normalize(scale(Rational(3, 5), D))) == normalize(D));
  const auto five = diagram_from_pure(PureType({0, 2, 3}), Rational(5), 4);
  CHECK(beta0(five) == Rational(5));
  CHECK(normalize(five).entries() ==
        BettiEntries{{{0, 0}, Rational(1)}, {{1, 2}, Rational(3)}, {{2, 3}, Rational(2)}});
  CHECK(beta0(koszul2()) == Rational(1));
  CHECK(beta0(D) == Rational(1));
}

TEST_CASE("diagram invariants are enforced at construction") {
  CHECK(code_of([] { BettiDiagram(2, 3, {{{0, 0}, Rational(1)}}); }) == ErrorCode::InvalidCodim);
  CHECK(code_of([] { BettiDiagram(4, 2, {{{0, 0}, Rational(1)}, {{3, 3}, Rational(1)}}); }) ==
        ErrorCode::InvalidCodim);
  CHECK(code_of([] { BettiDiagram(4, 1, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(-1)}}); }) ==
        ErrorCode::NegativeEntry);
  CHECK(code_of([] { BettiDiagram(4, 1, {{{1, 1}, Rational(1)}}); }) == ErrorCode::ZeroBetaZero);
  const BettiDiagram z(4, 1, {{{0, 0}, Rational(1)}, {{1, 3}, Rational(0)}});
  CHECK(z.entries().size() == 1);
}

TEST_CASE("JSON and TSV parsing") {
  const std::string koszul_json = R"({"variables": 4, "codimension": 2, "betti": [
      {"i": 0, "j": 0, "value": 1}, {"i": 1, "j": 1, "value": 2}, {"i": 2, "j": 2, "value": "1"}]})";
  CHECK(parse_diagram(koszul_json, DiagramFormat::json) == koszul2());

  const auto frac = parse_diagram(R"({"variables": 2, "codimension": 1, "betti": [
      {"i": 0, "j": 0, "value": "3/2"}, {"i": 1, "j": 2, "value": "3/2"}]})",
                                  DiagramFormat::json);
  CHECK(frac.at(0, 0) == Rational(3, 2));

  const auto tsv = parse_diagram("# vars=4 codim=2\n0\t0\t1\n1\t1\t2\n2\t2\t1\n", DiagramFormat::tsv);
  CHECK(tsv == koszul2());

  CHECK(code_of([] { parse_diagram("{\"variables\": 4,", DiagramFormat::json); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_diagram(R"({"variables": 4, "codimension": 1})", DiagramFormat::json); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_diagram(R"({"variables": 4, "codimension": 1, "betti": [{"i": 0, "j": 0, "value": 1.5}]})",
                        DiagramFormat::json);
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_diagram(R"({"variables": 4, "codimension": 1, "betti": [{"i": 0, "j": 0, "value": "-1"}]})",
                        DiagramFormat::json);
        }) == ErrorCode::NegativeEntry);
  CHECK(code_of([] { parse_diagram("# vars=4 codim=1\n0\t0\n", DiagramFormat::tsv); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_diagram("0\t0\t1\n", DiagramFormat::tsv); }) == ErrorCode::ParseError);

  try {
    parse_diagram("{\n  \"variables\": 4,\n  oops\n}", DiagramFormat::json);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_diagram("# vars=4 codim=1\n0\t0\t1\n1\tx\t1\n", DiagramFormat::tsv);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips and is canonical") {
  Sampler rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    BettiEntries e;
    const int s = static_cast<int>(rng.uniform(0, 4));
    for (int i = 0; i <= s; ++i)
      for (int k = 0; k < 3; ++k) e[{i, rng.uniform(i, i + 6)}] = Rational(rng.uniform(1, 50), rng.uniform(1, 6));
    const BettiDiagram D(s + 2, s, e);
    for (auto fmt : {DiagramFormat::json, DiagramFormat::tsv}) {
      const std::string text = serialize_diagram(D, fmt);
      const BettiDiagram back = parse_diagram(text, fmt);
      CHECK(back == D);
      CHECK(serialize_diagram(back, fmt) == text);
    }
  }
  CHECK(serialize_diagram(koszul2(), DiagramFormat::tsv) == "# vars=4 codim=2\n0\t0\t1\n1\t1\t2\n2\t2\t1\n");
}

TEST_CASE("table rendering") {
  const std::string t = render_table(diagram_from_pure(PureType({0, 2, 3}), Rational(1), 4));
  CHECK(t == "    0 1 2\n 0: 1 . .\n 1: . 3 2\n");
}
