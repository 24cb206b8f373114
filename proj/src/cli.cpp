#include "purecoeffs/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "purecoeffs/betti.hpp"
#include "purecoeffs/boij.hpp"
#include "purecoeffs/error.hpp"
#include "purecoeffs/hilbert.hpp"
#include "purecoeffs/sampling.hpp"
#include "purecoeffs/symfun.hpp"

namespace purecoeffs::cli {
namespace {

using ojson = nlohmann::ordered_json;

enum class OutFormat { json, table };

struct Options {
  std::string format;
  std::string input = "-";
  std::string input_format;
  std::string type;
  std::string beta0 = "1";
  int vars = 0;
  std::string eval = "0..10";
  bool certificate = false;
  int max_s = 5;
  int max_degree = 12;
  std::uint64_t seed = 1;
  int trials = 200;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  OutFormat format;
};

ojson rationals_json(std::span<const Rational> v) {
  ojson a = ojson::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

ojson ints_json(std::span<const std::int64_t> v) {
  ojson a = ojson::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string join(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + ")";
}

/// Left-aligned first column, right-aligned rest.
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const std::string pad(width[c] - r[c].size(), ' ');
      line += c == 0 ? r[c] + pad : "  " + pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
}

std::string binomial_form(std::span<const Rational> e, int dim) {
  std::string s;
  for (int i = 0; i <= dim; ++i) {
    const Rational& c = e[static_cast<std::size_t>(i)];
    const bool minus = (i % 2 == 1) != (c.sign() < 0);
    const Rational mag = c.sign() < 0 ? -c : c;
    if (i == 0) s += minus ? "-" : "";
    else s += minus ? " - " : " + ";
    const int k = dim - i;
    s += mag.str() + "*C(x+" + std::to_string(k) + "," + std::to_string(k) + ")";
  }
  return s;
}

BettiDiagram read_diagram(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open '" + opt.input + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  DiagramFormat fmt = DiagramFormat::json;
  if (opt.input_format == "tsv") {
    fmt = DiagramFormat::tsv;
  } else if (opt.input_format.empty()) {
    const bool tsv_ext = opt.input.size() > 4 && opt.input.ends_with(".tsv");
    const auto first = text.find_first_not_of(" \t\r\n");
    if (tsv_ext || (first != std::string::npos && text[first] == '#')) fmt = DiagramFormat::tsv;
  }
  return parse_diagram(text, fmt);
}

int cmd_coeffs(const Options& opt, Io io) {
  const BettiDiagram D = read_diagram(opt, io.in);
  const HilbertData h = coefficients_oracle(D);
  if (io.format == OutFormat::json) {
    ojson j;
    j["variables"] = D.n_vars();
    j["codimension"] = D.codim();
    j["dimension"] = h.dim;
    j["q_numerator"] = rationals_json(h.q_poly.coeffs());
    j["coefficients"] = rationals_json(h.coefficients);
    j["hilbert_polynomial"] = rationals_json(h.hilbert_poly.coeffs());
    io.out << j.dump(2) << "\n";
    return kOk;
  }
  io.out << "variables:   " << D.n_vars() << "\n"
         << "codimension: " << D.codim() << "\n"
         << "dimension:   " << h.dim << "\n"
         << "Q(t):        " << h.q_poly.str('t') << "\n";
  std::vector<std::vector<std::string>> rows{{"i", "e_i"}};
  for (std::size_t i = 0; i < h.coefficients.size(); ++i)
    rows.push_back({std::to_string(i), h.coefficients[i].str()});
  print_table(io.out, rows);
  io.out << "P(x) = " << binomial_form(h.coefficients, h.dim) << "\n"
         << "     = " << h.hilbert_poly.str('x') << "\n";
  return kOk;
}

int cmd_pure(const Options& opt, Io io) {
  const PureType t = parse_pure_type(opt.type);
  const Rational b0 = Rational::parse(opt.beta0);
  const BettiDiagram D = diagram_from_pure(t, b0, opt.vars);
  const HilbertData h = coefficients_oracle(D);
  const auto count = static_cast<unsigned>(h.dim) + 1;

  std::vector<std::int64_t> normalized(t.shifts().begin(), t.shifts().end());
  for (auto& d : normalized) d -= t.d0();
  std::vector<Rational> closed = coefficients_pure_closed_form(PureType(normalized), b0, count);
  if (t.d0() != 0) closed = shift_transform(closed, static_cast<unsigned>(h.dim), t.d0());
  const bool agree = closed == h.coefficients;

  if (io.format == OutFormat::json) {
    ojson j;
    j["type"] = ints_json(t.shifts());
    j["beta0"] = b0.str();
    j["variables"] = opt.vars;
    j["betti"] = rationals_json(pure_betti_numbers(t));
    j["closed_form"] = rationals_json(closed);
    j["oracle"] = rationals_json(h.coefficients);
    j["verdict"] = agree ? "AGREE" : "DISAGREE";
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "pure type (" << t.str() << "), beta0 = " << b0 << ", " << opt.vars << " variables\n"
           << render_table(D) << "\n";
    std::vector<std::vector<std::string>> rows{{"i", "closed form", "oracle"}};
    for (unsigned i = 0; i < count; ++i)
      rows.push_back({std::to_string(i), closed[i].str(), h.coefficients[i].str()});
    print_table(io.out, rows);
    io.out << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? kOk : kNegative;
}

int cmd_bounds(const Options& opt, Io io) {
  const BettiDiagram D = read_diagram(opt, io.in);
  const BoundsReport r = opt.certificate ? decomposition_bound_certificate(D) : conjecture_bounds(D);
  const bool ok = r.all_ok();
  if (io.format == OutFormat::json) {
    ojson j;
    j["minimal_shifts"] = ints_json(r.minimal);
    j["maximal_shifts"] = ints_json(r.maximal);
    j["beta0"] = r.beta0.str();
    j["method"] = opt.certificate ? "decomposition" : "direct";
    j["rows"] = ojson::array();
    for (const auto& row : r.rows) {
      ojson e;
      e["i"] = row.index;
      e["lower"] = row.lower.str();
      e["actual"] = row.actual.str();
      e["upper"] = row.upper.str();
      if (row.term_min) e["term_min"] = row.term_min->str();
      if (row.term_max) e["term_max"] = row.term_max->str();
      e["lower_ok"] = row.lower_ok;
      e["upper_ok"] = row.upper_ok;
      j["rows"].push_back(std::move(e));
    }
    j["all_ok"] = ok;
    j["assumption"] = "Cohen-Macaulay module generated in degree 0 (not verified from the diagram)";
    io.out << j.dump(2) << "\n";
    return ok ? kOk : kNegative;
  }
  io.out << "minimal shifts m = " << join(r.minimal) << "\n"
         << "maximal shifts M = " << join(r.maximal) << "\n"
         << "beta0 = " << r.beta0 << "\n";
  std::vector<std::vector<std::string>> rows;
  if (opt.certificate)
    rows.push_back({"i", "lower", "term min", "actual", "term max", "upper", "ok"});
  else
    rows.push_back({"i", "lower", "actual", "upper", "ok"});
  for (const auto& row : r.rows) {
    const std::string flag = row.lower_ok && row.upper_ok ? "ok" : (row.lower_ok ? "UPPER VIOLATED" : "LOWER VIOLATED");
    if (opt.certificate)
      rows.push_back({std::to_string(row.index), row.lower.str(), row.term_min->str(), row.actual.str(),
                      row.term_max->str(), row.upper.str(), flag});
    else
      rows.push_back({std::to_string(row.index), row.lower.str(), row.actual.str(), row.upper.str(), flag});
  }
  print_table(io.out, rows);
  io.out << "note: bounds assume a Cohen-Macaulay module generated in degree 0; "
            "the diagram alone does not certify this\n";
  return ok ? kOk : kNegative;
}

int cmd_decompose(const Options& opt, Io io) {
  const BettiDiagram D = read_diagram(opt, io.in);
  const Rational b0 = beta0(D);
  Decomposition dec;
  try {
    dec = decompose(normalize(D));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInCone) throw;
    if (io.format == OutFormat::json) {
      ojson j;
      j["in_cone"] = false;
      j["reason"] = e.what();
      io.out << j.dump(2) << "\n";
    } else {
      io.out << "NOT IN CONE: " << e.what() << "\n";
    }
    return kNegative;
  }
  Rational total;
  for (const auto& t : dec.terms) total += t.weight;
  const bool exact = reconstruct(dec, b0, D.n_vars()) == D && total == Rational(1);
  if (io.format == OutFormat::json) {
    ojson j;
    j["in_cone"] = true;
    j["variables"] = D.n_vars();
    j["codimension"] = D.codim();
    j["beta0"] = b0.str();
    j["terms"] = ojson::array();
    for (const auto& t : dec.terms) {
      ojson e;
      e["weight"] = t.weight.str();
      e["type"] = ints_json(t.type.shifts());
      j["terms"].push_back(std::move(e));
    }
    j["weight_sum"] = total.str();
    j["reconstruction"] = exact ? "exact" : "MISMATCH";
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "beta0 = " << b0 << "\n";
    std::vector<std::vector<std::string>> rows{{"weight", "pure type"}};
    for (const auto& t : dec.terms) rows.push_back({t.weight.str(), "(" + t.type.str() + ")"});
    print_table(io.out, rows);
    io.out << "weight sum: " << total << "\n"
           << "reconstruction: " << (exact ? "exact" : "MISMATCH") << "\n";
  }
  return exact ? kOk : kNegative;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::ParseError, "range must look like a..b, got '" + text + "'");
  const Rational a = Rational::parse(text.substr(0, dots));
  const Rational b = Rational::parse(text.substr(dots + 2));
  if (!a.fits_int64() || !b.fits_int64() || a > b)
    throw Error(ErrorCode::ParseError, "invalid range '" + text + "'");
  return {a.to_int64(), b.to_int64()};
}

int cmd_hilbert(const Options& opt, Io io) {
  const BettiDiagram D = read_diagram(opt, io.in);
  const auto [from, to] = parse_range(opt.eval);
  const HilbertData h = coefficients_oracle(D);
  const auto poly = hilbert_values(h, from, to);
  const std::vector<Rational> series =
      to >= 0 ? hilbert_series_terms(D, static_cast<unsigned>(to)) : std::vector<Rational>{};
  std::vector<std::vector<std::string>> rows{{"i", "H(N,i)", "P(i)", "agree"}};
  ojson arr = ojson::array();
  for (std::int64_t x = from; x <= to; ++x) {
    const Rational hv = x < 0 ? Rational(0) : series[static_cast<std::size_t>(x)];
    const Rational& pv = poly[static_cast<std::size_t>(x - from)];
    rows.push_back({std::to_string(x), hv.str(), pv.str(), hv == pv ? "=" : ""});
    ojson e;
    e["i"] = x;
    e["series"] = hv.str();
    e["polynomial"] = pv.str();
    e["agree"] = hv == pv;
    arr.push_back(std::move(e));
  }
  if (io.format == OutFormat::json) {
    ojson j;
    j["hilbert_polynomial"] = rationals_json(h.hilbert_poly.coeffs());
    j["values"] = std::move(arr);
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "P(x) = " << h.hilbert_poly.str('x') << "\n";
    print_table(io.out, rows);
  }
  return kOk;
}

struct SuiteCount {
  std::string name;
  long checks = 0;
  long failed = 0;
  void record(bool ok) {
    ++checks;
    if (!ok) ++failed;
  }
};

int cmd_check_identities(const Options& opt, Io io) {
  if (opt.max_s < 1 || opt.max_degree < 1 || opt.trials < 1)
    throw Error(ErrorCode::InvalidArgument, "--max-s, --max-degree and --trials must be positive");
  constexpr unsigned kMaxIndex = 6;
  Sampler rng(opt.seed);
  SuiteCount expansion{"expansion identity"}, det{"determinant lemma"}, positivity{"positivity"},
      monotone{"monotonicity"};
  const int s_cap = std::min(opt.max_s, opt.max_degree);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const auto s = static_cast<unsigned>(rng.uniform(1, s_cap));
    const IntSeq d = rng.strict_sequence(s, 1, opt.max_degree);

    for (unsigned i = 0; i <= kMaxIndex; ++i) expansion.record(h_sum(i, d) == expansion_identity_rhs(i, d));

    for (unsigned k = s - 1; k <= s + 4; ++k)
      det.record(modified_vandermonde_det(d, k) == f_complete(k - s + 1, d) * vandermonde_product(d));

    for (unsigned i = 0; i <= kMaxIndex; ++i) {
      bool ok = true;
      for_each_h_term(i, d, [&](std::span<const std::int64_t> factors) {
        const bool has_zero = std::find(factors.begin(), factors.end(), 0) != factors.end();
        const bool all_pos = std::all_of(factors.begin(), factors.end(), [](auto f) { return f > 0; });
        ok = ok && (has_zero || all_pos);
      });
      positivity.record(ok && h_sum(i, d).sign() >= 0);
    }

    std::vector<std::int64_t> bump(s);
    for (auto& b : bump) b = rng.uniform(0, 3);
    std::sort(bump.begin(), bump.end());
    std::vector<std::int64_t> lo{0}, hi{0};
    for (unsigned k = 0; k < s; ++k) {
      lo.push_back(d[k]);
      hi.push_back(d[k] + bump[k]);
    }
    const PureType tl(lo), th(hi);
    for (unsigned i = 0; i <= kMaxIndex; ++i) monotone.record(pure_coefficient(tl, i) <= pure_coefficient(th, i));
  }

  const std::vector<SuiteCount> suites{expansion, det, positivity, monotone};
  const bool ok = std::all_of(suites.begin(), suites.end(), [](const SuiteCount& c) { return c.failed == 0; });
  if (io.format == OutFormat::json) {
    ojson j;
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["max_s"] = opt.max_s;
    j["max_degree"] = opt.max_degree;
    j["suites"] = ojson::array();
    for (const auto& c : suites) {
      ojson e;
      e["name"] = c.name;
      e["checks"] = c.checks;
      e["passed"] = c.checks - c.failed;
      e["failed"] = c.failed;
      j["suites"].push_back(std::move(e));
    }
    j["all_passed"] = ok;
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "seed " << opt.seed << ", " << opt.trials << " trials, s <= " << opt.max_s
           << ", d_s <= " << opt.max_degree << "\n";
    std::vector<std::vector<std::string>> rows{{"suite", "checks", "passed", "failed"}};
    for (const auto& c : suites)
      rows.push_back({c.name, std::to_string(c.checks), std::to_string(c.checks - c.failed), std::to_string(c.failed)});
    print_table(io.out, rows);
    io.out << (ok ? "all identities hold" : "IDENTITY FAILURES") << "\n";
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hilbert coefficients of graded modules from Betti diagrams", "purecoeffs"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format (default from PURECOEFFS_FORMAT, else table)")
      ->check(CLI::IsMember({"json", "table"}));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Diagram file, or - for standard input");
    sub->add_option("--input-format", opt.input_format, "Diagram format (default: by extension or content)")
        ->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "Hilbert series numerator and coefficients of a diagram");
  add_input(coeffs);
  add_format(coeffs);

  CLI::App* pure = app.add_subcommand("pure", "Closed-form vs oracle coefficients of a pure type");
  pure->add_option("--type", opt.type, "Shift sequence, e.g. 0,2,3")->required();
  pure->add_option("--vars", opt.vars, "Number of variables")->required();
  pure->add_option("--beta0", opt.beta0, "Rank of the generator module (rational)");
  add_format(pure);

  CLI::App* bounds = app.add_subcommand("bounds", "Check the conjectured Hilbert coefficient bounds");
  add_input(bounds);
  add_format(bounds);
  bounds->add_flag("--certificate", opt.certificate, "Derive the bounds through a pure-diagram decomposition");

  CLI::App* dec = app.add_subcommand("decompose", "Greedy decomposition into pure diagrams");
  add_input(dec);
  add_format(dec);

  CLI::App* hilb = app.add_subcommand("hilbert", "Hilbert function vs Hilbert polynomial");
  add_input(hilb);
  add_format(hilb);
  hilb->add_option("--eval", opt.eval, "Evaluation range a..b");

  CLI::App* check = app.add_subcommand("check-identities", "Run the symmetric function identity suites");
  check->add_option("--max-s", opt.max_s, "Largest codimension sampled");
  check->add_option("--max-degree", opt.max_degree, "Largest shift sampled");
  check->add_option("--seed", opt.seed, "Sampling seed");
  check->add_option("--trials", opt.trials, "Number of sampled sequences");
  add_format(check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::string fmt = opt.format;
  if (fmt.empty()) {
    const char* env = std::getenv("PURECOEFFS_FORMAT");
    fmt = env ? env : "table";
  }
  if (fmt != "json" && fmt != "table") {
    err << "error: unknown output format '" << fmt << "' (expected json or table)\n";
    return kInputError;
  }
  const Io io{in, out, fmt == "json" ? OutFormat::json : OutFormat::table};

  try {
    if (coeffs->parsed()) return cmd_coeffs(opt, io);
    if (pure->parsed()) return cmd_pure(opt, io);
    if (bounds->parsed()) return cmd_bounds(opt, io);
    if (dec->parsed()) return cmd_decompose(opt, io);
    if (hilb->parsed()) return cmd_hilbert(opt, io);
    if (check->parsed()) return cmd_check_identities(opt, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool negative = e.code() == ErrorCode::NotInCone || e.code() == ErrorCode::Internal;
    return negative ? kNegative : kInputError;
  }
  return kInputError;
}

}  // namespace purecoeffs::cli
