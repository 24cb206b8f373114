#include "purecoeffs/betti.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "purecoeffs/error.hpp"

namespace purecoeffs {

PureType::PureType(std::vector<std::int64_t> shifts) : shifts_(std::move(shifts)) {
  if (shifts_.empty()) throw Error(ErrorCode::InvalidArgument, "a pure type needs at least d_0");
  for (std::size_t k = 1; k < shifts_.size(); ++k)
    if (shifts_[k] <= shifts_[k - 1])
      throw Error(ErrorCode::NotStrictlyIncreasing,
                  "shift sequence (" + str() + ") is not strictly increasing");
}

std::string PureType::str() const {
  std::string out;
  for (std::size_t k = 0; k < shifts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(shifts_[k]);
  }
  return out;
}

PureType make_pure_type(std::vector<std::int64_t> shifts) { return PureType(std::move(shifts)); }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(ErrorCode::ParseError, "malformed " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PureType parse_pure_type(std::string_view text) {
  std::vector<std::int64_t> shifts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    shifts.push_back(parse_int(trim(text.substr(start, comma - start)), "shift"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PureType(std::move(shifts));
}

BettiDiagram::BettiDiagram(int n_vars, int codim, BettiEntries entries)
    : n_vars_(n_vars), codim_(codim), entries_(std::move(entries)) {
  if (n_vars_ < 1) throw Error(ErrorCode::InvalidCodim, "number of variables must be positive");
  if (codim_ < 0 || codim_ > n_vars_)
    throw Error(ErrorCode::InvalidCodim, "codimension " + std::to_string(codim_) +
                                             " outside 0.." + std::to_string(n_vars_));
  for (auto it = entries_.begin(); it != entries_.end();) {
    const auto& [idx, value] = *it;
    if (idx.i < 0 || idx.i > codim_)
      throw Error(ErrorCode::InvalidCodim, "homological index " + std::to_string(idx.i) +
                                               " outside 0.." + std::to_string(codim_));
    if (value.sign() < 0)
      throw Error(ErrorCode::NegativeEntry, "negative Betti number " + value.str() + " at (" +
                                                std::to_string(idx.i) + ", " +
                                                std::to_string(idx.j) + ")");
    it = value.is_zero() ? entries_.erase(it) : std::next(it);
  }
  if (entries_.empty() || entries_.begin()->first.i != 0)
    throw Error(ErrorCode::ZeroBetaZero, "row 0 of the diagram is empty");
}

Rational BettiDiagram::at(int i, std::int64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Rational> pure_betti_numbers(const PureType& t) {
  const int s = t.codim();
  std::vector<Rational> out(static_cast<std::size_t>(s) + 1);
  out[0] = Rational(1);
  for (int i = 1; i <= s; ++i) {
    Rational v(i % 2 == 1 ? 1 : -1);  // (-1)^(i+1)
    for (int k = 1; k <= s; ++k) {
      if (k == i) continue;
      v *= Rational(t[k] - t[0], t[k] - t[i]);
    }
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

BettiDiagram diagram_from_pure(const PureType& t, const Rational& beta0, int n_vars) {
  if (beta0.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "beta0 must be positive");
  if (n_vars < t.codim())
    throw Error(ErrorCode::InvalidCodim, "type of codimension " + std::to_string(t.codim()) +
                                             " needs at least that many variables");
  const auto pi = pure_betti_numbers(t);
  BettiEntries entries;
  for (int i = 0; i <= t.codim(); ++i) entries[{i, t[static_cast<std::size_t>(i)]}] = beta0 * pi[static_cast<std::size_t>(i)];
  return BettiDiagram(n_vars, t.codim(), std::move(entries));
}

ShiftBounds shifts(const BettiDiagram& D) {
  const auto rows = static_cast<std::size_t>(D.codim()) + 1;
  ShiftBounds b{std::vector<std::int64_t>(rows, std::numeric_limits<std::int64_t>::max()),
                std::vector<std::int64_t>(rows, std::numeric_limits<std::int64_t>::min())};
  std::vector<bool> seen(rows, false);
  for (const auto& [idx, value] : D.entries()) {
    const auto i = static_cast<std::size_t>(idx.i);
    seen[i] = true;
    b.minimal[i] = std::min(b.minimal[i], idx.j);
    b.maximal[i] = std::max(b.maximal[i], idx.j);
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (!seen[i])
      throw Error(ErrorCode::EmptyRow, "homological degree " + std::to_string(i) +
                                           " has no Betti numbers but codimension is " +
                                           std::to_string(D.codim()));
  return b;
}

std::vector<Rational> hk_validate(const BettiDiagram& D) {
  std::vector<Rational> moments(static_cast<std::size_t>(D.codim()));
  for (const auto& [idx, value] : D.entries()) {
    Rational term = idx.i % 2 == 0 ? value : -value;
    const Rational j(idx.j);
    for (auto& m : moments) {
      m += term;
      term *= j;
    }
  }
  return moments;
}

bool is_hk_valid(const BettiDiagram& D) {
  const auto m = hk_validate(D);
  return std::all_of(m.begin(), m.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational beta0(const BettiDiagram& D) {
  Rational total;
  for (const auto& [idx, value] : D.entries())
    if (idx.i == 0) total += value;
  return total;
}

BettiDiagram scale(const Rational& c, const BettiDiagram& D) {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "diagram scale factor must be positive");
  BettiEntries out;
  for (const auto& [idx, value] : D.entries()) out[idx] = c * value;
  return BettiDiagram(D.n_vars(), D.codim(), std::move(out));
}

BettiDiagram normalize(const BettiDiagram& D) {
  const Rational b0 = beta0(D);
  if (b0.is_zero()) throw Error(ErrorCode::ZeroBetaZero, "beta_0 is zero");
  return scale(Rational(1) / b0, D);
}

BettiDiagram add(const BettiDiagram& A, const BettiDiagram& B) {
  if (A.n_vars() != B.n_vars() || A.codim() != B.codim())
    throw Error(ErrorCode::InvalidArgument, "diagrams differ in variables or codimension");
  BettiEntries out = A.entries();
  for (const auto& [idx, value] : B.entries()) out[idx] += value;
  return BettiDiagram(A.n_vars(), A.codim(), std::move(out));
}

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t json_int(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw Error(ErrorCode::ParseError, where + ": expected an integer");
  return v.get<std::int64_t>();
}

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, where + ": " + e.what());
    }
  }
  throw Error(ErrorCode::ParseError, where + ": value must be an integer or a \"p/q\" string");
}

int to_int(std::int64_t v, const std::string& where) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw Error(ErrorCode::ParseError, where + ": integer out of range");
  return static_cast<int>(v);
}

BettiDiagram parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "JSON syntax error at " + line_col(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top-level JSON value must be an object");
  for (const char* key : {"variables", "codimension", "betti"})
    if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  const int n = to_int(json_int(doc["variables"], "variables"), "variables");
  const int s = to_int(json_int(doc["codimension"], "codimension"), "codimension");
  const json& rows = doc["betti"];
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "\"betti\" must be an array");
  BettiEntries entries;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string where = "betti[" + std::to_string(k) + "]";
    const json& e = rows[k];
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("value"))
      throw Error(ErrorCode::ParseError, where + ": expected {\"i\", \"j\", \"value\"}");
    const int i = to_int(json_int(e["i"], where + ".i"), where + ".i");
    const std::int64_t j = json_int(e["j"], where + ".j");
    entries[{i, j}] += json_rational(e["value"], where + ".value");
  }
  return BettiDiagram(n, s, std::move(entries));
}

BettiDiagram parse_tsv(std::string_view text) {
  std::optional<int> n, s;
  BettiEntries entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    try {
      if (line.front() == '#') {
        std::string_view rest = trim(line.substr(1));
        while (!rest.empty()) {
          const auto sp = rest.find_first_of(" \t");
          const std::string_view tok = rest.substr(0, sp);
          rest = sp == std::string_view::npos ? std::string_view() : trim(rest.substr(sp));
          if (tok.starts_with("vars=")) n = to_int(parse_int(tok.substr(5), "vars"), where);
          else if (tok.starts_with("codim=")) s = to_int(parse_int(tok.substr(6), "codim"), where);
        }
        continue;
      }
      std::vector<std::string_view> fields;
      std::size_t f = 0;
      while (true) {
        const auto tab = line.find('\t', f);
        fields.push_back(trim(line.substr(f, tab - f)));
        if (tab == std::string_view::npos) break;
        f = tab + 1;
      }
      if (fields.size() != 3) throw Error(ErrorCode::ParseError, "expected 3 tab-separated fields");
      const int i = to_int(parse_int(fields[0], "index i"), where);
      const std::int64_t j = parse_int(fields[1], "degree j");
      entries[{i, j}] += Rational::parse(fields[2]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError) throw;
      throw Error(ErrorCode::ParseError, where + ": " + e.what());
    }
  }
  if (!n || !s) throw Error(ErrorCode::ParseError, "missing header line '# vars=<n> codim=<s>'");
  return BettiDiagram(*n, *s, std::move(entries));
}

}  // namespace

BettiDiagram parse_diagram(std::string_view text, DiagramFormat format) {
  return format == DiagramFormat::json ? parse_json(text) : parse_tsv(text);
}

std::string serialize_diagram(const BettiDiagram& D, DiagramFormat format) {
  if (format == DiagramFormat::tsv) {
    std::ostringstream os;
    os << "# vars=" << D.n_vars() << " codim=" << D.codim() << "\n";
    for (const auto& [idx, value] : D.entries()) os << idx.i << "\t" << idx.j << "\t" << value.str() << "\n";
    return os.str();
  }
  nlohmann::ordered_json doc;
  doc["variables"] = D.n_vars();
  doc["codimension"] = D.codim();
  doc["betti"] = nlohmann::ordered_json::array();
  for (const auto& [idx, value] : D.entries()) {
    nlohmann::ordered_json e;
    e["i"] = idx.i;
    e["j"] = idx.j;
    if (value.fits_int64()) e["value"] = value.to_int64();
    else e["value"] = value.str();
    doc["betti"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

std::string render_table(const BettiDiagram& D) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [idx, value] : D.entries()) {
    lo = std::min(lo, idx.j - idx.i);
    hi = std::max(hi, idx.j - idx.i);
  }
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (std::int64_t r = lo; r <= hi; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= D.codim(); ++i) {
      const Rational v = D.at(i, i + r);
      row.push_back(v.is_zero() ? "." : v.str());
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }
  std::ostringstream os;
  const std::size_t label = std::max<std::size_t>(std::to_string(lo).size(), std::to_string(hi).size()) + 1;
  os << std::string(label + 1, ' ');
  for (int i = 0; i <= D.codim(); ++i) os << " " << std::setw(static_cast<int>(width)) << i;
  os << "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::setw(static_cast<int>(label)) << (lo + static_cast<std::int64_t>(r)) << ":";
    for (const auto& c : cells[r]) os << " " << std::setw(static_cast<int>(width)) << c;
    os << "\n";
  }
  return os.str();
}

}  // namespace purecoeffs
