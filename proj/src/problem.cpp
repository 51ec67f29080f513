#include "strata/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "strata/errors.hpp"
#include "strata/segments.hpp"

namespace strata {
namespace {

struct Line {
  std::size_t number = 0;
  /// Column (1-based) where the value starts.
  std::size_t value_column = 0;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset = b;
  return s.substr(b, e - b);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Splits on commas outside brackets, reporting each piece's column.
std::vector<std::pair<std::string, std::size_t>> split_list(const Line& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  const std::string& v = line.value;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    if (i < v.size() && v[i] == '[') ++depth;
    if (i < v.size() && v[i] == ']') --depth;
    if (depth < 0) throw ParseError(line.number, line.value_column + i, "unbalanced ']'");
    if (i == v.size() || (v[i] == ',' && depth == 0)) {
      std::size_t off = 0;
      std::string piece = trim(v.substr(start, i - start), &off);
      if (piece.empty()) throw ParseError(line.number, line.value_column + start, "empty list entry");
      out.emplace_back(piece, line.value_column + start + off);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError(line.number, line.value_column + v.size(), "unbalanced '['");
  return out;
}

std::int64_t parse_integer(const std::string& w, std::size_t line, std::size_t col) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) {
    throw ParseError(line, col, "expected an integer, got '" + w + "'");
  }
  return v;
}

std::vector<Monomial> parse_monomial_list(const Line& line, const std::vector<std::string>& vars) {
  std::vector<Monomial> out;
  for (const auto& [piece, col] : split_list(line)) {
    try {
      out.push_back(parse_monomial(piece, vars));
    } catch (const SemanticError& e) {
      throw SemanticError(std::to_string(line.number) + ":" + std::to_string(col) + ": " + e.what());
    }
  }
  return out;
}

std::string render_list(const std::vector<Monomial>& ms, const std::vector<std::string>& vars) {
  std::string out;
  for (const Monomial& m : ms) {
    if (!out.empty()) out += ", ";
    out += m.to_string(vars);
  }
  return out;
}

}  // namespace

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  return a.vars == b.vars && a.order == b.order && a.mode == b.mode && a.ideal == b.ideal &&
         a.segment == b.segment && a.tails == b.tails && a.exclude == b.exclude &&
         a.options.level_by_level == b.options.level_by_level &&
         a.options.all_pairs == b.options.all_pairs;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  const std::string t = trim(text);
  std::vector<Exponent> e(vars.size(), 0);
  if (t == "1") return Monomial(e);
  if (t.find_first_of("+-") != std::string::npos) {
    throw SemanticError("'" + t + "' is not a monomial");
  }
  std::size_t pos = 0;
  while (true) {
    std::size_t star = t.find('*', pos);
    std::string factor = trim(t.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
    std::string name = factor;
    std::int64_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      const std::string p = trim(factor.substr(caret + 1));
      auto [q, ec] = std::from_chars(p.data(), p.data() + p.size(), power);
      if (ec != std::errc() || q != p.data() + p.size() || power < 0) {
        throw SemanticError("bad exponent in '" + factor + "'");
      }
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
      if (is_identifier(name)) throw SemanticError("unknown variable '" + name + "'");
      throw SemanticError("'" + t + "' is not a monomial");
    }
    e[static_cast<std::size_t>(it - vars.begin())] += static_cast<Exponent>(power);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Monomial(e);
}

ProblemSpec parse_problem(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty()) continue;
    const auto colon = raw.find(':');
    if (colon == std::string::npos) {
      std::size_t off = 0;
      trim(raw, &off);
      throw ParseError(number, off + 1, "expected 'key: value'");
    }
    Line l;
    l.number = number;
    std::size_t koff = 0;
    l.key = trim(raw.substr(0, colon), &koff);
    std::size_t voff = 0;
    l.value = trim(raw.substr(colon + 1), &voff);
    l.value_column = colon + 2 + voff;
    static const std::set<std::string> keys{"vars", "order", "mode", "ideal", "segment",
                                            "tails", "exclude", "options"};
    if (!keys.count(l.key)) throw ParseError(number, koff + 1, "unknown key '" + l.key + "'");
    for (const Line& prev : lines) {
      if (prev.key == l.key) throw ParseError(number, koff + 1, "duplicate key '" + l.key + "'");
    }
    lines.push_back(std::move(l));
  }
  auto find = [&](const std::string& key) -> const Line* {
    for (const Line& l : lines) {
      if (l.key == key) return &l;
    }
    return nullptr;
  };

  ProblemSpec spec;
  const Line* vars = find("vars");
  if (!vars) throw SemanticError("missing 'vars' line");
  spec.vars = split_words(vars->value);
  if (spec.vars.empty()) throw ParseError(vars->number, vars->value_column, "no variables");
  for (const std::string& v : spec.vars) {
    if (!is_identifier(v)) {
      throw ParseError(vars->number, vars->value_column + vars->value.find(v),
                       "bad variable name '" + v + "'");
    }
    if (std::count(spec.vars.begin(), spec.vars.end(), v) > 1) {
      throw SemanticError("variable '" + v + "' listed twice");
    }
  }

  if (const Line* order = find("order")) {
    const std::string& o = order->value;
    if (o != "lex" && o != "revlex" && o != "grlex" && o.rfind("matrix:", 0) != 0) {
      throw ParseError(order->number, order->value_column, "unknown term order '" + o + "'");
    }
    spec.order = o;
    try {
      spec.order = TermOrder::parse(o, spec.vars.size()).to_string();
    } catch (const InvalidArgument& e) {
      throw SemanticError(std::to_string(order->number) + ":" +
                          std::to_string(order->value_column) + ": " + e.what());
    }
  }

  if (const Line* mode = find("mode")) {
    if (mode->value == "general") {
      spec.mode = TailMode::General;
    } else if (mode->value == "homogeneous") {
      spec.mode = TailMode::Homogeneous;
    } else {
      throw ParseError(mode->number, mode->value_column, "mode must be general or homogeneous");
    }
  }

  const Line* ideal = find("ideal");
  const Line* segment = find("segment");
  if (ideal && segment) throw SemanticError("both 'ideal' and 'segment' given");
  if (!ideal && !segment) throw SemanticError("missing 'ideal' or 'segment' line");
  if (ideal) spec.ideal = parse_monomial_list(*ideal, spec.vars);
  if (segment) {
    const auto words = split_words(segment->value);
    if (words.empty() || (words[0] != "lex" && words[0] != "revlex")) {
      throw ParseError(segment->number, segment->value_column, "segment must be lex or revlex");
    }
    SegmentSpec s;
    s.kind = words[0] == "lex" ? SegmentKind::Lex : SegmentKind::RevLex;
    for (std::size_t k = 1; k < words.size(); ++k) {
      s.values.push_back(parse_integer(words[k], segment->number,
                                       segment->value_column + segment->value.find(words[k])));
    }
    if (s.kind == SegmentKind::RevLex && s.values.size() != 1) {
      throw ParseError(segment->number, segment->value_column, "segment: revlex takes one value");
    }
    if (s.kind == SegmentKind::Lex && s.values.empty()) {
      throw ParseError(segment->number, segment->value_column, "segment: lex needs exponents");
    }
    spec.segment = s;
  }

  if (const Line* tails = find("tails")) {
    std::vector<std::vector<Monomial>> lists;
    for (const auto& [piece, col] : split_list(*tails)) {
      if (piece.front() != '[' || piece.back() != ']') {
        throw ParseError(tails->number, col, "expected a bracketed list");
      }
      Line inner{tails->number, col + 1, "tails", trim(piece.substr(1, piece.size() - 2))};
      lists.push_back(inner.value.empty() ? std::vector<Monomial>{}
                                          : parse_monomial_list(inner, spec.vars));
    }
    spec.tails = std::move(lists);
  }
  if (const Line* exclude = find("exclude")) spec.exclude = parse_monomial_list(*exclude, spec.vars);
  if (const Line* options = find("options")) {
    for (const std::string& w : split_words(options->value)) {
      if (w == "no-level-opt") {
        spec.options.level_by_level = false;
      } else if (w == "oracle-all-pairs") {
        spec.options.all_pairs = true;
      } else {
        throw ParseError(options->number, options->value_column + options->value.find(w),
                         "unknown option '" + w + "'");
      }
    }
  }
  return spec;
}

std::string render_problem(const ProblemSpec& spec) {
  std::string out = "vars:";
  for (const std::string& v : spec.vars) out += " " + v;
  out += "\norder: " + spec.order;
  out += std::string("\nmode: ") + (spec.mode == TailMode::General ? "general" : "homogeneous");
  if (spec.segment) {
    out += std::string("\nsegment: ") + (spec.segment->kind == SegmentKind::Lex ? "lex" : "revlex");
    for (std::int64_t v : spec.segment->values) out += " " + std::to_string(v);
  } else {
    out += "\nideal: " + render_list(spec.ideal, spec.vars);
  }
  if (spec.tails) {
    out += "\ntails: ";
    for (std::size_t i = 0; i < spec.tails->size(); ++i) {
      if (i) out += ", ";
      out += "[" + render_list((*spec.tails)[i], spec.vars) + "]";
    }
  }
  if (!spec.exclude.empty()) out += "\nexclude: " + render_list(spec.exclude, spec.vars);
  std::string opts;
  if (!spec.options.level_by_level) opts += " no-level-opt";
  if (spec.options.all_pairs) opts += " oracle-all-pairs";
  if (!opts.empty()) out += "\noptions:" + opts;
  return out + "\n";
}

MonomialIdeal problem_ideal(const ProblemSpec& spec) {
  const std::size_t n = spec.vars.size();
  if (!spec.segment) {
    MonomialIdeal ideal(n, spec.ideal);
    if (spec.tails && ideal.size() != spec.ideal.size()) {
      throw SemanticError("tails given for a non-minimal generator list");
    }
    return ideal;
  }
  try {
    if (spec.segment->kind == SegmentKind::Lex) {
      return lex_segment_ideal(LexSegmentSpec{n - 1, spec.segment->values});
    }
    return revlex_segment_ideal(RevLexSegmentSpec{spec.segment->values.front(), n - 1});
  } catch (const InvalidArgument& e) {
    throw SemanticError(std::string("segment: ") + e.what());
  }
}

TermOrder problem_order(const ProblemSpec& spec) {
  try {
    return TermOrder::parse(spec.order, spec.vars.size());
  } catch (const InvalidArgument& e) {
    throw SemanticError(e.what());
  }
}

TailSpec problem_tails(const ProblemSpec& spec) {
  TailSpec t;
  t.mode = spec.mode;
  t.excluded = spec.exclude;
  if (spec.tails) {
    const std::size_t count = spec.segment ? problem_ideal(spec).size() : spec.ideal.size();
    if (spec.tails->size() != count) {
      throw SemanticError("'tails' has " + std::to_string(spec.tails->size()) +
                          " lists for " + std::to_string(count) + " generators");
    }
    for (const auto& list : *spec.tails) t.allowed.emplace_back(list);
  }
  return t;
}

GenericBasis problem_basis(const ProblemSpec& spec) {
  const MonomialIdeal ideal = problem_ideal(spec);
  const TermOrder order = problem_order(spec);
  const TailSpec tails = problem_tails(spec);
  try {
    return build_generic_basis(ideal, tails, order);
  } catch (const InvalidArgument& e) {
    throw SemanticError(e.what());
  }
}

}  // namespace strata
