#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/monomial.hpp"
#include "strata/stratum.hpp"
#include "strata/term_order.hpp"

namespace strata {

enum class SegmentKind { Lex, RevLex };

/// `segment: lex a_q ... a_1` or `segment: revlex mu`.
struct SegmentSpec {
  SegmentKind kind = SegmentKind::Lex;
  std::vector<std::int64_t> values;
  friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

/// A problem file:
///
///     # comment
///     vars: x y z t
///     order: revlex            (lex | revlex | grlex | matrix:[[..],..])
///     mode: general            (general | homogeneous)
///     ideal: x^2*y, x*y^2      (or: segment: lex 0 0 2 | segment: revlex 4)
///     tails: [x], []           (optional, one list per generator)
///     exclude: y^3, z^3        (optional)
///     options: no-level-opt oracle-all-pairs
struct ProblemSpec {
  std::vector<std::string> vars;
  std::string order = "revlex";
  TailMode mode = TailMode::General;
  std::vector<Monomial> ideal;
  std::optional<SegmentSpec> segment;
  std::optional<std::vector<std::vector<Monomial>>> tails;
  std::vector<Monomial> exclude;
  StratumOptions options;

  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b);
};

/// Throws ParseError (with position) for malformed text and SemanticError
/// for text that names unknown variables, non-monomials, etc.
ProblemSpec parse_problem(const std::string& text);

/// Canonical text; parse_problem(render_problem(p)) == p.
std::string render_problem(const ProblemSpec& spec);

/// Monomial from `x^2*y` syntax (`1` for the unit). Throws SemanticError.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars);

/// The generators, expanding segment shorthands.
MonomialIdeal problem_ideal(const ProblemSpec& spec);
TermOrder problem_order(const ProblemSpec& spec);
TailSpec problem_tails(const ProblemSpec& spec);
GenericBasis problem_basis(const ProblemSpec& spec);

}  // namespace strata
