#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/monomial.hpp"

namespace strata {

/// Exact rationals; GMP keeps them canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

using ParamIndex = std::uint32_t;

/// Power product in the parameter variables, stored sparsely as
/// (index, exponent) pairs with strictly increasing indices.
///
/// Parameter rings routinely have hundreds of variables while each monomial
/// involves only a few of them.
class ParamMonomial {
 public:
  using Factor = std::pair<ParamIndex, Exponent>;

  ParamMonomial() = default;
  explicit ParamMonomial(std::vector<Factor> factors);

  static ParamMonomial variable(ParamIndex index, Exponent power = 1);
  static ParamMonomial from_dense(const Monomial& m);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::int64_t degree() const;
  Exponent exponent(ParamIndex index) const;
  bool contains(ParamIndex index) const { return exponent(index) != 0; }
  /// Largest variable index occurring plus one (0 for the unit monomial).
  ParamIndex span_end() const {
    return factors_.empty() ? 0 : factors_.back().first + 1;
  }

  Monomial to_dense(std::size_t num_vars) const;

  ParamMonomial& operator*=(const ParamMonomial& other);
  friend ParamMonomial operator*(const ParamMonomial& a,
                                 const ParamMonomial& b);

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  /// Lexicographic monomial order with variable 0 largest. This is the
  /// canonical storage order of ParamPoly and is compatible with
  /// multiplication.
  friend std::strong_ordering operator<=>(const ParamMonomial& a,
                                          const ParamMonomial& b);

 private:
  std::vector<Factor> factors_;
};

/// Polynomial over Q in the parameter variables.
///
/// Terms are kept sorted by decreasing ParamMonomial order with no zero
/// coefficients, so equal polynomials have identical representations.
class ParamPoly {
 public:
  struct Term {
    ParamMonomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ParamPoly() = default;
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  explicit ParamPoly(std::vector<Term> terms);

  static ParamPoly constant(const Rational& c);
  static ParamPoly variable(ParamIndex index);
  static ParamPoly monomial(ParamMonomial m, const Rational& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::int64_t total_degree() const;

  /// Degree-one part.
  ParamPoly linear_part() const;
  /// Everything except the degree-one part.
  ParamPoly nonlinear_part() const;
  /// Coefficient of a single variable in the linear part.
  Rational linear_coefficient(ParamIndex index) const;

  /// Sorted list of variables occurring in the polynomial.
  std::vector<ParamIndex> variables() const;
  bool involves(ParamIndex index) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  ParamPoly operator-() const;

  /// this += c * m * p, the fused update at the heart of every reduction.
  void add_scaled(const ParamPoly& p, const Rational& c,
                  const ParamMonomial& m);

  ParamPoly mul_monomial(const ParamMonomial& m) const;
  /// Division by a non-zero rational.
  ParamPoly divided_by(const Rational& c) const;

  /// Specialize the listed variables to zero: every term that contains one
  /// of them is removed.
  ParamPoly evaluate_at_zero(const std::function<bool(ParamIndex)>& zeroed) const;
  ParamPoly evaluate_at_zero(std::span<const ParamIndex> zeroed) const;

  /// Replace variables by polynomials; variables without an entry stay.
  ParamPoly substitute(const std::map<ParamIndex, ParamPoly>& values) const;

  /// Rename variables through `map` (old index -> new index). The map must be
  /// defined on every occurring variable.
  ParamPoly renamed(const std::function<ParamIndex(ParamIndex)>& map) const;

  /// Scale so that all coefficients are coprime integers and the graded-lex
  /// leading coefficient is positive.
  ParamPoly integer_normalized() const;

  /// Renders with terms in decreasing graded-lex order (variable 0 largest).
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  void add_impl(const ParamPoly& other, int sign);
  std::vector<Term> terms_;
};

/// Graded lexicographic comparison of parameter monomials (degree first,
/// then lex with variable 0 largest); the rendering order of reports.
std::strong_ordering grlex_compare(const ParamMonomial& a,
                                   const ParamMonomial& b);

}  // namespace strata
