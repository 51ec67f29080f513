#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strata/monomial.hpp"

namespace strata {

enum class OrderKind { Lex, RevLex, GrLex, Matrix };

/// Term order on monomials in n variables, variable 0 being the largest.
///
/// Every order is held as an integer matrix: monomials are compared by the
/// first row on which their weights differ. Lex, RevLex (degree reverse
/// lexicographic) and GrLex expand to their standard matrices. The same
/// matrix induces the total order on Z^n used for levels.
class TermOrder {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  TermOrder() = default;

  static TermOrder lex(std::size_t num_vars);
  static TermOrder revlex(std::size_t num_vars);
  static TermOrder grlex(std::size_t num_vars);
  /// Validates that the rows have full column rank and that every variable
  /// is greater than 1; throws InvalidArgument otherwise.
  static TermOrder matrix(Matrix rows);

  OrderKind kind() const { return kind_; }
  const Matrix& rows() const { return rows_; }
  std::size_t num_vars() const { return num_vars_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Compare two vectors of Z^n in the induced group order.
  std::strong_ordering compare(std::span<const std::int64_t> a,
                               std::span<const std::int64_t> b) const;
  /// Sign of v in the induced group order.
  std::strong_ordering sign(std::span<const std::int64_t> v) const;

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  /// True iff every monomial has finitely many smaller monomials, i.e. the
  /// first row is strictly positive.
  bool is_reliable() const;

  /// First row is constant and positive, so the order refines total degree.
  bool is_degree_compatible() const;

  /// Order spec text: lex, revlex, grlex or matrix:[[..],[..]].
  std::string to_string() const;
  static TermOrder parse(const std::string& text, std::size_t num_vars);

 private:
  TermOrder(OrderKind kind, Matrix rows);

  OrderKind kind_ = OrderKind::Lex;
  std::size_t num_vars_ = 0;
  Matrix rows_;
};

/// Order on the same variables in which every monomial containing a `block`
/// variable exceeds every block-free one. Inside each block the given order
/// (restricted to that block's variables) decides. An empty block returns
/// the order unchanged.
TermOrder elimination_order(const TermOrder& order,
                            const std::vector<bool>& block);

/// Restriction applied while enumerating tails.
struct TailFilter {
  /// Multiples of these monomials are removed.
  std::vector<Monomial> excluded_ideal;
  /// When present, only these monomials may appear (the tail is intersected
  /// with this finite set).
  std::optional<std::vector<Monomial>> allowed;

  bool admits(const Monomial& m) const;
};

/// Monomials strictly below m that pass the filter, sorted decreasingly.
/// Throws NotReliable when the order is not reliable and no finite `allowed`
/// set bounds the result.
std::vector<Monomial> tail(const TermOrder& order, const Monomial& m,
                           const TailFilter& filter = {});

/// Monomials of the same degree as m strictly below m that pass the filter,
/// sorted decreasingly. Always finite.
std::vector<Monomial> htail(const TermOrder& order, const Monomial& m,
                            const TailFilter& filter = {});

/// All monomials of total degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars,
                                          std::int64_t degree);

}  // namespace strata
