#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace strata {

using Exponent = std::int32_t;

/// A vector in Z^n; levels of parameters live here.
using IntVector = std::vector<std::int64_t>;

/// Power product X^a over a fixed ambient variable list, stored densely.
///
/// The built-in comparison is plain lexicographic comparison of exponent
/// vectors. It only provides a canonical storage order; term orders are
/// applied through TermOrder.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t num_vars) { return Monomial(num_vars); }
  static Monomial variable(std::size_t num_vars, std::size_t index,
                           Exponent power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// this / divisor; the divisor must divide this monomial.
  Monomial quotient(const Monomial& divisor) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// Exponent difference this - other as a vector in Z^n.
  IntVector minus(const Monomial& other) const;

  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Monomial ideal kept by its minimal generators.
///
/// Generators keep the order in which they were first supplied; redundant
/// inputs (multiples of another generator, duplicates) are dropped.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  bool is_unit() const;

  /// Set equality of the minimal generators.
  bool same_ideal(const MonomialIdeal& other) const;

  /// The ideal m * I.
  MonomialIdeal times(const Monomial& m) const;
  /// The ideal I + K.
  MonomialIdeal plus(const MonomialIdeal& other) const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace strata
