#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "strata/monomial.hpp"
#include "strata/param_poly.hpp"
#include "strata/term_order.hpp"

namespace strata {

/// Polynomial in the X variables whose coefficients are ParamPolys.
class GenericPolynomial {
 public:
  using TermMap = std::map<Monomial, ParamPoly>;

  GenericPolynomial() = default;
  explicit GenericPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  GenericPolynomial(std::size_t num_vars, TermMap terms);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m (zero if absent).
  ParamPoly coefficient(const Monomial& m) const;

  /// Adds c * m to the polynomial.
  void add_term(const Monomial& m, const ParamPoly& c);

  GenericPolynomial& operator+=(const GenericPolynomial& other);
  GenericPolynomial& operator-=(const GenericPolynomial& other);
  friend GenericPolynomial operator+(GenericPolynomial a,
                                     const GenericPolynomial& b) {
    return a += b;
  }
  friend GenericPolynomial operator-(GenericPolynomial a,
                                     const GenericPolynomial& b) {
    return a -= b;
  }

  /// Every X-monomial multiplied by m, every coefficient by c.
  GenericPolynomial mul_by_term(const Monomial& m, const ParamPoly& c) const;

  GenericPolynomial evaluate_at_zero(
      const std::function<bool(ParamIndex)>& zeroed) const;

  /// Monomials in decreasing order under `order`.
  std::vector<Monomial> sorted_monomials(const TermOrder& order) const;

  std::string to_string(std::span<const std::string> xnames,
                        std::span<const std::string> cnames) const;

  friend bool operator==(const GenericPolynomial&,
                         const GenericPolynomial&) = default;

 private:
  void check_compatible(const GenericPolynomial& other) const;
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

/// Monic polynomial with a marked leading X-monomial: lead + tail, every
/// tail monomial strictly below lead under the order it was marked with.
class MarkedPolynomial {
 public:
  MarkedPolynomial() = default;
  /// Throws InvalidArgument if some tail monomial is not below lead.
  MarkedPolynomial(Monomial lead, GenericPolynomial tail,
                   const TermOrder& order);

  const Monomial& lead() const { return lead_; }
  const GenericPolynomial& tail() const { return tail_; }
  std::size_t num_vars() const { return lead_.num_vars(); }

  /// lead + tail as one polynomial.
  GenericPolynomial full() const;

 private:
  Monomial lead_;
  GenericPolynomial tail_;
};

}  // namespace strata
