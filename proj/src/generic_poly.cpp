#include "strata/generic_poly.hpp"

#include <algorithm>

#include "strata/errors.hpp"

namespace strata {

GenericPolynomial::GenericPolynomial(std::size_t num_vars, TermMap terms)
    : num_vars_(num_vars) {
  for (auto& [m, c] : terms) {
    if (m.num_vars() != num_vars) {
      throw InvalidArgument("term over a different variable list");
    }
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

void GenericPolynomial::check_compatible(const GenericPolynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw InvalidArgument("generic polynomials over different variable lists");
  }
}

ParamPoly GenericPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly{} : it->second;
}

void GenericPolynomial::add_term(const Monomial& m, const ParamPoly& c) {
  if (m.num_vars() != num_vars_) {
    throw InvalidArgument("term over a different variable list");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GenericPolynomial& GenericPolynomial::operator+=(const GenericPolynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GenericPolynomial& GenericPolynomial::operator-=(const GenericPolynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GenericPolynomial GenericPolynomial::mul_by_term(const Monomial& m,
                                                 const ParamPoly& c) const {
  if (m.num_vars() != num_vars_) {
    throw InvalidArgument("term over a different variable list");
  }
  GenericPolynomial out(num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [x, coeff] : terms_) {
    ParamPoly p = coeff * c;
    if (!p.is_zero()) out.terms_.emplace(x * m, std::move(p));
  }
  return out;
}

GenericPolynomial GenericPolynomial::evaluate_at_zero(
    const std::function<bool(ParamIndex)>& zeroed) const {
  GenericPolynomial out(num_vars_);
  for (const auto& [m, c] : terms_) {
    ParamPoly p = c.evaluate_at_zero(zeroed);
    if (!p.is_zero()) out.terms_.emplace(m, std::move(p));
  }
  return out;
}

std::vector<Monomial> GenericPolynomial::sorted_monomials(
    const TermOrder& order) const {
  std::vector<Monomial> ms;
  for (const auto& [m, c] : terms_) ms.push_back(m);
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return order.compare(a, b) > 0;
  });
  return ms;
}

std::string GenericPolynomial::to_string(
    std::span<const std::string> xnames,
    std::span<const std::string> cnames) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const ParamPoly& c = it->second;
    const std::string mono = it->first.to_string(xnames);
    if (c == ParamPoly::constant(1)) {
      out += mono;
    } else {
      out += "(" + c.to_string(cnames) + ")";
      if (!it->first.is_one()) out += "*" + mono;
    }
  }
  return out;
}

MarkedPolynomial::MarkedPolynomial(Monomial lead, GenericPolynomial tail,
                                   const TermOrder& order)
    : lead_(std::move(lead)), tail_(std::move(tail)) {
  if (tail_.num_vars() != lead_.num_vars()) {
    throw InvalidArgument("marked polynomial over mixed variable lists");
  }
  for (const auto& [m, c] : tail_.terms()) {
    if (!order.less(m, lead_)) {
      throw InvalidArgument("tail monomial is not below the marked lead");
    }
  }
}

GenericPolynomial MarkedPolynomial::full() const {
  GenericPolynomial f = tail_;
  f.add_term(lead_, ParamPoly::constant(1));
  return f;
}

}  // namespace strata
