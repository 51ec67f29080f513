#include "strata/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "strata/errors.hpp"

namespace strata {

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index,
                            Exponent power) {
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  Monomial m(num_vars);
  m.exps_[index] = power;
  return m;
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    q.exps_[i] -= divisor.exps_[i];
    if (q.exps_[i] < 0) throw InvalidArgument("monomial does not divide");
  }
  return q;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.exps_.size() != exps_.size()) {
    throw InvalidArgument("monomials over different variable lists");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

IntVector Monomial::minus(const Monomial& other) const {
  IntVector v(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    v[i] = std::int64_t{exps_[i]} - other.exps_[i];
  }
  return v;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s.push_back(i);
  }
  return s;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars,
                             std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  for (const Monomial& g : generators) {
    if (g.num_vars() != num_vars) {
      throw InvalidArgument("ideal generator over a different variable list");
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i == j || !generators[j].divides(generators[i])) continue;
      // Equal generators: keep the first occurrence only.
      redundant = generators[i] != generators[j] || j < i;
    }
    if (!redundant) gens_.push_back(generators[i]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::same_ideal(const MonomialIdeal& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  auto a = gens_;
  auto b = other.gens_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
  std::vector<Monomial> g;
  g.reserve(gens_.size());
  for (const Monomial& x : gens_) g.push_back(x * m);
  return MonomialIdeal(num_vars_, std::move(g));
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& other) const {
  std::vector<Monomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(std::max(num_vars_, other.num_vars_), std::move(g));
}

}  // namespace strata
