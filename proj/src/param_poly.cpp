#include "strata/param_poly.hpp"

#include <algorithm>
#include <unordered_set>

#include "strata/errors.hpp"

namespace strata {

ParamMonomial::ParamMonomial(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const Factor& f : factors_) {
    if (f.second < 0) throw InvalidArgument("negative exponent");
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
}

ParamMonomial ParamMonomial::variable(ParamIndex index, Exponent power) {
  ParamMonomial m;
  if (power > 0) m.factors_.emplace_back(index, power);
  return m;
}

ParamMonomial ParamMonomial::from_dense(const Monomial& m) {
  ParamMonomial out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] != 0) out.factors_.emplace_back(static_cast<ParamIndex>(i), m[i]);
  }
  return out;
}

std::int64_t ParamMonomial::degree() const {
  std::int64_t d = 0;
  for (const Factor& f : factors_) d += f.second;
  return d;
}

Exponent ParamMonomial::exponent(ParamIndex index) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), index,
      [](const Factor& f, ParamIndex i) { return f.first < i; });
  return it != factors_.end() && it->first == index ? it->second : 0;
}

Monomial ParamMonomial::to_dense(std::size_t num_vars) const {
  std::vector<Exponent> e(num_vars, 0);
  for (const Factor& f : factors_) {
    if (f.first >= num_vars) throw InvalidArgument("parameter index out of range");
    e[f.first] = f.second;
  }
  return Monomial(std::move(e));
}

ParamMonomial& ParamMonomial::operator*=(const ParamMonomial& other) {
  *this = *this * other;
  return *this;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
  if (b.factors_.empty()) return a;
  if (a.factors_.empty()) return b;
  ParamMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

std::strong_ordering operator<=>(const ParamMonomial& a,
                                 const ParamMonomial& b) {
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->first != j->first) {
      // The side holding the smaller index has a positive exponent on a
      // variable where the other side has zero.
      return i->first < j->first ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering grlex_compare(const ParamMonomial& a,
                                   const ParamMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a <=> b;
}

std::string ParamMonomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += '*';
    out += f.first < names.size() ? names[f.first]
                                  : "c" + std::to_string(f.first + 1);
    if (f.second > 1) out += "^" + std::to_string(f.second);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.monomial > b.monomial;
  });
  for (Term& t : terms) {
    t.coeff.canonicalize();
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
    } else {
      if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

ParamPoly ParamPoly::constant(const Rational& c) {
  return monomial(ParamMonomial{}, c);
}

ParamPoly ParamPoly::variable(ParamIndex index) {
  return monomial(ParamMonomial::variable(index), 1);
}

ParamPoly ParamPoly::monomial(ParamMonomial m, const Rational& c) {
  ParamPoly p;
  if (c != 0) {
    p.terms_.push_back(Term{std::move(m), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational ParamPoly::constant_term() const {
  // The unit monomial is the smallest in the storage order.
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coeff;
  }
  return 0;
}

std::int64_t ParamPoly::total_degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

ParamPoly ParamPoly::linear_part() const {
  ParamPoly p;
  for (const Term& t : terms_) {
    if (t.monomial.degree() == 1) p.terms_.push_back(t);
  }
  return p;
}

ParamPoly ParamPoly::nonlinear_part() const {
  ParamPoly p;
  for (const Term& t : terms_) {
    if (t.monomial.degree() != 1) p.terms_.push_back(t);
  }
  return p;
}

Rational ParamPoly::linear_coefficient(ParamIndex index) const {
  const ParamMonomial v = ParamMonomial::variable(index);
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), v,
      [](const Term& t, const ParamMonomial& m) { return t.monomial > m; });
  return it != terms_.end() && it->monomial == v ? it->coeff : Rational(0);
}

std::vector<ParamIndex> ParamPoly::variables() const {
  std::vector<ParamIndex> vars;
  for (const Term& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool ParamPoly::involves(ParamIndex index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.contains(index);
  });
}

void ParamPoly::add_impl(const ParamPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    auto c = i->monomial <=> j->monomial;
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back(Term{j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(i->coeff + j->coeff)
                            : Rational(i->coeff - j->coeff);
      if (s != 0) out.push_back(Term{std::move(i->monomial), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != other.terms_.end(); ++j) {
    out.push_back(Term{j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
  }
  terms_ = std::move(out);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  add_impl(other, 1);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  add_impl(other, -1);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p(*this);
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void ParamPoly::add_scaled(const ParamPoly& p, const Rational& c,
                           const ParamMonomial& m) {
  if (p.terms_.empty() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  auto i = terms_.begin();
  auto j = p.terms_.begin();
  Rational scratch;
  while (j != p.terms_.end()) {
    ParamMonomial prod = j->monomial * m;
    while (i != terms_.end() && i->monomial > prod) out.push_back(std::move(*i++));
    scratch = j->coeff * c;
    if (i != terms_.end() && i->monomial == prod) {
      scratch += i->coeff;
      if (scratch != 0) out.push_back(Term{std::move(prod), scratch});
      ++i;
    } else {
      out.push_back(Term{std::move(prod), scratch});
    }
    ++j;
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  terms_ = std::move(out);
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    ParamPoly r;
    r.add_scaled(a, b.terms_[0].coeff, b.terms_[0].monomial);
    return r;
  }
  if (a.terms_.size() == 1) {
    ParamPoly r;
    r.add_scaled(b, a.terms_[0].coeff, a.terms_[0].monomial);
    return r;
  }
  std::vector<ParamPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prods.push_back(ParamPoly::Term{s.monomial * t.monomial, s.coeff * t.coeff});
    }
  }
  return ParamPoly(std::move(prods));
}

ParamPoly ParamPoly::mul_monomial(const ParamMonomial& m) const {
  ParamPoly r;
  r.add_scaled(*this, 1, m);
  return r;
}

ParamPoly ParamPoly::divided_by(const Rational& c) const {
  if (c == 0) throw InvalidArgument("division by zero");
  ParamPoly p(*this);
  for (Term& t : p.terms_) t.coeff /= c;
  return p;
}

ParamPoly ParamPoly::evaluate_at_zero(
    const std::function<bool(ParamIndex)>& zeroed) const {
  ParamPoly p;
  for (const Term& t : terms_) {
    bool keep = true;
    for (const auto& f : t.monomial.factors()) {
      if (zeroed(f.first)) {
        keep = false;
        break;
      }
    }
    if (keep) p.terms_.push_back(t);
  }
  return p;
}

ParamPoly ParamPoly::evaluate_at_zero(std::span<const ParamIndex> zeroed) const {
  std::unordered_set<ParamIndex> set(zeroed.begin(), zeroed.end());
  return evaluate_at_zero([&](ParamIndex i) { return set.count(i) != 0; });
}

ParamPoly ParamPoly::substitute(
    const std::map<ParamIndex, ParamPoly>& values) const {
  if (values.empty()) return *this;
  std::map<std::pair<ParamIndex, Exponent>, ParamPoly> powers;
  auto power = [&](ParamIndex v, Exponent e) -> const ParamPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    ParamPoly p = values.at(v);
    for (Exponent k = 1; k < e; ++k) p = p * values.at(v);
    return powers.emplace(key, std::move(p)).first->second;
  };
  std::vector<Term> acc;
  for (const Term& t : terms_) {
    std::vector<ParamMonomial::Factor> kept;
    ParamPoly product = ParamPoly::constant(t.coeff);
    for (const auto& f : t.monomial.factors()) {
      if (values.count(f.first)) {
        product = product * power(f.first, f.second);
        if (product.is_zero()) break;
      } else {
        kept.push_back(f);
      }
    }
    if (product.is_zero()) continue;
    ParamMonomial rest(std::move(kept));
    for (const Term& u : product.terms_) {
      acc.push_back(Term{u.monomial * rest, u.coeff});
    }
  }
  return ParamPoly(std::move(acc));
}

ParamPoly ParamPoly::renamed(
    const std::function<ParamIndex(ParamIndex)>& map) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<ParamMonomial::Factor> f;
    for (const auto& [v, e] : t.monomial.factors()) f.emplace_back(map(v), e);
    acc.push_back(Term{ParamMonomial(std::move(f)), t.coeff});
  }
  return ParamPoly(std::move(acc));
}

ParamPoly ParamPoly::integer_normalized() const {
  if (terms_.empty()) return {};
  mpz_class den = 1;
  for (const Term& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  mpz_class num = 0;
  for (const Term& t : terms_) {
    mpz_class n = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  const Term* lead = &terms_[0];
  for (const Term& t : terms_) {
    if (grlex_compare(t.monomial, lead->monomial) > 0) lead = &t;
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (lead->coeff < 0) scale = -scale;
  return *this * scale;
}

std::string ParamPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const Term& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    return grlex_compare(a->monomial, b->monomial) > 0;
  });
  std::string out;
  for (const Term* t : order) {
    const bool negative = t->coeff < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(t->coeff);
    if (t->monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += t->monomial.to_string(names);
    }
  }
  return out;
}

}  // namespace strata
