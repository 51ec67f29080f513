#include "strata/segments.hpp"

#include <algorithm>

#include "strata/errors.hpp"

namespace strata {

std::size_t LexSegmentSpec::s() const {
  std::size_t s = 0;
  while (s < q() && at(s + 1) == 0) ++s;
  return s;
}

std::int64_t LexSegmentSpec::nu(std::size_t j) const {
  const std::size_t s0 = s();
  if (j <= s0 + 1) return 0;
  std::int64_t count = 0;
  for (std::size_t k = j - 1; k >= 1 && at(k) == 0; --k) ++count;
  return count;
}

void LexSegmentSpec::validate() const {
  if (a.empty()) throw InvalidArgument("empty exponent sequence");
  if (q() > n) throw InvalidArgument("q exceeds n");
  bool nonzero = false;
  for (std::int64_t v : a) {
    if (v < 0) throw InvalidArgument("negative exponent in segment data");
    nonzero = nonzero || v > 0;
  }
  if (!nonzero) throw InvalidArgument("segment exponents sum to zero");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::string> lex_segment_variables(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::string> revlex_segment_variables(std::size_t n) {
  std::vector<std::string> names{"x", "y"};
  for (std::size_t i = 1; i < n; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

MonomialIdeal lex_segment_ideal(const LexSegmentSpec& spec) {
  spec.validate();
  const std::size_t nv = spec.n + 1;
  const std::size_t q = spec.q();
  const std::size_t s = spec.s();
  std::vector<Monomial> gens;
  for (std::size_t k = q; k >= s + 2; --k) {
    std::vector<Exponent> e(nv, 0);
    e[spec.n - k] = static_cast<Exponent>(spec.at(k) + 1);
    for (std::size_t j = k + 1; j <= q; ++j) e[spec.n - j] = static_cast<Exponent>(spec.at(j));
    gens.emplace_back(std::move(e));
  }
  std::vector<Exponent> e(nv, 0);
  for (std::size_t j = s + 1; j <= q; ++j) e[spec.n - j] = static_cast<Exponent>(spec.at(j));
  gens.emplace_back(std::move(e));
  return MonomialIdeal(nv, std::move(gens));
}

std::int64_t lex_dimension_formula(const LexSegmentSpec& spec) {
  spec.validate();
  const auto q = static_cast<std::int64_t>(spec.q());
  const auto s = static_cast<std::int64_t>(spec.s());
  const std::int64_t d = q - s;
  std::int64_t m = (d * d - d - 2) / 2;
  for (std::int64_t j = s + 1; j <= q; ++j) {
    m += binomial(spec.at(static_cast<std::size_t>(j)) + j, j);
    m -= spec.nu(static_cast<std::size_t>(j));
  }
  return m;
}

RevLexParams revlex_params(std::int64_t mu) {
  if (mu < 1) throw InvalidArgument("mu must be positive");
  for (std::int64_t r = 1;; ++r) {
    const std::int64_t t = (r + 2) * (r + 1) / 2 - mu;
    if (t >= 1 && t <= r + 1) return {r, t};
  }
}

MonomialIdeal revlex_segment_ideal(const RevLexSegmentSpec& spec) {
  if (spec.n < 2) throw InvalidArgument("n must be at least 2");
  const RevLexParams p = revlex_params(spec.mu);
  const std::size_t nv = spec.n + 1;
  std::vector<Monomial> gens;
  for (std::int64_t i = 0; i <= p.r; ++i) {
    std::vector<Exponent> e(nv, 0);
    e[0] = static_cast<Exponent>(p.r - i);
    e[1] = static_cast<Exponent>(i + (i < p.t ? 0 : 1));
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(nv, std::move(gens));
}

std::int64_t revlex_dimension_formula(std::size_t n, std::int64_t mu) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  const RevLexParams p = revlex_params(mu);
  const auto nn = static_cast<std::int64_t>(n);
  return 2 * (nn - 1) * mu + p.t * (p.r + 1 - p.t) * binomial(nn - 2, 2);
}

bool eliminates(const TermOrder& order, const std::vector<bool>& block) {
  const std::size_t n = order.num_vars();
  std::vector<bool> decided(n, false);
  for (const auto& row : order.rows()) {
    bool all_decided = true;
    for (std::size_t v = 0; v < n; ++v) all_decided = all_decided && (!block[v] || decided[v]);
    if (all_decided) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!block[v] && row[v] != 0) return false;
      if (block[v] && row[v] < 0) return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (block[v] && row[v] > 0) decided[v] = true;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (block[v] && !decided[v]) return false;
  }
  return true;
}

ProductPrediction torno_prediction(std::int64_t n0_dimension, const Monomial& m,
                                   const Monomial& n0, const MonomialIdeal& j0,
                                   const TermOrder& order, TailMode mode) {
  const std::size_t n = order.num_vars();
  if (m.num_vars() != n || n0.num_vars() != n || j0.num_vars() != n) {
    throw InvalidArgument("monomials over different variables");
  }
  ProductPrediction out;
  std::vector<bool> y(n, false), block(n, false);
  for (std::size_t v : m.support()) y[v] = true;
  for (std::size_t v : n0.support()) y[v] = block[v] = true;
  for (const Monomial& g : j0.generators()) {
    for (std::size_t v : g.support()) {
      if (y[v]) {
        out.violation = "m and n0 share variables with J0";
        return out;
      }
    }
  }
  if (n0.degree() != 1 && !eliminates(order, block)) {
    out.violation = "n0 is not linear and the order does not eliminate its variables";
    return out;
  }
  auto tails_of = [&](const Monomial& x, const TailFilter& f) {
    return mode == TailMode::General ? tail(order, x, f) : htail(order, x, f);
  };
  TailFilter not_j0;
  not_j0.excluded_ideal = j0.generators();
  out.dimension = n0_dimension + static_cast<std::int64_t>(tails_of(m, {}).size()) +
                  static_cast<std::int64_t>(tails_of(n0, not_j0).size());
  return out;
}

}  // namespace strata
