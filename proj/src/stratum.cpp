#include "strata/stratum.hpp"

#include <algorithm>
#include <stdexcept>

#include "strata/errors.hpp"

namespace strata {
namespace {

bool level_less(const TermOrder& order, const IntVector& a, const IntVector& b) {
  return order.compare(a, b) < 0;
}

/// The smallest monomial that can survive in a reduced S-polynomial whose
/// lcm has the given degree.
Monomial smallest_target(const GenericBasis& basis, std::int64_t degree) {
  const std::size_t n = basis.ideal.num_vars();
  if (basis.mode == TailMode::General) return Monomial::one(n);
  std::vector<Monomial> ms = monomials_of_degree(n, degree);
  return *std::min_element(ms.begin(), ms.end(),
                           [&](const Monomial& a, const Monomial& b) {
                             return basis.order.less(a, b);
                           });
}

/// Subtract multiples of the pivot rows so that `row` has no pivot column
/// in its linear part.
void reduce_by_pivots(ParamPoly& row, const std::map<ParamIndex, ParamPoly>& pivots) {
  for (const auto& [p, prow] : pivots) {
    const Rational c = row.linear_coefficient(p);
    if (c != 0) row.add_scaled(prow, -c, ParamMonomial());
  }
}

/// Smallest variable of the linear part, if any.
std::optional<ParamIndex> leading_linear(const ParamPoly& p) {
  std::optional<ParamIndex> best;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != 1) continue;
    const ParamIndex v = t.monomial.factors().front().first;
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

bool param_poly_less(const ParamPoly& a, const ParamPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (auto c = x[k].monomial <=> y[k].monomial; c != 0) return c < 0;
    if (x[k].coeff != y[k].coeff) return x[k].coeff < y[k].coeff;
  }
  return x.size() < y.size();
}

GenericBasis build_generic_basis(const MonomialIdeal& ideal, const TailSpec& tails,
                                 const TermOrder& order) {
  const std::size_t n = ideal.num_vars();
  if (order.num_vars() != n) throw InvalidArgument("order and ideal over different variables");
  if (ideal.empty()) throw InvalidArgument("the zero ideal has no stratum");
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has no stratum");
  if (!tails.allowed.empty() && tails.allowed.size() != ideal.size()) {
    throw InvalidArgument("tail restrictions do not match the generators");
  }
  for (const Monomial& e : tails.excluded) {
    if (e.num_vars() != n) throw InvalidArgument("exclusion over different variables");
    for (const Monomial& g : ideal.generators()) {
      if (e.divides(g)) {
        throw EmptyStratum("an excluded monomial divides a generator of J");
      }
    }
  }

  GenericBasis basis;
  basis.ideal = ideal;
  basis.order = order;
  basis.mode = tails.mode;

  const auto& gens = ideal.generators();
  std::vector<std::vector<Monomial>> per_gen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    TailFilter filter;
    filter.excluded_ideal = gens;
    filter.excluded_ideal.insert(filter.excluded_ideal.end(), tails.excluded.begin(),
                                 tails.excluded.end());
    if (!tails.allowed.empty()) filter.allowed = tails.allowed[i];
    per_gen.push_back(tails.mode == TailMode::General ? tail(order, gens[i], filter)
                                                      : htail(order, gens[i], filter));
    for (const Monomial& b : per_gen.back()) {
      Parameter p{i, b, gens[i].minus(b)};
      if (order.sign(p.level) <= 0) throw std::logic_error("parameter level is not positive");
      basis.params.push_back(std::move(p));
    }
  }
  std::stable_sort(basis.params.begin(), basis.params.end(),
                   [&](const Parameter& a, const Parameter& b) {
                     if (auto c = order.compare(a.level, b.level); c != 0) return c < 0;
                     if (a.generator != b.generator) return a.generator < b.generator;
                     return order.less(b.tail, a.tail);
                   });

  std::vector<GenericPolynomial> tails_of(gens.size(), GenericPolynomial(n));
  for (std::size_t k = 0; k < basis.params.size(); ++k) {
    const Parameter& p = basis.params[k];
    tails_of[p.generator].add_term(p.tail, ParamPoly::variable(static_cast<ParamIndex>(k)));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    basis.polys.emplace_back(gens[i], std::move(tails_of[i]), order);
  }
  return basis;
}

IntVector level_of(const ParamMonomial& m, std::span<const Parameter> params) {
  IntVector out;
  for (const auto& [v, e] : m.factors()) {
    const IntVector& l = params[v].level;
    if (out.empty()) out.assign(l.size(), 0);
    for (std::size_t k = 0; k < l.size(); ++k) out[k] += e * l[k];
  }
  if (out.empty() && !params.empty()) out.assign(params.front().level.size(), 0);
  return out;
}

std::vector<SPair> selected_pairs(const GenericBasis& basis, const StratumOptions& options) {
  return options.all_pairs ? all_pairs(basis.ideal) : syzygy_pairs(basis.ideal);
}

std::vector<ParamPoly> linear_part(const GenericBasis& basis, const StratumOptions& options) {
  std::vector<ParamPoly> out;
  for (const SPair& pr : selected_pairs(basis, options)) {
    const GenericPolynomial h =
        reduce_mod_monomials(s_polynomial(basis.polys[pr.i], basis.polys[pr.j]), basis.ideal);
    for (const auto& [m, c] : h.terms()) out.push_back(c);
  }
  return out;
}

EliminableSet eliminable_set(std::span<const ParamPoly> linear) {
  std::map<ParamIndex, ParamPoly> pivots;
  for (const ParamPoly& form : linear) {
    ParamPoly row = form.linear_part();
    reduce_by_pivots(row, pivots);
    if (auto p = leading_linear(row)) {
      row *= 1 / row.linear_coefficient(*p);
      pivots.emplace(*p, std::move(row));
    }
  }
  EliminableSet out;
  for (const auto& [p, row] : pivots) out.pivots.push_back(p);
  out.rank = out.pivots.size();
  return out;
}

ParamIdeal stratum_ideal(const GenericBasis& basis, const StratumOptions& options) {
  const TermOrder& order = basis.order;
  std::vector<ParamPoly> gens;
  for (const SPair& pr : selected_pairs(basis, options)) {
    ReductionLimits limits;
    if (options.level_by_level) {
      // Every coefficient of this pair has level lcm - gamma with gamma at
      // least the smallest admissible monomial; higher parameters cannot
      // occur in them.
      const IntVector top = pr.lcm.minus(smallest_target(basis, pr.lcm.degree()));
      std::vector<bool> zero(basis.params.size());
      for (std::size_t k = 0; k < basis.params.size(); ++k) {
        zero[k] = order.compare(basis.params[k].level, top) > 0;
      }
      limits.zeroed = [zero](ParamIndex v) { return zero[v]; };
    }
    const GenericPolynomial h =
        reduce_full(s_polynomial(basis.polys[pr.i], basis.polys[pr.j]), basis.polys, order, limits);
    for (const auto& [m, c] : h.terms()) gens.push_back(c.integer_normalized());
  }

  std::vector<std::pair<IntVector, ParamPoly>> keyed;
  for (ParamPoly& g : gens) {
    IntVector l = level_of(g.terms().front().monomial, basis.params);
    keyed.emplace_back(std::move(l), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (auto c = order.compare(a.first, b.first); c != 0) return c < 0;
    return param_poly_less(a.second, b.second);
  });
  ParamIdeal out;
  out.params = basis.params;
  for (auto& [l, g] : keyed) {
    if (!out.generators.empty() && out.generators.back() == g) continue;
    out.generators.push_back(std::move(g));
  }
  return out;
}

Elimination eliminate_by_levels(const ParamIdeal& ideal, const TermOrder& order) {
  const std::size_t n = ideal.params.size();
  std::vector<std::pair<IntVector, const ParamPoly*>> keyed;
  for (const ParamPoly& g : ideal.generators) {
    if (g.is_zero()) continue;
    keyed.emplace_back(level_of(g.terms().front().monomial, ideal.params), &g);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    return level_less(order, a.first, b.first);
  });

  Elimination out;
  std::vector<bool> eliminated(n, false);
  std::size_t pos = 0;
  while (pos < keyed.size()) {
    std::size_t end = pos;
    while (end < keyed.size() && order.compare(keyed[end].first, keyed[pos].first) == 0) ++end;

    std::map<ParamIndex, ParamPoly> pivots;
    for (std::size_t k = pos; k < end; ++k) {
      ParamPoly row = keyed[k].second->substitute(out.substitution);
      reduce_by_pivots(row, pivots);
      if (row.is_zero()) continue;
      if (auto p = leading_linear(row)) {
        row *= 1 / row.linear_coefficient(*p);
        pivots.emplace(*p, std::move(row));
      } else {
        out.residual.push_back(row.integer_normalized());
      }
    }
    // Back substitution: make every pivot row free of the other pivots.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      ParamPoly& row = it->second;
      for (auto jt = pivots.rbegin(); jt != it; ++jt) {
        const Rational c = row.linear_coefficient(jt->first);
        if (c != 0) row.add_scaled(jt->second, -c, ParamMonomial());
      }
    }
    for (auto& [p, row] : pivots) {
      eliminated[p] = true;
      ParamPoly value = -row;
      value += ParamPoly::variable(p);
      out.substitution.emplace(p, std::move(value));
    }
    pos = end;
  }

  for (std::size_t k = 0; k < n; ++k) {
    (eliminated[k] ? out.eliminated : out.survivors).push_back(static_cast<ParamIndex>(k));
  }
  std::sort(out.residual.begin(), out.residual.end(), param_poly_less);
  out.residual.erase(std::unique(out.residual.begin(), out.residual.end()), out.residual.end());
  return out;
}

StratumReport analyze(const GenericBasis& basis, const StratumOptions& options) {
  const ParamIdeal a = stratum_ideal(basis, options);
  Elimination e = eliminate_by_levels(a, basis.order);

  StratumReport r;
  r.params = basis.params.size();
  r.rank = e.eliminated.size();
  r.ed = r.params - r.rank;
  r.survivors = e.survivors;
  r.eliminated = e.eliminated;

  std::vector<ParamIndex> to_local(r.params, 0);
  for (std::size_t k = 0; k < e.survivors.size(); ++k) {
    to_local[e.survivors[k]] = static_cast<ParamIndex>(k);
  }
  std::vector<ParamPoly> local;
  for (const ParamPoly& g : e.residual) {
    local.push_back(g.renamed([&](ParamIndex v) { return to_local[v]; }));
  }
  if (local.empty()) {
    r.dim = static_cast<int>(r.ed);
    r.smooth = true;
    return r;
  }
  const std::vector<ParamPoly> gb = groebner_basis(local, TermOrder::grlex(r.ed));
  r.dim = krull_dimension(gb, r.ed);
  r.smooth = gb.empty();
  for (const ParamPoly& g : gb) {
    r.generators.push_back(
        g.renamed([&](ParamIndex v) { return e.survivors[v]; }).integer_normalized());
  }
  return r;
}

bool check_lambda_homogeneous(const ParamIdeal& ideal) {
  for (const ParamPoly& g : ideal.generators) {
    if (g.is_zero()) continue;
    const IntVector l = level_of(g.terms().front().monomial, ideal.params);
    for (const auto& t : g.terms()) {
      if (level_of(t.monomial, ideal.params) != l) return false;
    }
  }
  return true;
}

}  // namespace strata
