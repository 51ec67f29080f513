#include <algorithm>
#include <functional>
#include <set>

#include "strata/errors.hpp"
#include "strata/groebner.hpp"

namespace strata {
namespace {

// Dense working representation: terms sorted by decreasing order weight.
struct DTerm {
  IntVector weight;
  Monomial mono;
  Rational coeff;
};

using DPoly = std::vector<DTerm>;

class Ring {
 public:
  Ring(const TermOrder& order) : order_(order), n_(order.num_vars()) {}

  std::size_t num_vars() const { return n_; }

  IntVector weigh(const Monomial& m) const {
    IntVector w;
    w.reserve(order_.rows().size());
    for (const auto& row : order_.rows()) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += row[i] * m[i];
      w.push_back(s);
    }
    return w;
  }

  DPoly from_param(const ParamPoly& p) const {
    DPoly d;
    d.reserve(p.size());
    for (const auto& t : p.terms()) {
      Monomial m = t.monomial.to_dense(n_);
      IntVector w = weigh(m);
      d.push_back(DTerm{std::move(w), std::move(m), t.coeff});
    }
    std::sort(d.begin(), d.end(),
              [](const DTerm& a, const DTerm& b) { return a.weight > b.weight; });
    return d;
  }

  ParamPoly to_param(const DPoly& d) const {
    std::vector<ParamPoly::Term> terms;
    terms.reserve(d.size());
    for (const DTerm& t : d) {
      terms.push_back(ParamPoly::Term{ParamMonomial::from_dense(t.mono), t.coeff});
    }
    return ParamPoly(std::move(terms));
  }

  /// a -= c * m * b, with weights of m given.
  static void sub_scaled(DPoly& a, const DPoly& b, const Rational& c,
                         const Monomial& m, const IntVector& mw) {
    DPoly out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    for (const DTerm& t : b) {
      IntVector w = t.weight;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += mw[k];
      while (i != a.end() && i->weight > w) out.push_back(std::move(*i++));
      Rational v = -c * t.coeff;
      if (i != a.end() && i->weight == w) {
        v += i->coeff;
        if (v != 0) out.push_back(DTerm{std::move(w), std::move(i->mono), std::move(v)});
        ++i;
      } else {
        out.push_back(DTerm{std::move(w), t.mono * m, std::move(v)});
      }
    }
    for (; i != a.end(); ++i) out.push_back(std::move(*i));
    a = std::move(out);
  }

  static void make_monic(DPoly& p) {
    if (p.empty() || p.front().coeff == 1) return;
    const Rational inv = 1 / p.front().coeff;
    for (DTerm& t : p) t.coeff *= inv;
  }

  /// Full normal form of p with respect to the polynomials in `basis`.
  DPoly reduce(DPoly p, const std::vector<const DPoly*>& basis) const {
    DPoly rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const DTerm& lead = p[pos];
      const DPoly* reducer = nullptr;
      for (const DPoly* g : basis) {
        if (g->front().mono.divides(lead.mono)) {
          reducer = g;
          break;
        }
      }
      if (reducer == nullptr) {
        ++pos;
        continue;
      }
      const Monomial q = lead.mono.quotient(reducer->front().mono);
      const IntVector qw = weigh(q);
      const Rational c = lead.coeff;
      // Terms before pos are irreducible and larger than anything the
      // subtraction produces; reduce only the suffix.
      DPoly suffix(std::make_move_iterator(p.begin() + pos),
                   std::make_move_iterator(p.end()));
      p.resize(pos);
      sub_scaled(suffix, *reducer, c / reducer->front().coeff, q, qw);
      p.insert(p.end(), std::make_move_iterator(suffix.begin()),
               std::make_move_iterator(suffix.end()));
    }
    return p;
  }

 private:
  const TermOrder& order_;
  std::size_t n_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  IntVector lcm_weight;
  std::int64_t sugar;
};

}  // namespace

Monomial leading_monomial(const ParamPoly& p, const TermOrder& order) {
  if (p.is_zero()) throw InvalidArgument("leading monomial of zero");
  const std::size_t n = order.num_vars();
  Monomial best = p.terms().front().monomial.to_dense(n);
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial.to_dense(n);
    if (order.compare(m, best) > 0) best = std::move(m);
  }
  return best;
}

std::vector<ParamPoly> groebner_basis(std::span<const ParamPoly> generators,
                                      const TermOrder& order) {
  Ring ring(order);
  std::vector<DPoly> pool;
  std::vector<std::int64_t> sugar;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_basis = [&] {
    std::vector<const DPoly*> b;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (active[k]) b.push_back(&pool[k]);
    }
    return b;
  };

  // Gebauer-Moeller update with a new basis element h.
  auto update = [&](DPoly h, std::int64_t h_sugar) {
    Ring::make_monic(h);
    const std::size_t hi = pool.size();
    const Monomial& hm = h.front().mono;
    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!active[k]) continue;
      const Monomial& gm = pool[k].front().mono;
      Monomial l = lcm(gm, hm);
      std::int64_t s = std::max(sugar[k] + l.degree() - gm.degree(),
                                h_sugar + l.degree() - hm.degree());
      IntVector w = ring.weigh(l);
      fresh.push_back(Pair{k, hi, std::move(l), std::move(w), s});
    }
    // Chain criterion among the new pairs: drop (g,h) when another new
    // pair's lcm properly divides it; among equal lcms keep one.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) &&
            (fresh[b].lcm != fresh[a].lcm || b < a)) {
          keep[a] = false;
        }
      }
    }
    // Old pairs whose lcm is divisible by LM(h) with both new lcms different.
    std::vector<Pair> kept_old;
    for (Pair& p : pairs) {
      const Monomial& li = lcm(pool[p.i].front().mono, hm);
      const Monomial& lj = lcm(pool[p.j].front().mono, hm);
      if (hm.divides(p.lcm) && li != p.lcm && lj != p.lcm) continue;
      kept_old.push_back(std::move(p));
    }
    pairs = std::move(kept_old);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      // Buchberger's product criterion.
      if (coprime(pool[fresh[a].i].front().mono, hm)) continue;
      pairs.push_back(std::move(fresh[a]));
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (active[k] && hm.divides(pool[k].front().mono)) active[k] = false;
    }
    pool.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(true);
  };

  std::vector<std::pair<DPoly, std::int64_t>> inputs;
  for (const ParamPoly& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {ParamPoly::constant(1)};
    if (g.total_degree() < 0) continue;
    inputs.emplace_back(ring.from_param(g), g.total_degree());
  }
  std::sort(inputs.begin(), inputs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first.front().weight < b.first.front().weight;
  });
  for (auto& [p, s] : inputs) {
    DPoly r = ring.reduce(std::move(p), active_basis());
    if (r.empty()) continue;
    if (r.front().mono.is_one()) return {ParamPoly::constant(1)};
    update(std::move(r), s);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) {
                                   if (a.sugar != b.sugar) return a.sugar < b.sugar;
                                   return a.lcm_weight < b.lcm_weight;
                                 });
    Pair p = std::move(*best);
    pairs.erase(best);
    const DPoly& f = pool[p.i];
    const DPoly& g = pool[p.j];
    DPoly s;
    {
      const Monomial qf = p.lcm.quotient(f.front().mono);
      const Monomial qg = p.lcm.quotient(g.front().mono);
      DPoly tf(f.begin() + 1, f.end());
      DPoly sf;
      Ring::sub_scaled(sf, tf, -1, qf, ring.weigh(qf));
      DPoly tg(g.begin() + 1, g.end());
      Ring::sub_scaled(sf, tg, 1, qg, ring.weigh(qg));
      s = std::move(sf);
    }
    DPoly r = ring.reduce(std::move(s), active_basis());
    if (r.empty()) continue;
    if (r.front().mono.is_one()) return {ParamPoly::constant(1)};
    update(std::move(r), p.sugar);
  }

  // Interreduce the minimal basis.
  std::vector<DPoly> minimal;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (active[k]) minimal.push_back(pool[k]);
  }
  std::vector<DPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const DPoly*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(&minimal[l]);
    }
    DPoly lead_term{minimal[k].front()};
    DPoly rest(minimal[k].begin() + 1, minimal[k].end());
    rest = ring.reduce(std::move(rest), others);
    lead_term.insert(lead_term.end(), rest.begin(), rest.end());
    Ring::make_monic(lead_term);
    reduced.push_back(std::move(lead_term));
  }
  std::sort(reduced.begin(), reduced.end(), [](const DPoly& a, const DPoly& b) {
    return a.front().weight < b.front().weight;
  });
  std::vector<ParamPoly> out;
  out.reserve(reduced.size());
  for (const DPoly& d : reduced) out.push_back(ring.to_param(d));
  return out;
}

ParamPoly normal_form(const ParamPoly& p, std::span<const ParamPoly> basis,
                      const TermOrder& order) {
  Ring ring(order);
  std::vector<DPoly> b;
  for (const ParamPoly& g : basis) {
    if (!g.is_zero()) b.push_back(ring.from_param(g));
  }
  std::vector<const DPoly*> ptrs;
  for (const DPoly& d : b) ptrs.push_back(&d);
  return ring.to_param(ring.reduce(ring.from_param(p), ptrs));
}

std::vector<ParamPoly> eliminate(std::span<const ParamPoly> generators,
                                 const std::vector<bool>& drop) {
  const std::size_t n = drop.size();
  for (const ParamPoly& g : generators) {
    for (ParamIndex v : g.variables()) {
      if (v >= n) throw InvalidArgument("generator uses a variable outside the ring");
    }
  }
  const TermOrder order = elimination_order(TermOrder::grlex(n), drop);
  std::vector<ParamPoly> out;
  for (ParamPoly& g : groebner_basis(generators, order)) {
    const auto vars = g.variables();
    if (std::none_of(vars.begin(), vars.end(), [&](ParamIndex v) { return drop[v]; })) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

int monomial_ideal_dimension(std::span<const Monomial> generators,
                             std::size_t num_vars) {
  std::vector<std::vector<std::size_t>> supports;
  for (const Monomial& g : generators) {
    if (g.is_one()) throw UnitIdeal("monomial ideal is the unit ideal");
    supports.push_back(g.support());
  }
  // Smallest transversal of the supports, by branching on the smallest
  // support not yet met.
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::size_t best = num_vars;
  std::vector<bool> chosen(num_vars, false);
  std::set<std::vector<bool>> seen;
  std::function<void(std::size_t)> search = [&](std::size_t count) {
    if (count >= best) return;
    if (!seen.insert(chosen).second) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      bool met = std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; });
      if (!met && (open == nullptr || s.size() < open->size())) open = &s;
    }
    if (open == nullptr) {
      best = count;
      return;
    }
    if (count + 1 >= best) return;
    for (std::size_t v : *open) {
      chosen[v] = true;
      search(count + 1);
      chosen[v] = false;
    }
  };
  search(0);
  return static_cast<int>(num_vars - best);
}

int krull_dimension(std::span<const ParamPoly> generators, std::size_t num_vars) {
  return krull_dimension(generators, TermOrder::revlex(num_vars));
}

int krull_dimension(std::span<const ParamPoly> generators, const TermOrder& order) {
  const std::size_t num_vars = order.num_vars();
  for (const ParamPoly& g : generators) {
    for (ParamIndex v : g.variables()) {
      if (v >= num_vars) throw InvalidArgument("generator uses a variable outside the ring");
    }
  }
  const std::vector<ParamPoly> gb = groebner_basis(generators, order);
  std::vector<Monomial> leads;
  for (const ParamPoly& g : gb) {
    if (g.is_constant()) throw UnitIdeal("ideal is the unit ideal");
    leads.push_back(leading_monomial(g, order));
  }
  return monomial_ideal_dimension(leads, num_vars);
}

}  // namespace strata
