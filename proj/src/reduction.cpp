#include <algorithm>
#include <map>
#include <numeric>

#include "strata/errors.hpp"
#include "strata/groebner.hpp"

namespace strata {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Map key caching the order weights of a monomial; comparisons then cost a
/// lexicographic vector compare instead of a matrix product.
struct WeightedMonomial {
  IntVector weight;
  Monomial mono;
};

struct Descending {
  bool operator()(const WeightedMonomial& a, const WeightedMonomial& b) const {
    return a.weight > b.weight;
  }
};

IntVector weigh(const TermOrder& order, const Monomial& m) {
  IntVector w;
  w.reserve(order.rows().size());
  for (const auto& row : order.rows()) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.num_vars(); ++i) s += row[i] * m[i];
    w.push_back(s);
  }
  return w;
}

struct TailTerm {
  Monomial mono;
  ParamPoly coeff;
};

}  // namespace

std::vector<SPair> all_pairs(const MonomialIdeal& ideal) {
  std::vector<SPair> pairs;
  const auto& g = ideal.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      pairs.push_back(SPair{i, j, lcm(g[i], g[j])});
    }
  }
  return pairs;
}

std::vector<SPair> syzygy_pairs(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  const std::vector<SPair> pairs = all_pairs(ideal);

  std::vector<Monomial> degrees;
  for (const SPair& p : pairs) degrees.push_back(p.lcm);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  std::vector<SPair> selected;
  for (const Monomial& top : degrees) {
    UnionFind uf(g.size());
    std::vector<const SPair*> candidates;
    for (const SPair& p : pairs) {
      if (p.lcm == top) {
        candidates.push_back(&p);
      } else if (p.lcm.divides(top)) {
        uf.unite(p.i, p.j);
      }
    }
    // Coprime pairs lift automatically, so prefer them as forest edges.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const SPair* a, const SPair* b) {
                       return coprime(g[a->i], g[a->j]) &&
                              !coprime(g[b->i], g[b->j]);
                     });
    for (const SPair* p : candidates) {
      if (uf.unite(p->i, p->j) && !coprime(g[p->i], g[p->j])) {
        selected.push_back(*p);
      }
    }
  }
  std::sort(selected.begin(), selected.end(), [](const SPair& a, const SPair& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  return selected;
}

GenericPolynomial s_polynomial(const MarkedPolynomial& f,
                               const MarkedPolynomial& g) {
  const Monomial l = lcm(f.lead(), g.lead());
  const ParamPoly one = ParamPoly::constant(1);
  GenericPolynomial s = f.tail().mul_by_term(l.quotient(f.lead()), one);
  s -= g.tail().mul_by_term(l.quotient(g.lead()), one);
  return s;
}

GenericPolynomial reduce_mod_monomials(const GenericPolynomial& p,
                                       const MonomialIdeal& ideal) {
  GenericPolynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (!ideal.contains(m)) out.add_term(m, c);
  }
  return out;
}

GenericPolynomial reduce_full(const GenericPolynomial& p,
                              std::span<const MarkedPolynomial> basis,
                              const TermOrder& order,
                              const ReductionLimits& limits) {
  const std::size_t n = p.num_vars();
  std::vector<Monomial> leads;
  std::vector<std::vector<TailTerm>> tails;
  for (const MarkedPolynomial& f : basis) {
    if (f.num_vars() != n) throw InvalidArgument("basis over different variables");
    leads.push_back(f.lead());
    std::vector<TailTerm> t;
    for (const auto& [m, c] : f.tail().terms()) {
      ParamPoly coeff = limits.zeroed ? c.evaluate_at_zero(limits.zeroed) : c;
      if (!coeff.is_zero()) t.push_back(TailTerm{m, std::move(coeff)});
    }
    tails.push_back(std::move(t));
  }

  std::optional<IntVector> floor;
  if (limits.floor) floor = weigh(order, *limits.floor);
  auto below_floor = [&](const IntVector& w) { return floor && w < *floor; };

  std::map<WeightedMonomial, ParamPoly, Descending> work;
  for (const auto& [m, c] : p.terms()) {
    IntVector w = weigh(order, m);
    if (below_floor(w)) continue;
    ParamPoly coeff = limits.zeroed ? c.evaluate_at_zero(limits.zeroed) : c;
    if (!coeff.is_zero()) work.emplace(WeightedMonomial{std::move(w), m}, std::move(coeff));
  }

  auto it = work.begin();
  while (it != work.end()) {
    const Monomial& m = it->first.mono;
    std::size_t k = 0;
    while (k < leads.size() && !leads[k].divides(m)) ++k;
    if (k == leads.size()) {
      ++it;
      continue;
    }
    const WeightedMonomial key = it->first;
    const ParamPoly coeff = std::move(it->second);
    work.erase(it);
    const Monomial q = key.mono.quotient(leads[k]);
    for (const TailTerm& t : tails[k]) {
      Monomial target = q * t.mono;
      IntVector w = weigh(order, target);
      if (below_floor(w)) continue;
      auto [slot, inserted] =
          work.try_emplace(WeightedMonomial{std::move(w), std::move(target)});
      ParamPoly& acc = slot->second;
      if (t.coeff.size() == 1) {
        const auto& term = t.coeff.terms().front();
        acc.add_scaled(coeff, -term.coeff, term.monomial);
      } else {
        acc -= coeff * t.coeff;
      }
      if (acc.is_zero()) work.erase(slot);
    }
    it = work.upper_bound(key);
  }

  GenericPolynomial::TermMap out;
  for (auto& [key, c] : work) out.emplace(key.mono, std::move(c));
  return GenericPolynomial(n, std::move(out));
}

}  // namespace strata
