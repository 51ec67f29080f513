#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "strata/groebner.hpp"
#include "strata/segments.hpp"

using namespace strata;

namespace {

Monomial M(std::vector<Exponent> e) { return Monomial(std::move(e)); }
ParamPoly c(ParamIndex i) { return ParamPoly::variable(i); }
ParamPoly one() { return ParamPoly::constant(1); }

GenericPolynomial gpoly(std::size_t n, std::vector<std::pair<Monomial, ParamPoly>> terms) {
  GenericPolynomial p(n);
  for (auto& [m, k] : terms) p.add_term(m, k);
  return p;
}

/// Specializes parameters to the given values and turns X-variable i into
/// ring variable i, giving an ordinary polynomial.
ParamPoly flatten(const GenericPolynomial& p, const std::vector<Rational>& values) {
  std::map<ParamIndex, ParamPoly> subst;
  for (std::size_t k = 0; k < values.size(); ++k) {
    subst.emplace(static_cast<ParamIndex>(k + 100), ParamPoly::constant(values[k]));
  }
  ParamPoly out;
  for (const auto& [m, coeff] : p.terms()) {
    // Parameters live at index 100+k so they cannot clash with X variables.
    ParamPoly shifted = coeff.renamed([](ParamIndex v) { return v + 100; }).substitute(subst);
    out += shifted * ParamPoly::monomial(ParamMonomial::from_dense(m));
  }
  return out;
}

/// Checks the graph condition: every pair (i, j) is joined by a path of
/// selected or coprime pairs whose lcms all divide lcm(i, j).
bool pairs_generate_syzygies(const MonomialIdeal& ideal, const std::vector<SPair>& chosen) {
  const auto& g = ideal.generators();
  auto usable = [&](std::size_t a, std::size_t b) {
    if (coprime(g[a], g[b])) return true;
    for (const SPair& p : chosen) {
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    }
    return false;
  };
  for (const SPair& target : all_pairs(ideal)) {
    std::vector<bool> seen(g.size(), false);
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
      seen[v] = true;
      for (std::size_t w = 0; w < g.size(); ++w) {
        if (!seen[w] && usable(v, w) && lcm(g[v], g[w]).divides(target.lcm)) dfs(w);
      }
    };
    // The direct edge counts only through `chosen`; search without it.
    dfs(target.i);
    if (!seen[target.j]) return false;
  }
  return true;
}

}  // namespace

TEST(SyzygyPairs, Examples) {
  const MonomialIdeal j(2, {M({1, 1}), M({0, 2})});
  const auto p = syzygy_pairs(j);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].i, 0u);
  EXPECT_EQ(p[0].j, 1u);
  EXPECT_EQ(p[0].lcm, M({1, 2}));
  EXPECT_TRUE(syzygy_pairs(MonomialIdeal(2, {M({2, 0})})).empty());
  // Coprime leads: the pair lifts automatically.
  EXPECT_TRUE(syzygy_pairs(MonomialIdeal(2, {M({2, 0}), M({0, 2})})).empty());
}

TEST(SyzygyPairs, AdjacentPairsForRevLexSegments) {
  for (std::int64_t mu = 1; mu <= 20; ++mu) {
    const MonomialIdeal r = revlex_segment_ideal({mu, 2});
    const auto pairs = syzygy_pairs(r);
    // Adjacent generators, minus the coprime pairs (x, y^k).
    std::size_t adjacent = 0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (!coprime(r.generators()[i], r.generators()[i + 1])) ++adjacent;
    }
    EXPECT_EQ(pairs.size(), adjacent) << mu;
    for (const SPair& p : pairs) EXPECT_EQ(p.j, p.i + 1);
  }
}

TEST(SyzygyPairs, GenerateTheSyzygiesOnRandomIdeals) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 3), count(2, 7);
  for (int t = 0; t < 300; ++t) {
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(M({d(rng), d(rng), d(rng)}));
    const MonomialIdeal ideal(3, gens);
    if (ideal.is_unit()) continue;
    const auto chosen = syzygy_pairs(ideal);
    const auto all = all_pairs(ideal);
    for (const SPair& p : chosen) EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
    EXPECT_TRUE(pairs_generate_syzygies(ideal, chosen));
  }
}

TEST(SPolynomial, Examples) {
  const TermOrder lex = TermOrder::lex(2);
  const Monomial xy = M({1, 1}), y2 = M({0, 2}), x = M({1, 0}), y = M({0, 1});
  // f = xy + c1 x, g = y^2 + c2 y: S = (c1 - c2) xy.
  const MarkedPolynomial f(xy, gpoly(2, {{x, c(0)}}), lex);
  const MarkedPolynomial g(y2, gpoly(2, {{y, c(1)}}), lex);
  EXPECT_EQ(s_polynomial(f, g), gpoly(2, {{xy, c(0) - c(1)}}));
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  // f = x^2 y + c x, g = x y^2 + d y: S = (c - d) xy.
  const MarkedPolynomial f2(M({2, 1}), gpoly(2, {{x, c(0)}}), lex);
  const MarkedPolynomial g2(M({1, 2}), gpoly(2, {{y, c(1)}}), lex);
  EXPECT_EQ(s_polynomial(f2, g2), gpoly(2, {{xy, c(0) - c(1)}}));
}

TEST(ReduceModMonomials, Examples) {
  const MonomialIdeal j(3, {M({1, 1, 0})});
  EXPECT_EQ(reduce_mod_monomials(gpoly(3, {{M({1, 1, 0}), c(0)}, {M({0, 0, 1}), c(1)}}), j),
            gpoly(3, {{M({0, 0, 1}), c(1)}}));
  const GenericPolynomial p = gpoly(3, {{M({1, 0, 0}), c(0)}});
  EXPECT_EQ(reduce_mod_monomials(p, j), p);
  const MonomialIdeal j2(2, {M({1, 1}), M({0, 2})});
  EXPECT_TRUE(reduce_mod_monomials(gpoly(2, {{M({1, 1}), c(0)}}), j2).is_zero());
}

TEST(ReduceFull, Examples) {
  const TermOrder lex = TermOrder::lex(2);
  const Monomial xy = M({1, 1}), y2 = M({0, 2}), x = M({1, 0}), y = M({0, 1});
  const std::vector<MarkedPolynomial> b1{MarkedPolynomial(xy, gpoly(2, {{x, c(0)}}), lex)};
  EXPECT_EQ(reduce_full(gpoly(2, {{xy, c(0)}}), b1, lex), gpoly(2, {{x, -(c(0) * c(0))}}));
  const std::vector<MarkedPolynomial> b2{MarkedPolynomial(xy, gpoly(2, {{x, c(0)}}), lex),
                                         MarkedPolynomial(y2, gpoly(2, {{y, c(1)}}), lex)};
  EXPECT_EQ(reduce_full(gpoly(2, {{xy, c(0) - c(1)}}), b2, lex),
            gpoly(2, {{x, -(c(0) * (c(0) - c(1)))}}));
  EXPECT_TRUE(reduce_full(GenericPolynomial(2), b2, lex).is_zero());
}

TEST(ReduceFull, IdempotentIrreducibleAndCongruent) {
  // Basis xy + c1 x + c2 z, y^2 + c3 z, xz + c4 y z + c5 z^2 in x > y > z
  // (degrevlex), reducing random inputs.
  const TermOrder o = TermOrder::revlex(3);
  const Monomial x = M({1, 0, 0}), y = M({0, 1, 0}), z = M({0, 0, 1});
  std::vector<MarkedPolynomial> basis{
      MarkedPolynomial(x * y, gpoly(3, {{x, c(0)}, {z, c(1)}}), o),
      MarkedPolynomial(y * y, gpoly(3, {{z, c(2)}}), o),
      MarkedPolynomial(x * z, gpoly(3, {{y * z, c(3)}, {z * z, c(4)}}), o)};
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> e(0, 2), k(-3, 3);
  for (int t = 0; t < 40; ++t) {
    GenericPolynomial p(3);
    for (int s = 0; s < 4; ++s) {
      p.add_term(M({e(rng), e(rng), e(rng)}), c(static_cast<ParamIndex>(e(rng))) + ParamPoly::constant(k(rng)));
    }
    const GenericPolynomial r = reduce_full(p, basis, o);
    for (const auto& [m, coeff] : r.terms()) {
      for (const auto& f : basis) EXPECT_FALSE(f.lead().divides(m));
    }
    EXPECT_EQ(reduce_full(r, basis, o), r);

    // p - r lies in the ideal of the basis for several parameter values:
    // checked with an independent Groebner basis over Q.
    for (int v = 0; v < 3; ++v) {
      std::vector<Rational> values;
      for (int i = 0; i < 5; ++i) values.emplace_back(k(rng));
      std::vector<ParamPoly> gens;
      for (const auto& f : basis) gens.push_back(flatten(f.full(), values));
      const TermOrder q = TermOrder::revlex(3);
      const auto gb = groebner_basis(gens, q);
      EXPECT_TRUE(normal_form(flatten(p - r, values), gb, q).is_zero());
    }
  }
}

TEST(ReduceFull, LimitsOnlyAffectDiscardedPart) {
  const TermOrder o = TermOrder::revlex(3);
  const Monomial x = M({1, 0, 0}), y = M({0, 1, 0}), z = M({0, 0, 1});
  std::vector<MarkedPolynomial> basis{
      MarkedPolynomial(x * y, gpoly(3, {{x * z, c(0)}, {y, c(1)}, {z, c(2)}}), o),
      MarkedPolynomial(y * y, gpoly(3, {{x * z, c(3)}, {z * z, c(4)}}), o)};
  const GenericPolynomial s = s_polynomial(basis[0], basis[1]);
  const GenericPolynomial full = reduce_full(s, basis, o);
  ReductionLimits lim;
  lim.floor = z * z;
  const GenericPolynomial cut = reduce_full(s, basis, o, lim);
  for (const auto& [m, coeff] : full.terms()) {
    if (!o.less(m, z * z)) EXPECT_EQ(cut.coefficient(m), coeff);
  }
  for (const auto& [m, coeff] : cut.terms()) EXPECT_FALSE(o.less(m, z * z));
  ReductionLimits zero;
  zero.zeroed = [](ParamIndex v) { return v == 2; };
  EXPECT_EQ(reduce_full(s, basis, o, zero),
            reduce_full(s.evaluate_at_zero(zero.zeroed), basis, o).evaluate_at_zero(zero.zeroed));
}
