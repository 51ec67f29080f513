#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "strata/errors.hpp"
#include "strata/groebner.hpp"

using namespace strata;

namespace {

ParamPoly c(ParamIndex i) { return ParamPoly::variable(i); }
ParamPoly k(long v) { return ParamPoly::constant(v); }

ParamPoly random_poly(std::mt19937& rng, ParamIndex vars) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), count(1, 3);
  std::vector<ParamPoly::Term> terms;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<ParamMonomial::Factor> f;
    for (ParamIndex v = 0; v < vars; ++v) f.emplace_back(v, expo(rng));
    terms.push_back({ParamMonomial(f), Rational(coeff(rng))});
  }
  return ParamPoly(std::move(terms));
}

/// S-polynomial of two polynomials under `order`, computed directly.
ParamPoly spoly(const ParamPoly& f, const ParamPoly& g, const TermOrder& order, std::size_t n) {
  const Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
  const Monomial l = lcm(lf, lg);
  auto lead_coeff = [&](const ParamPoly& p, const Monomial& m) {
    for (const auto& t : p.terms()) {
      if (t.monomial.to_dense(n) == m) return t.coeff;
    }
    return Rational(0);
  };
  return f * ParamPoly::monomial(ParamMonomial::from_dense(l.quotient(lf)), 1 / lead_coeff(f, lf)) -
         g * ParamPoly::monomial(ParamMonomial::from_dense(l.quotient(lg)), 1 / lead_coeff(g, lg));
}

void expect_groebner(const std::vector<ParamPoly>& gb, const TermOrder& order, std::size_t n) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      EXPECT_TRUE(normal_form(spoly(gb[i], gb[j], order, n), gb, order).is_zero());
    }
  }
}

}  // namespace

TEST(Buchberger, Examples) {
  const TermOrder o1 = TermOrder::grlex(1);
  EXPECT_EQ(groebner_basis(std::vector<ParamPoly>{c(0) * c(0)}, o1), std::vector<ParamPoly>{c(0) * c(0)});
  const TermOrder o2 = TermOrder::grlex(2);
  const auto lin = groebner_basis(std::vector<ParamPoly>{c(0) + c(1), c(1)}, o2);
  EXPECT_EQ(lin, (std::vector<ParamPoly>{c(1), c(0)}));
  const auto unit = groebner_basis(std::vector<ParamPoly>{c(0) * c(1) - k(1), c(0) * c(0)}, o2);
  EXPECT_EQ(unit, std::vector<ParamPoly>{k(1)});
  EXPECT_TRUE(groebner_basis(std::vector<ParamPoly>{}, o2).empty());
  EXPECT_TRUE(groebner_basis(std::vector<ParamPoly>{ParamPoly()}, o2).empty());
}

TEST(Buchberger, CyclicThree) {
  // The cyclic-3 system: a well-known zero-dimensional ideal.
  const ParamPoly a = c(0), b = c(1), d = c(2);
  const std::vector<ParamPoly> gens{a + b + d, a * b + b * d + d * a, a * b * d - k(1)};
  const TermOrder lex = TermOrder::lex(3);
  const auto gb = groebner_basis(gens, lex);
  expect_groebner(gb, lex, 3);
  // Its lex basis is {a + b + c, b^2 + bc + c^2, c^3 - 1}.
  EXPECT_EQ(gb, (std::vector<ParamPoly>{d * d * d - k(1), b * b + b * d + d * d, a + b + d}));
  EXPECT_EQ(krull_dimension(gens, 3), 0);
}

TEST(Buchberger, ReducedBasesAreCanonical) {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    std::vector<ParamPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, 3));
    for (const TermOrder& o : {TermOrder::grlex(3), TermOrder::revlex(3)}) {
      const auto gb = groebner_basis(gens, o);
      expect_groebner(gb, o, 3);
      for (const ParamPoly& g : gens) EXPECT_TRUE(normal_form(g, gb, o).is_zero());
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(gens[0] * gens[1]);
      EXPECT_EQ(groebner_basis(shuffled, o), gb);
    }
  }
}

TEST(Eliminate, Examples) {
  // (c1 - c2 c3, c2^2) drop c1 -> (c2^2)
  const auto e1 = eliminate(std::vector<ParamPoly>{c(0) - c(1) * c(2), c(1) * c(1)}, {true, false, false});
  EXPECT_EQ(e1, std::vector<ParamPoly>{c(1) * c(1)});
  const auto e2 = eliminate(std::vector<ParamPoly>{c(0) * c(0)}, {false});
  EXPECT_EQ(e2, std::vector<ParamPoly>{c(0) * c(0)});
  const auto e3 = eliminate(std::vector<ParamPoly>{c(0), c(0) * c(1)}, {true, false});
  EXPECT_TRUE(e3.empty());
}

TEST(Eliminate, TwistedCubic) {
  // t -> (t, t^2, t^3): eliminating t leaves the twisted cubic's ideal.
  const ParamPoly t = c(0), x = c(1), y = c(2), z = c(3);
  const std::vector<ParamPoly> gens{x - t, y - t * t, z - t * t * t};
  const auto e = eliminate(gens, {true, false, false, false});
  const TermOrder o = TermOrder::grlex(4);
  const std::vector<ParamPoly> expected{y - x * x, z - x * y, x * z - y * y};
  const auto gb_e = groebner_basis(e, o), gb_x = groebner_basis(expected, o);
  EXPECT_EQ(gb_e, gb_x);
  EXPECT_EQ(krull_dimension(e, 4), 2);  // still counts t as a free variable
}

TEST(KrullDimension, Examples) {
  EXPECT_EQ(krull_dimension(std::vector<ParamPoly>{}, 2), 2);
  EXPECT_EQ(krull_dimension(std::vector<ParamPoly>{c(0) * c(0)}, 1), 0);
  EXPECT_EQ(krull_dimension(std::vector<ParamPoly>{c(0) * (c(0) - c(1))}, 2), 1);
  EXPECT_THROW(krull_dimension(std::vector<ParamPoly>{c(0) * c(1) - k(1), c(0) * c(0)}, 2),
               UnitIdeal);
  // Union of a plane and a line in 3-space.
  EXPECT_EQ(krull_dimension(std::vector<ParamPoly>{c(0) * c(1), c(0) * c(2)}, 3), 2);
}

TEST(KrullDimension, RedundantGeneratorsDoNotMatter) {
  std::mt19937 rng(31);
  for (int t = 0; t < 30; ++t) {
    std::vector<ParamPoly> gens{random_poly(rng, 4), random_poly(rng, 4)};
    for (auto& g : gens) g -= ParamPoly::constant(g.constant_term());
    if (gens[0].is_zero() && gens[1].is_zero()) continue;
    const int d = krull_dimension(gens, 4);
    auto more = gens;
    more.push_back(gens[0] * c(2) + gens[1] * gens[1]);
    EXPECT_EQ(krull_dimension(more, 4), d);
  }
}

TEST(MonomialDimension, BruteForceAgreement) {
  // Oracle: try every subset of variables.
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> e(0, 1), count(1, 5);
  const std::size_t n = 6;
  for (int t = 0; t < 200; ++t) {
    std::vector<Monomial> gens;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<Exponent> ex(n);
      for (auto& v : ex) v = e(rng);
      if (std::all_of(ex.begin(), ex.end(), [](Exponent v) { return v == 0; })) ex[0] = 1;
      gens.emplace_back(ex);
    }
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      // mask = independent set: no generator supported inside it.
      bool ok = true;
      for (const Monomial& g : gens) {
        bool inside = true;
        for (std::size_t v : g.support()) inside = inside && ((mask >> v) & 1u);
        if (inside) ok = false;
      }
      if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    EXPECT_EQ(monomial_ideal_dimension(gens, n), best);
  }
}
