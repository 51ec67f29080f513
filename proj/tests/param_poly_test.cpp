#include <gtest/gtest.h>

#include <random>

#include "strata/param_poly.hpp"

using namespace strata;

namespace {

ParamPoly c(ParamIndex i) { return ParamPoly::variable(i); }
ParamPoly k(long v) { return ParamPoly::constant(v); }

ParamPoly random_poly(std::mt19937& rng, ParamIndex vars = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2), count(0, 4);
  std::vector<ParamPoly::Term> terms;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<ParamMonomial::Factor> f;
    for (ParamIndex v = 0; v < vars; ++v) f.emplace_back(v, expo(rng));
    terms.push_back({ParamMonomial(f), Rational(coeff(rng), 1 + expo(rng))});
  }
  return ParamPoly(std::move(terms));
}

}  // namespace

TEST(Rational, StaysCanonical) {
  Rational a(6, 4);
  a.canonicalize();
  EXPECT_EQ(a.get_num(), 3);
  EXPECT_EQ(a.get_den(), 2);
  Rational third(-4, 6);
  third.canonicalize();
  Rational b = a * third;
  EXPECT_EQ(b, Rational(-1));
  EXPECT_GT(b.get_den(), 0);
  // Well beyond 64-bit range.
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003, 7);
  EXPECT_EQ((big / big), Rational(1));
}

TEST(ParamPoly, AddCancellationAndIdentity) {
  // (c1 + c2) - c1 = c2; p + 0 = p; c1 + c1 = 2 c1.
  EXPECT_EQ((c(0) + c(1)) - c(0), c(1));
  const ParamPoly p = c(0) * c(1) + k(3);
  EXPECT_EQ(p + ParamPoly(), p);
  EXPECT_EQ(c(0) + c(0), c(0) * Rational(2));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(ParamPoly, EvaluateAtZero) {
  const ParamPoly p = c(0) * c(1) + c(2);
  const std::vector<ParamIndex> z0{0};
  EXPECT_EQ(p.evaluate_at_zero(z0), c(2));
  EXPECT_EQ((c(0) * c(0)).evaluate_at_zero(std::vector<ParamIndex>{}), c(0) * c(0));
  // c1 (c1 - c2) with c2 -> 0 gives c1^2.
  const std::vector<ParamIndex> z1{1};
  EXPECT_EQ((c(0) * (c(0) - c(1))).evaluate_at_zero(z1), c(0) * c(0));
}

TEST(ParamPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(11);
  for (int t = 0; t < 150; ++t) {
    const ParamPoly a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * k(1), a);
    EXPECT_TRUE((a * ParamPoly()).is_zero());
  }
}

TEST(ParamPoly, FusedUpdateMatchesDefinition) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    ParamPoly a = random_poly(rng);
    const ParamPoly b = random_poly(rng);
    const ParamMonomial m({{1, 1}, {2, 2}});
    const ParamPoly expected = a + b * ParamPoly::monomial(m, Rational(-3, 2));
    a.add_scaled(b, Rational(-3, 2), m);
    EXPECT_EQ(a, expected);
  }
}

TEST(ParamPoly, Substitution) {
  // c1 -> c2 + 1 in c1^2 c3 gives (c2 + 1)^2 c3.
  const ParamPoly p = c(0) * c(0) * c(2);
  const ParamPoly got = p.substitute({{0, c(1) + k(1)}});
  EXPECT_EQ(got, (c(1) + k(1)) * (c(1) + k(1)) * c(2));
  EXPECT_EQ(p.substitute({}), p);
}

TEST(ParamPoly, SpecializationCommutesWithProducts) {
  std::mt19937 rng(3);
  const std::vector<ParamIndex> z{1};
  for (int t = 0; t < 100; ++t) {
    const ParamPoly a = random_poly(rng), b = random_poly(rng);
    EXPECT_EQ((a * b).evaluate_at_zero(z), a.evaluate_at_zero(z) * b.evaluate_at_zero(z));
  }
}

TEST(ParamPoly, PartsAndQueries) {
  const ParamPoly p = c(0) * c(1) * Rational(2) + c(2) * Rational(-3) + k(5);
  EXPECT_EQ(p.linear_part(), c(2) * Rational(-3));
  EXPECT_EQ(p.nonlinear_part(), c(0) * c(1) * Rational(2) + k(5));
  EXPECT_EQ(p.linear_coefficient(2), Rational(-3));
  EXPECT_EQ(p.linear_coefficient(0), Rational(0));
  EXPECT_EQ(p.constant_term(), Rational(5));
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(ParamPoly().total_degree(), -1);
  EXPECT_EQ(p.variables(), (std::vector<ParamIndex>{0, 1, 2}));
  EXPECT_TRUE(p.involves(1));
  EXPECT_FALSE(p.involves(3));
}

TEST(ParamPoly, CanonicalRendering) {
  const std::vector<std::string> none;
  EXPECT_EQ((c(0) * c(0) - c(0) * c(1)).to_string(none), "c1^2 - c1*c2");
  const ParamPoly q = (c(1) * Rational(1, 2) - c(0) * c(0) * Rational(3, 4)).integer_normalized();
  EXPECT_EQ(q.to_string(none), "3*c1^2 - 2*c2");
  EXPECT_EQ((c(0) * Rational(-2)).integer_normalized(), c(0));
  EXPECT_EQ(ParamPoly().to_string(none), "0");
  EXPECT_EQ(k(-7).to_string(none), "-7");
}

TEST(ParamPoly, Renaming) {
  const ParamPoly p = c(3) * c(1) + c(0);
  const ParamPoly r = p.renamed([](ParamIndex v) { return v == 3 ? 0 : v + 1; });
  EXPECT_EQ(r, c(0) * c(2) + c(1));
}
