#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/monomial.hpp"
#include "strata/stratum.hpp"
#include "strata/term_order.hpp"

namespace strata {

/// J(a_q, ..., a_1) in k[x_0, ..., x_n].
struct LexSegmentSpec {
  std::size_t n = 0;
  /// a_q first, a_1 last.
  std::vector<std::int64_t> a;

  std::size_t q() const { return a.size(); }
  /// a_j for 1 <= j <= q.
  std::int64_t at(std::size_t j) const { return a[a.size() - j]; }
  /// Smallest s with a_{s+1} != 0.
  std::size_t s() const;
  /// nu_j for s+1 <= j <= q (nu_{s+1} = 0).
  std::int64_t nu(std::size_t j) const;
  /// Throws InvalidArgument unless q <= n, all a_i >= 0 and some a_i > 0.
  void validate() const;
};

/// R(mu, n) in k[x, y, z_1, ..., z_{n-1}].
struct RevLexSegmentSpec {
  std::int64_t mu = 1;
  std::size_t n = 2;
};

struct RevLexParams {
  std::int64_t r = 0;
  std::int64_t t = 0;
  friend bool operator==(const RevLexParams&, const RevLexParams&) = default;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Variable names x0 ... xn.
std::vector<std::string> lex_segment_variables(std::size_t n);
/// Variable names x y z1 ... z{n-1}.
std::vector<std::string> revlex_segment_variables(std::size_t n);

/// Generators x_{n-k}^{a_k+1} prod_{j>k} x_{n-j}^{a_j} for k = q, ..., s+2
/// followed by prod_{j=s+1}^{q} x_{n-j}^{a_j}.
MonomialIdeal lex_segment_ideal(const LexSegmentSpec& spec);

/// The closed formula for the homogeneous Lex stratum dimension, evaluated
/// exactly as printed.
std::int64_t lex_dimension_formula(const LexSegmentSpec& spec);

/// The unique (r, t) with 1 <= t <= r+1 and mu = (r+2)(r+1)/2 - t.
RevLexParams revlex_params(std::int64_t mu);

MonomialIdeal revlex_segment_ideal(const RevLexSegmentSpec& spec);

/// 2(n-1)mu + t(r+1-t) * binom(n-2, 2).
std::int64_t revlex_dimension_formula(std::size_t n, std::int64_t mu);

struct ProductPrediction {
  /// Set when the hypotheses hold.
  std::optional<std::int64_t> dimension;
  /// Why the prediction was refused.
  std::string violation;
};

/// Dimension of the stratum of m((n0) + J0) from that of J0 excluding n0:
/// N0 + |tail(m)| + |tail(n0) minus J0| (homogeneous tails in Homogeneous
/// mode). Refuses unless m and n0 avoid the variables of J0 and either n0
/// has degree 1 or the order eliminates the variables of n0.
ProductPrediction torno_prediction(std::int64_t n0_dimension, const Monomial& m,
                                   const Monomial& n0, const MonomialIdeal& j0,
                                   const TermOrder& order, TailMode mode);

/// True iff every monomial involving a block variable exceeds every
/// block-free monomial (checked on the rows of the order matrix).
bool eliminates(const TermOrder& order, const std::vector<bool>& block);

}  // namespace strata
