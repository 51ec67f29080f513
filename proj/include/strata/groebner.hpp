#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "strata/generic_poly.hpp"
#include "strata/monomial.hpp"
#include "strata/param_poly.hpp"
#include "strata/term_order.hpp"

namespace strata {

/// Pair of basis indices (i < j) with the lcm of their leading monomials.
struct SPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  friend bool operator==(const SPair&, const SPair&) = default;
};

/// Every pair i < j.
std::vector<SPair> all_pairs(const MonomialIdeal& ideal);

/// Pairs whose syzygies generate the first syzygy module of the monomial
/// basis, minus pairs with coprime monomials. Within each lcm degree only a
/// spanning forest of pairs is kept, relative to the connectivity already
/// provided by pairs with strictly smaller lcm.
std::vector<SPair> syzygy_pairs(const MonomialIdeal& ideal);

/// (l/LM f) f - (l/LM g) g with l = lcm(LM f, LM g).
GenericPolynomial s_polynomial(const MarkedPolynomial& f,
                               const MarkedPolynomial& g);

/// Drops every term whose X-monomial lies in the ideal.
GenericPolynomial reduce_mod_monomials(const GenericPolynomial& p,
                                       const MonomialIdeal& ideal);

/// Optional restrictions on a full reduction.
struct ReductionLimits {
  /// Terms strictly below this monomial are discarded as they appear. They
  /// can never influence coefficients at or above it.
  std::optional<Monomial> floor;
  /// Parameters specialized to zero in the input and in the basis.
  std::function<bool(ParamIndex)> zeroed;
};

/// Full reduction of p by a monic marked basis.
///
/// The largest reducible X-monomial is reduced first, by the reducer with the
/// lowest index. Leading coefficients are 1, so no parameter is ever divided
/// by and the remainder's coefficients stay polynomial.
GenericPolynomial reduce_full(const GenericPolynomial& p,
                              std::span<const MarkedPolynomial> basis,
                              const TermOrder& order,
                              const ReductionLimits& limits = {});

// ---------------------------------------------------------------------------
// Classical Buchberger engine for ideals of Q[c_0, ..., c_{n-1}].

/// Leading monomial of a non-zero polynomial in n variables.
Monomial leading_monomial(const ParamPoly& p, const TermOrder& order);

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
/// The zero ideal gives an empty basis; the unit ideal gives {1}.
std::vector<ParamPoly> groebner_basis(std::span<const ParamPoly> generators,
                                      const TermOrder& order);

/// Remainder of p on division by a Groebner basis.
ParamPoly normal_form(const ParamPoly& p, std::span<const ParamPoly> basis,
                      const TermOrder& order);

/// Generators of the contraction ideal (gens) ∩ Q[c : !drop[c]], taken from a
/// Groebner basis under an elimination order for the dropped variables.
std::vector<ParamPoly> eliminate(std::span<const ParamPoly> generators,
                                 const std::vector<bool>& drop);

/// Krull dimension of Q[c_0..c_{n-1}]/I. Throws UnitIdeal for I = (1).
int krull_dimension(std::span<const ParamPoly> generators,
                    std::size_t num_vars);
/// Same, read off a Groebner basis for the given order.
int krull_dimension(std::span<const ParamPoly> generators,
                    const TermOrder& order);

/// Krull dimension of Q[x_0..x_{n-1}]/(monomials): n minus the smallest
/// number of variables meeting the support of every generator.
int monomial_ideal_dimension(std::span<const Monomial> generators,
                             std::size_t num_vars);

}  // namespace strata
