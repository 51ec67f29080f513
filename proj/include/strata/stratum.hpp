#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "strata/generic_poly.hpp"
#include "strata/groebner.hpp"
#include "strata/monomial.hpp"
#include "strata/param_poly.hpp"
#include "strata/term_order.hpp"

namespace strata {

enum class TailMode { General, Homogeneous };

/// Which monomials may carry a parameter in each generic polynomial.
struct TailSpec {
  TailMode mode = TailMode::General;
  /// Multiples of these monomials are removed from every tail.
  std::vector<Monomial> excluded;
  /// Per generator of J (same order): an explicit finite set the tail is
  /// intersected with, or nullopt for no restriction. May be left empty.
  std::vector<std::optional<std::vector<Monomial>>> allowed;
};

/// The parameter c_{i,beta}: coefficient of X^beta in the i-th polynomial.
struct Parameter {
  std::size_t generator = 0;
  Monomial tail;
  /// alpha_i - beta.
  IntVector level;
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// One monic polynomial per minimal generator of J, with the parameters
/// sorted by (level, generator index, decreasing tail monomial). Parameter k
/// is the ParamPoly variable k.
struct GenericBasis {
  MonomialIdeal ideal;
  TermOrder order;
  TailMode mode = TailMode::General;
  std::vector<MarkedPolynomial> polys;
  std::vector<Parameter> params;
};

/// Ideal of the parameter ring together with the parameter list.
struct ParamIdeal {
  std::vector<ParamPoly> generators;
  std::vector<Parameter> params;
};

struct StratumOptions {
  /// Specialize to zero, pair by pair, the parameters whose level is too high
  /// to occur in that pair's coefficients.
  bool level_by_level = true;
  /// Reduce every S-pair instead of a generating set of the syzygies.
  bool all_pairs = false;
};

/// Eliminable parameters chosen by Gaussian elimination.
struct EliminableSet {
  std::vector<ParamIndex> pivots;
  std::size_t rank = 0;
};

/// Result of removing the eliminable parameters from A.
struct Elimination {
  std::vector<ParamIndex> eliminated;
  std::vector<ParamIndex> survivors;
  /// eliminated parameter -> polynomial in the survivors.
  std::map<ParamIndex, ParamPoly> substitution;
  /// Generators of the contraction of A to the surviving parameters.
  std::vector<ParamPoly> residual;
};

struct StratumReport {
  std::size_t params = 0;
  std::size_t rank = 0;
  std::size_t ed = 0;
  int dim = 0;
  bool smooth = false;
  /// Reduced Groebner basis (graded lex in the survivors, integer
  /// normalized), written in the original parameter indices.
  std::vector<ParamPoly> generators;
  std::vector<ParamIndex> survivors;
  std::vector<ParamIndex> eliminated;
};

/// Throws NotReliable, EmptyStratum, or InvalidArgument for J = (1) or (0).
GenericBasis build_generic_basis(const MonomialIdeal& ideal,
                                 const TailSpec& tails,
                                 const TermOrder& order);

/// Level of a parameter monomial: the sum of its factors' levels.
IntVector level_of(const ParamMonomial& m, std::span<const Parameter> params);

std::vector<SPair> selected_pairs(const GenericBasis& basis,
                                  const StratumOptions& options);

/// Generators of L(A): S-polynomials reduced modulo the monomials of J.
std::vector<ParamPoly> linear_part(const GenericBasis& basis,
                                   const StratumOptions& options = {});

/// Pivots of the echelon form of the linear forms, columns taken in
/// increasing parameter index.
EliminableSet eliminable_set(std::span<const ParamPoly> linear);

/// Coefficients of the fully reduced S-polynomials, deduplicated up to
/// scaling and sorted by level.
ParamIdeal stratum_ideal(const GenericBasis& basis,
                         const StratumOptions& options = {});

/// Removes the eliminable parameters level by level. Linear terms of a
/// generator of level l only involve parameters of level l, and its other
/// terms only parameters of lower level, so after substituting the pivots
/// found below l the echelon form at level l yields new pivots together
/// with generators free of them.
Elimination eliminate_by_levels(const ParamIdeal& ideal, const TermOrder& order);

StratumReport analyze(const GenericBasis& basis,
                      const StratumOptions& options = {});

bool check_lambda_homogeneous(const ParamIdeal& ideal);

/// Total order on polynomials used to sort and deduplicate generators.
bool param_poly_less(const ParamPoly& a, const ParamPoly& b);

}  // namespace strata
