#pragma once

#include <map>

#include "defres/character.hpp"
#include "defres/partition.hpp"

namespace defres {

/// Evaluate (Defres^theta chi^{shape})(g) for g in S_n of cycle type gamma,
/// where theta = chi^kappa is an irreducible character of S_m.
struct DeflationQuery {
  SkewPartition shape;
  int m = 1;
  int n = 0;
  /// kappa; trivial is (m), sign is (1^m).
  Partition theta;
  Composition gamma;
};

/// n is taken from gamma. Validates the query.
DeflationQuery make_query(SkewPartition shape, int m, Partition theta, Composition gamma);
/// Trivial theta.
DeflationQuery make_query(SkewPartition shape, int m, Composition gamma);

/// Throws std::invalid_argument unless |shape| = m*n, |gamma| = n, |theta| = m.
void validate(const DeflationQuery& q);

/// Signed count of m-border-strip tableaux; theta must be trivial.
Int defres_theorem(const DeflationQuery& q);

/// Cycle-by-cycle recursion over intermediate shapes, with every single
/// cycle evaluated from the abacus quotient. Any irreducible theta.
Int defres_recursive(const DeflationQuery& q);

/// The single-cycle case: (Defres^theta chi^{shape})(g) for an n-cycle g,
/// |shape| = m*n. Zero unless shape is n-decomposable; otherwise the n-sign
/// times <Ind(quotient skew characters), chi^kappa>.
Int single_cycle_defres(const SkewPartition& shape, int m, int n, const Partition& kappa);

struct FarahatSides {
  Int lhs = 0;
  Int rhs = 0;
};

/// lhs = chi^{shape}(g_{n alpha}); rhs from the n-quotient and induction.
FarahatSides farahat_check(const SkewPartition& shape, int n, const Partition& alpha);

/// Deflation with respect to the sign character, via conjugate shapes.
Int defres_sign(const DeflationQuery& q);

/// (Defres^{chi^kappa} chi^lambda)(1) as the multiplicity of chi^lambda in
/// the character induced from chi^kappa x ... x chi^kappa (n factors).
Int defres_degree(const Partition& lambda, const Partition& kappa, int n);

/// (Defres^{chi^kappa} chi^lambda)(g) for an n-cycle g from the n-core and
/// n-quotient of lambda.
Int ncycle_vanishing(const Partition& lambda, const Partition& kappa, int n);

/// Defres^{chi^kappa} chi^{shape} as a class function on S_n.
ClassFunction defres_character(const SkewPartition& shape, int m, const Partition& kappa);
/// Multiplicity of each chi^nu in a class function.
std::map<Partition, Rational> decompose(const ClassFunction& f);

void clear_deflation_cache();

}  // namespace defres
