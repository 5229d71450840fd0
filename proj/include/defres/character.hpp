#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "defres/partition.hpp"

namespace defres {

/// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational(Int num = 0, Int den = 1);
  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  /// Throws std::domain_error if not an integer.
  Int to_integer() const;
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Int num_;
  Int den_;
};

/// An integer-valued class function on S_r, one value per cycle type.
class ClassFunction {
 public:
  /// The zero function on S_r.
  explicit ClassFunction(int degree);
  /// Throws std::invalid_argument unless `values` has exactly one entry for
  /// each partition of `degree`.
  ClassFunction(int degree, std::map<Partition, Int> values);

  int degree() const { return degree_; }
  /// Throws std::out_of_range for a partition of the wrong size.
  Int operator()(const Partition& cls) const;
  void set(const Partition& cls, Int value);
  const std::map<Partition, Int>& values() const { return values_; }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int degree_;
  std::map<Partition, Int> values_;
};

ClassFunction trivial_character(int r);
ClassFunction sign_character(int r);
/// chi^lambda via the Murnaghan--Nakayama rule.
ClassFunction irreducible_character(const Partition& lambda);
/// chi^{lambda/mu} via the Murnaghan--Nakayama rule.
ClassFunction skew_character(const SkewPartition& shape);

/// sum_alpha f(alpha) g(alpha) / z_alpha. Throws std::invalid_argument on a
/// degree mismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Value at g_alpha of the character induced from theta_0 x ... x theta_{n-1}
/// on the Young subgroup S_{l_0} x ... x S_{l_{n-1}}, l_i = deg theta_i.
/// Sums over the ways of distributing the cycles of g_alpha among the rows
/// of a tabloid with row sizes l_i.
Int induced_value(std::span<const ClassFunction> thetas, const Partition& alpha);
ClassFunction induced_character(std::span<const ClassFunction> thetas);

/// <Ind(chi^{nu_0} x ... x chi^{nu_{k-1}}), chi^kappa>.
Int lr_coefficient(const Partition& kappa, std::span<const Partition> factors);

struct RestrictionTerm {
  Partition tau;
  SkewPartition left;   // tau / mu
  SkewPartition right;  // lambda / tau
};

/// Summands chi^{tau/mu} x chi^{lambda/tau} of the restriction of
/// chi^{lambda/mu} to S_c x S_{|lambda/mu| - c}; requires 1 <= c < |shape|.
std::vector<RestrictionTerm> skew_restriction(const SkewPartition& shape, int c);

}  // namespace defres
