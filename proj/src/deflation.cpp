#include "defres/deflation.hpp"

#include <vector>

#include "defres/abacus.hpp"
#include "defres/border_strip.hpp"
#include "defres/memo.hpp"

namespace defres {

DeflationQuery make_query(SkewPartition shape, int m, Partition theta, Composition gamma) {
  DeflationQuery q{std::move(shape), m, gamma.size(), std::move(theta), std::move(gamma)};
  validate(q);
  return q;
}

DeflationQuery make_query(SkewPartition shape, int m, Composition gamma) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  return make_query(std::move(shape), m, Partition{m}, std::move(gamma));
}

void validate(const DeflationQuery& q) {
  if (q.m < 1) throw std::invalid_argument("m must be positive");
  if (q.n < 0) throw std::invalid_argument("n must be non-negative");
  if (q.gamma.size() != q.n)
    throw std::invalid_argument("cycle type " + to_string(q.gamma) + " is not a composition of n = " +
                                std::to_string(q.n));
  if (q.theta.size() != q.m)
    throw std::invalid_argument("theta " + to_string(q.theta) + " is not a partition of m = " + std::to_string(q.m));
  if (q.shape.size() != checked_mul(q.m, q.n))
    throw std::invalid_argument("|" + to_string(q.shape) + "| = " + std::to_string(q.shape.size()) +
                                " is not m*n = " + std::to_string(q.m * q.n));
}

Int defres_theorem(const DeflationQuery& q) {
  validate(q);
  if (q.theta != Partition{q.m}) throw std::invalid_argument("defres_theorem needs the trivial character theta = (m)");
  return a_coefficient(q.shape, q.m, q.gamma);
}

namespace {

detail::SharedMemo<Int>& single_cache() {
  static detail::SharedMemo<Int> cache;
  return cache;
}

detail::SharedMemo<Int>& recursive_cache() {
  static detail::SharedMemo<Int> cache;
  return cache;
}

std::vector<ClassFunction> quotient_characters(const SkewPartition& shape, int n) {
  std::vector<ClassFunction> chars;
  for (const SkewPartition& c : n_quotient(shape, n).components) chars.push_back(skew_character(c));
  return chars;
}

// Deflations of translated diagrams agree, so both memo tables are keyed on
// trimmed shapes.
Int recursive(const SkewPartition& whole, int m, const Partition& kappa, std::span<const int> gamma,
              bool memo = true) {
  if (gamma.empty()) return whole.size() == 0 ? 1 : 0;
  if (gamma.size() == 1) return single_cycle_defres(whole, m, gamma.front(), kappa);
  const SkewPartition shape = trimmed(whole);
  detail::Key key;
  if (memo) {
    key.add(m);
    key.add(kappa);
    key.add(shape.outer());
    key.add(shape.inner());
    key.add(gamma);
    if (auto hit = recursive_cache().find(key)) return *hit;
  }

  // The first cycle takes m*gamma_1 boxes next to the inner shape, and only
  // gamma_1-decomposable pieces contribute.
  Int total = 0;
  for (const Partition& tau : strip_reachable(shape.inner(), gamma.front(), m, shape.outer())) {
    const Int first = single_cycle_defres(SkewPartition(tau, shape.inner()), m, gamma.front(), kappa);
    if (first == 0) continue;
    const Int rest = recursive(SkewPartition(shape.outer(), tau), m, kappa, gamma.subspan(1));
    total = checked_add(total, checked_mul(first, rest));
  }
  if (memo) recursive_cache().insert(std::move(key), total);
  return total;
}

}  // namespace

Int single_cycle_defres(const SkewPartition& whole, int m, int n, const Partition& kappa) {
  if (kappa.size() != m) throw std::invalid_argument("kappa must be a partition of m");
  if (whole.size() != checked_mul(m, n)) throw std::invalid_argument("|shape| must be m*n");
  const SkewPartition shape = trimmed(whole);
  detail::Key key{m, n};
  key.add(kappa);
  key.add(shape.outer());
  key.add(shape.inner());
  if (auto hit = single_cache().find(key)) return *hit;
  if (!is_n_decomposable(shape, n)) {
    single_cache().insert(std::move(key), 0);
    return 0;
  }
  const QuotientData q = n_quotient(shape, n);
  std::vector<ClassFunction> chars;
  for (const SkewPartition& c : q.components) chars.push_back(skew_character(c));
  const Int mult = inner_product(induced_character(chars), irreducible_character(kappa)).to_integer();
  const Int value = q.sign * mult;
  single_cache().insert(std::move(key), value);
  return value;
}

Int defres_recursive(const DeflationQuery& q) {
  validate(q);
  return recursive(q.shape, q.m, q.theta, q.gamma.parts(), false);
}

FarahatSides farahat_check(const SkewPartition& shape, int n, const Partition& alpha) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (shape.size() != checked_mul(n, alpha.size()))
    throw std::invalid_argument("|" + to_string(shape) + "| is not n*|alpha| = " + std::to_string(n * alpha.size()));
  FarahatSides sides;
  sides.lhs = mn_value(shape, stretch(alpha, n));
  if (is_n_decomposable(shape, n)) {
    const QuotientData q = n_quotient(shape, n);
    sides.rhs = q.sign * induced_value(quotient_characters(shape, n), alpha);
  }
  return sides;
}

Int defres_sign(const DeflationQuery& q) {
  validate(q);
  if (q.theta != Partition(std::vector<int>(q.m, 1)))
    throw std::invalid_argument("defres_sign needs the sign character theta = (1^m)");
  const Int a = a_coefficient(conjugate(q.shape), q.m, q.gamma);
  if (q.m % 2 == 0) return a;
  const bool odd = (q.n - q.gamma.length()) % 2 != 0;
  return odd ? -a : a;
}

Int defres_degree(const Partition& lambda, const Partition& kappa, int n) {
  if (n < 0 || lambda.size() != checked_mul(kappa.size(), n))
    throw std::invalid_argument("|" + to_string(lambda) + "| is not n*|kappa|");
  return lr_coefficient(lambda, std::vector<Partition>(n, kappa));
}

Int ncycle_vanishing(const Partition& lambda, const Partition& kappa, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (lambda.size() != checked_mul(kappa.size(), n))
    throw std::invalid_argument("|" + to_string(lambda) + "| is not n*|kappa|");
  if (!n_core(lambda, n).empty()) return 0;
  const std::vector<Partition> quotient = partition_quotient(lambda, n);
  for (const Partition& part : quotient)
    if (!contains(kappa, part)) return 0;
  return n_quotient(SkewPartition(lambda), n).sign * lr_coefficient(kappa, quotient);
}

ClassFunction defres_character(const SkewPartition& shape, int m, const Partition& kappa) {
  if (m < 1 || shape.size() % m != 0) throw std::invalid_argument("|shape| must be a multiple of m");
  const int n = shape.size() / m;
  ClassFunction f(n);
  for (const Partition& gamma : partitions_of(n))
    f.set(gamma, defres_recursive(make_query(shape, m, kappa, as_composition(gamma))));
  return f;
}

std::map<Partition, Rational> decompose(const ClassFunction& f) {
  std::map<Partition, Rational> out;
  for (const Partition& nu : partitions_of(f.degree())) out.emplace(nu, inner_product(f, irreducible_character(nu)));
  return out;
}

void clear_deflation_cache() {
  single_cache().clear();
  recursive_cache().clear();
}

}  // namespace defres
