#include "defres/wreath.hpp"

#include <functional>

#include "defres/border_strip.hpp"

namespace defres {

int WreathElement::m() const { return base.empty() ? 0 : base.front().size(); }

void validate(const WreathElement& w) {
  if (static_cast<int>(w.base.size()) != w.n())
    throw std::invalid_argument("wreath element needs one base permutation per block");
  for (const Permutation& h : w.base)
    if (h.size() != w.m()) throw std::invalid_argument("base permutations must all have the same degree");
}

Permutation to_permutation(const WreathElement& w) {
  validate(w);
  const int m = w.m(), n = w.n();
  Permutation p = Permutation::identity(m * n);
  for (int j = 0; j < n; ++j) {
    const int gj = w.top(j);
    for (int i = 0; i < m; ++i) p.image[j * m + i] = gj * m + w.base[gj](i);
  }
  return p;
}

Partition cycle_type(const WreathElement& w) { return cycle_type(to_permutation(w)); }

std::vector<Permutation> cycle_products(const WreathElement& w) {
  validate(w);
  std::vector<Permutation> out;
  for (const auto& cyc : cycles(w.top)) {
    // cyc = (x_1, x_2 = g(x_1), ...); accumulate h_{x_s} ... h_{x_1}.
    Permutation prod = Permutation::identity(w.m());
    for (int x : cyc) prod = compose(w.base[x], prod);
    out.push_back(std::move(prod));
  }
  return out;
}

Int tilde_theta_value(const ClassFunction& theta, const WreathElement& w) {
  if (theta.degree() != w.m()) throw std::invalid_argument("theta must be a class function on S_m");
  Int v = 1;
  for (const Permutation& prod : cycle_products(w)) v = checked_mul(v, theta(cycle_type(prod)));
  return v;
}

WreathProfile wreath_profile(const ClassFunction& theta, int n, const Permutation& g, const OracleOptions& options) {
  const int m = theta.degree();
  if (n < 0 || g.size() != n) throw std::invalid_argument("g must be a permutation of {1..n}");

  WreathElement w{std::vector<Permutation>(n, Permutation::identity(m)), g};
  WreathProfile profile;
  auto record = [&](Int weight) {
    Int& slot = profile.weight[cycle_type(w)];
    slot = checked_add(slot, checked_mul(weight, tilde_theta_value(theta, w)));
  };

  if (options.naive) {
    const auto group = all_permutations(m);
    const Int order = static_cast<Int>(group.size());
    profile.denominator = checked_pow(order, n);
    if (static_cast<std::uint64_t>(profile.denominator) > options.budget)
      throw BudgetExceeded("naive oracle needs " + std::to_string(profile.denominator) +
                           " evaluations, budget is " + std::to_string(options.budget));
    std::function<void(int)> rec = [&](int j) {
      if (j == n) {
        record(1);
        return;
      }
      for (const Permutation& h : group) {
        w.base[j] = h;
        rec(j + 1);
      }
    };
    rec(0);
  } else {
    // The class of (k; g) depends only on the classes of the top-cycle
    // products, and a cycle of length s has (m!)^{s-1} |beta| base tuples
    // whose product lies in class beta.
    const auto cyc = cycles(g);
    const auto classes = partitions_of(m);
    const Int combos = checked_pow(static_cast<Int>(classes.size()), static_cast<int>(cyc.size()));
    if (static_cast<std::uint64_t>(combos) > options.budget)
      throw BudgetExceeded("oracle needs " + std::to_string(combos) + " evaluations, budget is " +
                           std::to_string(options.budget));
    profile.denominator = checked_pow(factorial(m), static_cast<int>(cyc.size()));
    std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int weight) {
      if (k == cyc.size()) {
        record(weight);
        return;
      }
      for (const Partition& beta : classes) {
        w.base[cyc[k].front()] = representative(beta);
        rec(k + 1, checked_mul(weight, class_size(beta)));
      }
      w.base[cyc[k].front()] = Permutation::identity(m);
    };
    rec(0, 1);
  }
  return profile;
}

Int oracle_defres(const SkewPartition& shape, const WreathProfile& profile) {
  Int total = 0;
  for (const auto& [type, weight] : profile.weight) {
    if (type.size() != shape.size())
      throw std::invalid_argument("|" + to_string(shape) + "| = " + std::to_string(shape.size()) +
                                  " does not match the wreath product degree " + std::to_string(type.size()));
    if (weight != 0) total = checked_add(total, checked_mul(weight, mn_value(shape, type)));
  }
  if (total % profile.denominator != 0)
    throw std::logic_error("oracle average " + std::to_string(total) + "/" + std::to_string(profile.denominator) +
                           " is not an integer");
  return total / profile.denominator;
}

Int oracle_defres(const SkewPartition& shape, const ClassFunction& theta, int n, const Permutation& g,
                  const OracleOptions& options) {
  const int m = theta.degree();
  if (n < 0 || g.size() != n) throw std::invalid_argument("g must be a permutation of {1..n}");
  if (shape.size() != checked_mul(m, n))
    throw std::invalid_argument("|" + to_string(shape) + "| = " + std::to_string(shape.size()) + " is not m*n = " +
                                std::to_string(m * n));
  return oracle_defres(shape, wreath_profile(theta, n, g, options));
}

Int omega(const SkewPartition& shape, int m, int n, const Partition& alpha) {
  if (alpha.size() != m) throw std::invalid_argument("alpha must be a partition of m");
  if (shape.size() != checked_mul(m, n)) throw std::invalid_argument("|shape| must be m*n");
  return mn_value(shape, stretch(alpha, n));
}

Int omega_literal(const SkewPartition& shape, int m, int n, const Partition& alpha) {
  if (alpha.size() != m) throw std::invalid_argument("alpha must be a partition of m");
  if (shape.size() != checked_mul(m, n)) throw std::invalid_argument("|shape| must be m*n");
  std::vector<int> cycle(n);
  for (int j = 0; j < n; ++j) cycle[j] = (j + 1) % n;
  WreathElement w{std::vector<Permutation>(n, Permutation::identity(m)), Permutation(std::move(cycle))};
  if (n > 0) w.base[0] = representative(alpha);
  return mn_value(shape, cycle_type(w));
}

}  // namespace defres
