#include "defres/character.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "defres/border_strip.hpp"

namespace defres {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Int Rational::to_integer() const {
  if (den_ != 1) throw std::domain_error("expected an integer, got " + str());
  return num_;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

ClassFunction::ClassFunction(int degree) : degree_(degree) {
  for (Partition& p : partitions_of(degree)) values_.emplace(std::move(p), 0);
}

ClassFunction::ClassFunction(int degree, std::map<Partition, Int> values) : degree_(degree), values_(std::move(values)) {
  const auto classes = partitions_of(degree);
  if (values_.size() != classes.size()) throw std::invalid_argument("class function must cover every class");
  for (const Partition& p : classes)
    if (!values_.count(p)) throw std::invalid_argument("class function is missing class " + to_string(p));
}

Int ClassFunction::operator()(const Partition& cls) const {
  auto it = values_.find(cls);
  if (it == values_.end())
    throw std::out_of_range(to_string(cls) + " is not a class of S_" + std::to_string(degree_));
  return it->second;
}

void ClassFunction::set(const Partition& cls, Int value) {
  auto it = values_.find(cls);
  if (it == values_.end())
    throw std::out_of_range(to_string(cls) + " is not a class of S_" + std::to_string(degree_));
  it->second = value;
}

ClassFunction trivial_character(int r) {
  ClassFunction f(r);
  for (const Partition& p : partitions_of(r)) f.set(p, 1);
  return f;
}

ClassFunction sign_character(int r) {
  ClassFunction f(r);
  for (const Partition& p : partitions_of(r)) f.set(p, (r - p.length()) % 2 == 0 ? 1 : -1);
  return f;
}

ClassFunction skew_character(const SkewPartition& shape) {
  ClassFunction f(shape.size());
  for (const Partition& p : partitions_of(shape.size())) f.set(p, mn_value(shape, p));
  return f;
}

ClassFunction irreducible_character(const Partition& lambda) { return skew_character(SkewPartition(lambda)); }

namespace {

i128 mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in inner product");
  return r;
}

i128 add128(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in inner product");
  return r;
}

}  // namespace

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("inner product of class functions of degrees " + std::to_string(f.degree()) +
                                " and " + std::to_string(g.degree()));
  // Common denominator r!: each term f g / z_alpha is f g |class| / r!.
  i128 total = 0;
  for (const auto& [cls, fv] : f.values())
    total = add128(total, mul128(mul128(fv, g(cls)), class_size(cls)));
  const Int order = factorial(f.degree());
  const Int sign = total < 0 ? -1 : 1;
  i128 mag = total < 0 ? -total : total;
  const i128 gcd = std::gcd(static_cast<u128>(mag), static_cast<u128>(order));
  mag /= gcd;
  if (mag > std::numeric_limits<Int>::max()) throw std::overflow_error("inner product does not fit in 64 bits");
  return Rational(sign * static_cast<Int>(mag), order / static_cast<Int>(gcd));
}

namespace {

Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace

Int induced_value(std::span<const ClassFunction> thetas, const Partition& alpha) {
  int total_degree = 0;
  for (const auto& th : thetas) total_degree += th.degree();
  if (total_degree != alpha.size())
    throw std::invalid_argument("induced_value: factor degrees sum to " + std::to_string(total_degree) +
                                " but the class " + to_string(alpha) + " has size " + std::to_string(alpha.size()));
  const int rows = static_cast<int>(thetas.size());
  if (rows == 0) return 1;

  // Cycles of equal length are distinguishable, so a distribution of c
  // cycles of one length as (c_0, ..., c_{n-1}) accounts for
  // c! / (c_0! ... c_{n-1}!) fixed tabloids.
  std::vector<std::pair<int, int>> groups;
  for (int p : alpha.parts()) {
    if (!groups.empty() && groups.back().first == p)
      ++groups.back().second;
    else
      groups.push_back({p, 1});
  }
  std::vector<int> capacity(rows);
  for (int i = 0; i < rows; ++i) capacity[i] = thetas[i].degree();
  std::vector<std::vector<int>> row_parts(rows);

  Int total = 0;
  std::function<void(std::size_t, Int)> by_group;
  std::function<void(std::size_t, int, int, int, Int)> by_row = [&](std::size_t g, int row, int left, int count,
                                                                     Int weight) {
    const int len = groups[g].first;
    if (row == rows - 1) {
      if (left * len > capacity[row]) return;
      capacity[row] -= left * len;
      row_parts[row].insert(row_parts[row].end(), left, len);
      by_group(g + 1, weight);
      row_parts[row].resize(row_parts[row].size() - left);
      capacity[row] += left * len;
      return;
    }
    for (int c = 0; c <= left && c * len <= capacity[row]; ++c) {
      capacity[row] -= c * len;
      row_parts[row].insert(row_parts[row].end(), c, len);
      by_row(g, row + 1, left - c, count, checked_mul(weight, binomial(left, c)));
      row_parts[row].resize(row_parts[row].size() - c);
      capacity[row] += c * len;
    }
  };
  by_group = [&](std::size_t g, Int weight) {
    if (g == groups.size()) {
      Int term = weight;
      for (int i = 0; i < rows; ++i) {
        term = checked_mul(term, thetas[i](Partition(row_parts[i])));
        if (term == 0) return;
      }
      total = checked_add(total, term);
      return;
    }
    by_row(g, 0, groups[g].second, groups[g].second, weight);
  };
  by_group(0, 1);
  return total;
}

ClassFunction induced_character(std::span<const ClassFunction> thetas) {
  int degree = 0;
  for (const auto& th : thetas) degree += th.degree();
  ClassFunction f(degree);
  for (const Partition& p : partitions_of(degree)) f.set(p, induced_value(thetas, p));
  return f;
}

Int lr_coefficient(const Partition& kappa, std::span<const Partition> factors) {
  int size = 0;
  std::vector<ClassFunction> chars;
  for (const Partition& nu : factors) {
    size += nu.size();
    chars.push_back(irreducible_character(nu));
  }
  if (size != kappa.size())
    throw std::invalid_argument("lr_coefficient: factors have total size " + std::to_string(size) + ", not |" +
                                to_string(kappa) + "|");
  return inner_product(induced_character(chars), irreducible_character(kappa)).to_integer();
}

std::vector<RestrictionTerm> skew_restriction(const SkewPartition& shape, int c) {
  if (c < 1 || c >= shape.size())
    throw std::invalid_argument("skew_restriction: need 1 <= c < " + std::to_string(shape.size()));
  std::vector<RestrictionTerm> out;
  for (Partition& tau : intermediates(shape, c)) {
    SkewPartition left(tau, shape.inner());
    SkewPartition right(shape.outer(), tau);
    out.push_back({std::move(tau), std::move(left), std::move(right)});
  }
  return out;
}

}  // namespace defres
