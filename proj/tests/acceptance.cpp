// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. Arguments, if any, select criteria by number.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "defres/abacus.hpp"
#include "defres/border_strip.hpp"
#include "defres/character.hpp"
#include "defres/deflation.hpp"
#include "defres/permutation.hpp"
#include "defres/wreath.hpp"
#include "oracles.hpp"
#include "young.hpp"

using namespace defres;

namespace {

const SkewPartition kEx{Partition{6, 5, 3, 2}, Partition{3, 1}};
const SkewPartition kFig{Partition{8, 5, 3, 2, 2, 2}, Partition{2, 2, 1, 1, 1}};
const std::vector<std::pair<int, int>> kGrid{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}};

class Checks {
 public:
  template <class What>
  void expect(bool ok, const What& what) {
    ++count_;
    if (ok) return;
    std::lock_guard lock(mu_);
    if (failures_++ == 0) first_ = what();
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    expect(got == want, [&] {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      return s.str();
    });
  }
  long failures() const { return failures_; }
  long count() const { return count_; }
  const std::string& first() const { return first_; }

 private:
  std::mutex mu_;
  std::atomic<long> count_{0};
  std::atomic<long> failures_{0};
  std::string first_;
};

// Runs body(i) for i in [0, size) on all cores.
void parallel_for(std::size_t size, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < size;) body(i);
    });
  for (auto& t : pool) t.join();
}

std::string show(const SkewPartition& s) {
  std::ostringstream o;
  o << s;
  return o.str();
}

std::string show(const Partition& p) {
  std::ostringstream o;
  o << p;
  return o.str();
}

Partition ones(int r) { return Partition(std::vector<int>(r, 1)); }

std::vector<int> sorted_signs(const std::vector<BorderStripTableau>& ts) {
  std::vector<int> out;
  for (const auto& t : ts) out.push_back(sign(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Criterion 1.
void worked_example(Checks& c) {
  c.equal(defres_theorem(make_query(kEx, 2, Composition{1, 2, 3})), 1, "a(1,2,3)");
  const auto ts = enumerate_m_bst(kEx, 2, Composition{1, 2, 3});
  c.equal(ts.size(), 3u, "tableaux of type (1,2,3)");
  c.expect(sorted_signs(ts) == std::vector<int>{-1, 1, 1}, [] { return std::string("signs of type (1,2,3)"); });
  c.equal(a_coefficient(kEx, 2, Composition{2, 1, 3}), 1, "a(2,1,3)");
  const auto us = enumerate_m_bst(kEx, 2, Composition{2, 1, 3});
  c.equal(us.size(), 1u, "tableaux of type (2,1,3)");
  if (us.size() == 1) c.equal(sign(us[0]), 1, "sign of type (2,1,3)");
}

// Criterion 2.
void figures(Checks& c) {
  const BorderStripTableau fig1 = young({"::112444", "::122", ":11", ":1", ":3", "33"});
  c.expect(fig1.shape() == kFig, [] { return std::string("figure 1 shape"); });
  std::vector<int> heights;
  for (int j = 1; j <= fig1.strip_count(); ++j) heights.push_back(strip_meta(fig1.strip(j)).height);
  c.expect(heights == std::vector<int>{3, 1, 1, 0}, [] { return std::string("figure 1 heights"); });
  c.equal(sign(fig1), -1, "figure 1 sign");

  c.expect(is_n_decomposable(kFig, 3), [] { return std::string("3-decomposable"); });
  const QuotientData q = n_quotient(kFig, 3);
  c.equal(cycle_notation(q.relabelling), "(1 2)(3 4)", "relabelling");
  c.equal(q.sign, 1, "3-sign");
  c.expect(q.components == std::vector<SkewPartition>{SkewPartition(Partition{1, 1, 1}),
                                                       SkewPartition(Partition{3, 1}, Partition{1, 1}),
                                                       SkewPartition()},
           [] { return std::string("3-quotient"); });

  const auto ts = enumerate_bst(kFig, Composition{6, 3, 3, 3});
  c.equal(ts.size(), 4u, "tableaux of type (6,3,3,3)");
  std::set<std::pair<std::vector<BorderStripTableau>, std::vector<int>>> images;
  for (const auto& t : ts) {
    const QuotientTableau qt = quotient_bijection(t, 3);
    int prod = q.sign;
    for (const auto& comp : qt.components) prod *= sign(comp);
    c.equal(prod, sign(t), "quotient tuple sign");
    images.insert({qt.components, qt.runner_of_label});
  }
  c.equal(images.size(), 4u, "distinct quotient tuples");
}

// Criterion 3.
void murnaghan_nakayama_example(Checks& c) {
  c.equal(mn_value(kFig, Composition{6, 3, 3, 3}), -2, "chi(6,3,3,3)");
  const auto ts = enumerate_bst(kFig, Composition{6, 3, 3, 3});
  c.expect(sorted_signs(ts) == std::vector<int>{-1, -1, -1, 1}, [] { return std::string("signs"); });
  const FarahatSides f = farahat_check(kFig, 3, Partition{2, 1, 1, 1});
  c.equal(f.lhs, -2, "farahat lhs");
  c.equal(f.rhs, -2, "farahat rhs");
}

// Criterion 4.
void chi21_example(Checks& c) {
  const Partition kappa{2, 1};
  const Partition lambda{6, 4, 2};
  c.equal(defres_recursive(make_query(SkewPartition(lambda), 3, kappa, Composition{2, 1, 1})), 1, "transposition");
  c.equal(defres_recursive(make_query(SkewPartition(lambda), 3, kappa, Composition{2, 2})), 5,
          "double transposition");
  const std::vector<Partition> pair{kappa, kappa};
  c.equal(lr_coefficient(Partition{6}, pair), 0, "c^(6)");
  c.equal(ncycle_vanishing(Partition{6}, kappa, 2), 0, "(6) on a transposition");
  const std::vector<Partition> taus{Partition{4, 2}, Partition{4, 1, 1}, Partition{3, 3}, Partition{2, 2, 2}};
  const std::vector<Int> at_transpositions{2, -1, -1, 1};
  const std::vector<Int> at_double{2, 1, 1, 1};
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const std::string name = "tau=" + show(taus[i]);
    const Int coeff = lr_coefficient(taus[i], pair);
    c.equal(coeff, 1, "c^" + name);
    const Int rest = single_cycle_defres(SkewPartition(lambda, taus[i]), 3, 2, kappa);
    c.equal(coeff * rest, at_transpositions[i], "transposition term " + name);
    const Int first = single_cycle_defres(SkewPartition(taus[i]), 3, 2, kappa);
    c.equal(first * rest, at_double[i], "double transposition term " + name);
  }
}

// Criterion 5.
void theorem_vs_oracle(Checks& c) {
  for (auto [m, n] : kGrid) {
    const auto shapes = skew_partitions_of(m * n);
    for (const Partition& gamma : partitions_of(n)) {
      const WreathProfile profile = wreath_profile(trivial_character(m), n, representative(gamma));
      parallel_for(shapes.size(), [&](std::size_t i) {
        const SkewPartition& s = shapes[i];
        const Int got = defres_theorem(make_query(s, m, as_composition(gamma)));
        const Int want = oracle_defres(s, profile);
        c.expect(got == want, [&] {
          return "m=" + std::to_string(m) + " shape " + show(s) + " gamma " + show(gamma) + ": " +
                 std::to_string(got) + " vs " + std::to_string(want);
        });
      });
    }
  }
}

// Criterion 6.
void farahat_grid(Checks& c) {
  for (auto [m, n] : kGrid) {
    const auto shapes = skew_partitions_of(m * n);
    const auto alphas = partitions_of(m);
    parallel_for(shapes.size(), [&](std::size_t i) {
      for (const Partition& a : alphas) {
        const FarahatSides f = farahat_check(shapes[i], n, a);
        c.expect(f.lhs == f.rhs, [&] { return "shape " + show(shapes[i]) + " n=" + std::to_string(n) + " alpha " + show(a); });
      }
    });
  }
}

// Wreath elements are decoded from permutations of the m*n points, block j
// being {j*m, ..., j*m + m - 1}.
WreathElement decode(const Permutation& p, int m, int n) {
  std::vector<int> top(n);
  WreathElement w;
  w.base.resize(n);
  for (int j = 0; j < n; ++j) {
    const int gj = p(j * m) / m;
    top[j] = gj;
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = p(j * m + i) % m;
    w.base[gj] = Permutation(img);
  }
  w.top = Permutation(top);
  return w;
}

std::vector<WreathElement> wreath_group(int m, int n) {
  const auto base = all_permutations(m);
  std::vector<WreathElement> out;
  for (const Permutation& g : all_permutations(n)) {
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      WreathElement w;
      for (int j = 0; j < n; ++j) w.base.push_back(base[pick[j]]);
      w.top = g;
      out.push_back(w);
      int j = 0;
      while (j < n && ++pick[j] == base.size()) pick[j++] = 0;
      if (j == n) break;
    }
  }
  return out;
}

// Values of Ind_H^W phi on every element of W, H given by membership, as
// |C_W(w)| / |H| times the sum of phi over the class of w inside H. The
// characters of S_m wr S_n are integer valued.
std::vector<Int> induce(const std::vector<Permutation>& group, const std::function<bool(const Permutation&)>& in_h,
                        const std::function<Int(const Permutation&)>& phi, Checks& c) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < group.size(); ++k) index[group[k].image] = k;
  std::vector<int> class_of(group.size(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (class_of[k] >= 0) continue;
    classes.emplace_back();
    for (const auto& x : group) {
      const std::size_t y = index.at(compose(compose(x, group[k]), inverse(x)).image);
      if (class_of[y] < 0) {
        class_of[y] = static_cast<int>(classes.size()) - 1;
        classes.back().push_back(y);
      }
    }
  }
  Int order_h = 0;
  for (const auto& x : group) order_h += in_h(x);
  std::vector<Int> per_class;
  for (const auto& cls : classes) {
    Int sum = 0;
    for (std::size_t y : cls)
      if (in_h(group[y])) sum += phi(group[y]);
    const Int centralizer = static_cast<Int>(group.size() / cls.size());
    c.expect(sum * centralizer % order_h == 0, [] { return std::string("induced value is not an integer"); });
    per_class.push_back(sum * centralizer / order_h);
  }
  std::vector<Int> out;
  for (std::size_t k = 0; k < group.size(); ++k) out.push_back(per_class[class_of[k]]);
  return out;
}

// Criterion 7.
void wreath_identities(Checks& c) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto elements = wreath_group(m, n);
      std::vector<Permutation> perms;
      for (const auto& w : elements) {
        perms.push_back(to_permutation(w));
        c.expect(to_permutation(decode(perms.back(), m, n)) == perms.back(), [] { return std::string("point encoding"); });
      }
      const Int base_order = checked_pow(factorial(m), n);
      const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      // Irreducibles of the form phi~^{x n} Inf chi^nu.
      for (const Partition& kappa : partitions_of(m))
        for (const Partition& phi : partitions_of(m))
          for (const Partition& nu : partitions_of(n))
            for (const Permutation& g : all_permutations(n)) {
              const ClassFunction theta = irreducible_character(kappa), other = irreducible_character(phi);
              const Int chi_nu = irreducible_character(nu)(cycle_type(g));
              Int sum = 0;
              for (const auto& w : elements)
                if (w.top == g) sum += tilde_theta_value(other, w) * chi_nu * tilde_theta_value(theta, w);
              c.expect(Rational(sum, base_order) == Rational(kappa == phi ? chi_nu : 0),
                       [&] { return cell + " average against theta~ for kappa " + show(kappa) + " phi " + show(phi); });
            }
      // Irreducibles induced from a base character with two distinct factors.
      const auto irreps = partitions_of(m);
      if (irreps.size() >= 2 && n >= 2) {
        auto top_of = [&](const Permutation& p) { return decode(p, m, n).top; };
        for (const Partition& k1 : irreps)
          for (const Partition& k2 : irreps) {
            if (k1 == k2) continue;
            const ClassFunction t1 = irreducible_character(k1), t2 = irreducible_character(k2);
            std::vector<std::pair<std::function<bool(const Permutation&)>, std::function<Int(const Permutation&)>>>
                inducing;
            if (n == 2) {
              inducing.emplace_back([&](const Permutation& p) { return top_of(p) == Permutation::identity(2); },
                                    [&](const Permutation& p) {
                                      const WreathElement w = decode(p, m, n);
                                      return t1(cycle_type(w.base[0])) * t2(cycle_type(w.base[1]));
                                    });
            } else {
              // Stabilizer of t1 x t1 x t2 is (S_m wr S_2) x S_m.
              for (const Partition& nu : partitions_of(2)) {
                const ClassFunction chi_nu = irreducible_character(nu);
                inducing.emplace_back([&](const Permutation& p) { return top_of(p)(2) == 2; },
                                      [&, chi_nu](const Permutation& p) {
                                        const WreathElement w = decode(p, m, n);
                                        const Permutation g12({w.top(0), w.top(1)});
                                        const WreathElement pair_part{{w.base[0], w.base[1]}, g12};
                                        return tilde_theta_value(t1, pair_part) * chi_nu(cycle_type(g12)) *
                                               t2(cycle_type(w.base[2]));
                                      });
              }
            }
            for (const auto& [in_h, phi] : inducing) {
              const auto xi = induce(perms, in_h, phi, c);
              Int norm = 0;
              for (Int v : xi) norm += v * v;
              c.equal(norm, static_cast<Int>(perms.size()), cell + " norm of an induced character");
              for (const Partition& kappa : irreps) {
                const ClassFunction theta = irreducible_character(kappa);
                for (const Permutation& g : all_permutations(n)) {
                  Int num_sum = 0;
                  for (std::size_t i = 0; i < elements.size(); ++i)
                    if (elements[i].top == g) num_sum += xi[i] * tilde_theta_value(theta, elements[i]);
                  c.expect(num_sum == 0, [&] { return cell + " average does not vanish for kappa " + show(kappa); });
                }
              }
            }
          }
      }
      // n-cycles: the average over h, and the sum over classes of S_m.
      const Permutation cyc = representative(Partition{n});
      const auto hs = all_permutations(m);
      for (const Partition& kappa : partitions_of(m)) {
        const ClassFunction theta = irreducible_character(kappa);
        const WreathProfile profile = wreath_profile(theta, n, cyc);
        for (const SkewPartition& s : skew_partitions_of(m * n)) {
          const Int got = oracle_defres(s, profile);
          Int over_h = 0;
          for (const Permutation& h : hs) {
            WreathElement w;
            w.base.assign(n, Permutation::identity(m));
            w.base[0] = h;
            w.top = cyc;
            over_h += mn_value(s, cycle_type(w)) * theta(cycle_type(h));
          }
          c.equal(over_h, got * factorial(m), cell + " single-cycle average " + show(s));
          Int over_classes = 0;
          for (const Partition& a : partitions_of(m))
            over_classes += mn_value(s, stretch(a, n)) * theta(a) * (factorial(m) / centralizer_order(a));
          c.equal(over_classes, got * factorial(m), cell + " class sum " + show(s));
        }
      }
      // Two conjugate top permutations give the same value.
      for (const Partition& gamma : partitions_of(n)) {
        std::vector<Permutation> same;
        for (const Permutation& g : all_permutations(n))
          if (cycle_type(g) == gamma) same.push_back(g);
        const Permutation& a = same.front();
        const Permutation& b = same.back();
        for (const Partition& kappa : partitions_of(m)) {
          const ClassFunction theta = irreducible_character(kappa);
          const WreathProfile pa = wreath_profile(theta, n, a, {true});
          const WreathProfile pb = wreath_profile(theta, n, b, {true});
          for (const SkewPartition& s : skew_partitions_of(m * n))
            c.equal(oracle_defres(s, pa), oracle_defres(s, pb), cell + " conjugacy " + show(s));
        }
      }
    }
}

// Criterion 8.
void sign_and_degree(Checks& c) {
  for (auto [m, n] : kGrid) {
    const auto shapes = skew_partitions_of(m * n);
    for (const Partition& gamma : partitions_of(n)) {
      const WreathProfile profile = wreath_profile(sign_character(m), n, representative(gamma));
      const int eta = (m % 2 == 0 || (n - gamma.length()) % 2 == 0) ? 1 : -1;
      parallel_for(shapes.size(), [&](std::size_t i) {
        const SkewPartition& s = shapes[i];
        const Int got = defres_sign(make_query(s, m, ones(m), as_composition(gamma)));
        const Int want = oracle_defres(s, profile);
        const Int formula = eta * a_coefficient(conjugate(s), m, as_composition(gamma));
        c.expect(got == want && got == formula, [&] {
          return "sign m=" + std::to_string(m) + " " + show(s) + " gamma " + show(gamma) + ": " + std::to_string(got) +
                 " oracle " + std::to_string(want) + " conjugate " + std::to_string(formula);
        });
      });
    }
    const Composition identity(std::vector<int>(n, 1));
    for (const Partition& kappa : partitions_of(m)) {
      const WreathProfile profile = wreath_profile(irreducible_character(kappa), n, Permutation::identity(n));
      for (const Partition& lambda : partitions_of(m * n)) {
        const Int deg = defres_degree(lambda, kappa, n);
        const SkewPartition s(lambda);
        const Int rec = defres_recursive(make_query(s, m, kappa, identity));
        const Int want = oracle_defres(s, profile);
        c.expect(deg == rec && deg == want, [&] {
          return "degree " + show(lambda) + " kappa " + show(kappa) + ": " + std::to_string(deg) + " recursive " +
                 std::to_string(rec) + " oracle " + std::to_string(want);
        });
      }
    }
  }
}

// Criterion 9.
void reorder_invariance(Checks& c) {
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; m * n <= 10; ++n) {
      const auto shapes = skew_partitions_of(m * n);
      for (const Partition& gamma : partitions_of(n)) {
        const auto orders = oracle::orderings(gamma);
        if (orders.size() == 1) continue;
        // Entries for other cycle types are not reused here.
        clear_mn_cache();
        parallel_for(shapes.size(), [&](std::size_t i) {
          const Int v = a_coefficient(shapes[i], m, as_composition(gamma));
          for (const auto& g : orders) {
            const Int w = a_coefficient(shapes[i], m, Composition(g));
            c.expect(v == w, [&] { return "m=" + std::to_string(m) + " " + show(shapes[i]) + " gamma " + show(gamma); });
          }
        });
      }
    }
}

// Criterion 10.
void character_tables(Checks& c) {
  for (int r = 0; r <= 8; ++r) {
    const auto ps = partitions_of(r);
    std::vector<ClassFunction> chars;
    for (const auto& l : ps) chars.push_back(irreducible_character(l));
    for (std::size_t a = 0; a < ps.size(); ++a)
      for (std::size_t b = 0; b < ps.size(); ++b)
        c.equal(inner_product(chars[a], chars[b]).str(), a == b ? "1" : "0", "rows " + show(ps[a]) + " " + show(ps[b]));
    for (const auto& a : ps)
      for (const auto& b : ps) {
        Int sum = 0;
        for (const auto& ch : chars) sum += ch(a) * ch(b);
        c.equal(sum, a == b ? centralizer_order(a) : 0, "columns " + show(a) + " " + show(b));
      }
    const ClassFunction triv = irreducible_character(r == 0 ? Partition{} : Partition{r});
    const ClassFunction sgn = irreducible_character(ones(r));
    for (const auto& a : ps) {
      c.equal(triv(a), 1, "trivial at " + show(a));
      c.equal(sgn(a), (r - a.length()) % 2 == 0 ? 1 : -1, "sign at " + show(a));
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  void (*run)(Checks&);
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int a = 1; a < argc; ++a) only.insert(std::atoi(argv[a]));
  const std::vector<Criterion> criteria{
      {1, "2-border-strip tableaux of (6,5,3,2)/(3,1)", 1, worked_example},
      {2, "strip heights, abacus quotient and quotient bijection of (8,5,3,2,2,2)/(2,2,1,1,1)", 1, figures},
      {3, "character value -2 at (6,3,3,3) and both sides of the quotient formula", 1, murnaghan_nakayama_example},
      {4, "deflation of chi^(6,4,2) by chi^(2,1)", 5, chi21_example},
      {5, "signed m-border-strip counts equal the wreath average", 600, theorem_vs_oracle},
      {6, "character values from n-quotients", 600, farahat_grid},
      {7, "wreath product averaging identities for m, n <= 3", 120, wreath_identities},
      {8, "sign deflation and degrees", 600, sign_and_degree},
      {9, "a coefficients are invariant under reordering gamma, mn <= 10", 120, reorder_invariance},
      {10, "character tables for r <= 8", 30, character_tables},
  };
  int failed = 0;
  for (const Criterion& k : criteria) {
    if (!only.empty() && !only.count(k.id)) continue;
    clear_mn_cache();
    clear_deflation_cache();
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      k.run(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && checks.failures() == 0 && seconds <= k.limit_seconds;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k.id << ": " << k.name << " (" << checks.count()
              << " checks, " << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0)
              << k.limit_seconds << " s)";
    if (!error.empty()) std::cout << " exception: " << error;
    if (checks.failures() > 0) std::cout << " " << checks.failures() << " failed, first: " << checks.first();
    if (seconds > k.limit_seconds) std::cout << " over time";
    std::cout << std::endl;
  }
  return failed;
}
