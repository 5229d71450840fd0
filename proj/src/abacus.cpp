#include "defres/abacus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace defres {

AbacusDisplay::AbacusDisplay(int runners, std::vector<int> beads) : runners_(runners), beads_(std::move(beads)) {
  if (runners_ < 1) throw std::invalid_argument("an abacus needs at least one runner");
  std::sort(beads_.begin(), beads_.end());
  if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
    throw std::invalid_argument("abacus bead positions must be distinct");
  if (!beads_.empty() && beads_.front() < 0) throw std::invalid_argument("abacus bead positions must be non-negative");
  if (beads_.empty() || beads_.size() % runners_ != 0)
    throw std::invalid_argument("bead count must be a positive multiple of the number of runners");
}

AbacusDisplay AbacusDisplay::of(const Partition& p, int runners, int bead_count) {
  if (bead_count < p.length()) throw std::invalid_argument("too few beads for " + to_string(p));
  std::vector<int> beads(bead_count);
  for (int j = 0; j < bead_count; ++j) beads[j] = p[j] + bead_count - 1 - j;
  return AbacusDisplay(runners, std::move(beads));
}

bool AbacusDisplay::occupied(int position) const {
  return std::binary_search(beads_.begin(), beads_.end(), position);
}

Partition AbacusDisplay::partition() const {
  const int count = bead_count();
  std::vector<int> parts(count);
  // beads_ is increasing, so the largest beta-number is the last bead.
  for (int j = 0; j < count; ++j) parts[j] = beads_[count - 1 - j] - (count - 1 - j);
  return Partition(std::move(parts));
}

std::vector<int> AbacusDisplay::runner_rows(int runner) const {
  std::vector<int> rows;
  for (int p : beads_)
    if (p % runners_ == runner) rows.push_back(p / runners_);
  return rows;
}

Partition AbacusDisplay::runner_partition(int runner) const {
  std::vector<int> rows = runner_rows(runner);
  std::vector<int> parts;
  for (std::size_t j = 0; j < rows.size(); ++j) parts.push_back(rows[j] - static_cast<int>(j));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<std::string> AbacusDisplay::render() const {
  const int width = static_cast<int>(std::to_string(bead_count()).size());
  const int last_row = beads_.back() / runners_;
  std::vector<std::string> lines;
  for (int r = 0; r <= last_row; ++r) {
    std::string line;
    for (int i = 0; i < runners_; ++i) {
      const int pos = r * runners_ + i;
      auto it = std::lower_bound(beads_.begin(), beads_.end(), pos);
      std::string cell;
      if (it != beads_.end() && *it == pos)
        cell = "*" + std::to_string(it - beads_.begin() + 1);
      else
        cell = "o";
      cell.resize(width + 1, ' ');
      if (i) line += ' ';
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

int canonical_bead_count(const Partition& outer, int n) {
  if (n < 1) throw std::invalid_argument("the number of runners must be positive");
  const int t = std::max(1, (outer.length() + n - 1) / n);
  return t * n;
}

AbacusDisplay display(const Partition& p, int n) { return AbacusDisplay::of(p, n, canonical_bead_count(p, n)); }

namespace {

struct DisplayPair {
  AbacusDisplay outer;
  AbacusDisplay inner;
};

DisplayPair displays(const SkewPartition& shape, int n) {
  const int beads = canonical_bead_count(shape.outer(), n);
  return {AbacusDisplay::of(shape.outer(), n, beads), AbacusDisplay::of(shape.inner(), n, beads)};
}

bool dominates(const DisplayPair& d) {
  for (int i = 0; i < d.outer.runners(); ++i) {
    std::vector<int> lo = d.outer.runner_rows(i), hi = d.inner.runner_rows(i);
    if (lo.size() != hi.size()) return false;
    for (std::size_t k = 0; k < lo.size(); ++k)
      if (lo[k] < hi[k]) return false;
  }
  return true;
}

}  // namespace

bool is_n_decomposable(const SkewPartition& shape, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (shape.size() % n != 0)
    throw std::invalid_argument("|" + to_string(shape) + "| = " + std::to_string(shape.size()) +
                                " is not divisible by " + std::to_string(n));
  return dominates(displays(shape, n));
}

QuotientData n_quotient(const SkewPartition& shape, int n) {
  if (!is_n_decomposable(shape, n))
    throw std::invalid_argument(to_string(shape) + " is not " + std::to_string(n) + "-decomposable");
  const DisplayPair d = displays(shape, n);
  QuotientData q;
  for (int i = 0; i < n; ++i)
    q.components.emplace_back(d.outer.runner_partition(i), d.inner.runner_partition(i));

  // Bead b of the outer display goes to the bead of the inner display with
  // the same runner and the same number of beads above it on that runner.
  const int count = d.outer.bead_count();
  std::vector<int> image(count);
  std::vector<std::vector<int>> inner_by_runner(n);
  for (int c = 0; c < count; ++c) inner_by_runner[d.inner.beads()[c] % n].push_back(c);
  std::vector<int> level(n, 0);
  for (int b = 0; b < count; ++b) {
    const int runner = d.outer.beads()[b] % n;
    image[b] = inner_by_runner[runner][level[runner]++];
  }
  q.relabelling = Permutation(std::move(image));
  q.sign = sign(q.relabelling);
  return q;
}

Partition n_core(const Partition& p, int n) {
  const AbacusDisplay d = display(p, n);
  std::vector<int> beads;
  for (int i = 0; i < n; ++i) {
    const int count = static_cast<int>(d.runner_rows(i).size());
    for (int k = 0; k < count; ++k) beads.push_back(k * n + i);
  }
  return AbacusDisplay(n, std::move(beads)).partition();
}

std::vector<Partition> partition_quotient(const Partition& p, int n) {
  const AbacusDisplay d = display(p, n);
  std::vector<Partition> out;
  for (int i = 0; i < n; ++i) out.push_back(d.runner_partition(i));
  return out;
}

bool is_horizontal_strip(const SkewPartition& skew) {
  for (int i = 0; i + 1 < skew.outer().length(); ++i)
    if (skew.outer()[i + 1] > skew.inner()[i]) return false;
  return true;
}

std::optional<CycleTableau> unique_cycle_tableau(const SkewPartition& shape, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  if (shape.size() != checked_mul(m, n))
    throw std::invalid_argument("|" + to_string(shape) + "| is not m*n = " + std::to_string(m * n));
  if (!is_n_decomposable(shape, n)) return std::nullopt;
  const QuotientData q = n_quotient(shape, n);
  for (const auto& c : q.components)
    if (!is_horizontal_strip(c)) return std::nullopt;

  const DisplayPair d = displays(shape, n);
  std::set<int> current(d.outer.beads().begin(), d.outer.beads().end());
  const std::set<int> target(d.inner.beads().begin(), d.inner.beads().end());
  std::vector<Partition> rev{shape.outer()};
  for (int step = 0; step < m; ++step) {
    // Move the bead with the largest position that is not a bead position
    // of the inner display up one row.
    int p = -1;
    for (auto it = current.rbegin(); it != current.rend(); ++it)
      if (!target.count(*it)) {
        p = *it;
        break;
      }
    if (p < n || current.count(p - n)) throw std::logic_error("unique_cycle_tableau: blocked bead move");
    current.erase(p);
    current.insert(p - n);
    rev.push_back(AbacusDisplay(n, std::vector<int>(current.begin(), current.end())).partition());
  }
  if (current != target) throw std::logic_error("unique_cycle_tableau: bead moves did not reach the inner display");
  return CycleTableau{{std::vector<Partition>(rev.rbegin(), rev.rend())}, q.sign};
}

std::vector<int> QuotientTableau::labels(int runner) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < runner_of_label.size(); ++j)
    if (runner_of_label[j] == runner) out.push_back(static_cast<int>(j) + 1);
  return out;
}

QuotientTableau quotient_bijection(const BorderStripTableau& t, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (t.chain.empty()) throw std::invalid_argument("tableau has no chain");
  const Composition type = t.type();
  for (int part : type.parts())
    if (part % n != 0)
      throw std::invalid_argument("tableau type " + to_string(type) + " is not " + std::to_string(n) +
                                  "-stretched");
  const int beads = canonical_bead_count(t.chain.back(), n);
  std::vector<std::vector<Partition>> runner_parts;
  for (const Partition& p : t.chain) {
    const AbacusDisplay d = AbacusDisplay::of(p, n, beads);
    std::vector<Partition> row;
    for (int i = 0; i < n; ++i) row.push_back(d.runner_partition(i));
    runner_parts.push_back(std::move(row));
  }
  QuotientTableau out;
  out.components.resize(n);
  for (int i = 0; i < n; ++i) out.components[i].chain.push_back(runner_parts.front()[i]);
  for (std::size_t j = 1; j < t.chain.size(); ++j) {
    int moved = -1;
    for (int i = 0; i < n; ++i) {
      if (runner_parts[j][i] == runner_parts[j - 1][i]) continue;
      if (moved != -1) throw std::logic_error("quotient_bijection: strip spans two runners");
      moved = i;
    }
    if (moved == -1) throw std::logic_error("quotient_bijection: strip moved no bead");
    out.components[moved].chain.push_back(runner_parts[j][moved]);
    out.runner_of_label.push_back(moved);
  }
  return out;
}

}  // namespace defres
