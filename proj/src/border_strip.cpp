#include "defres/border_strip.hpp"

#include <algorithm>
#include <functional>

#include "defres/memo.hpp"

namespace defres {

SkewPartition BorderStripTableau::shape() const {
  if (chain.empty()) return {};
  return SkewPartition(chain.back(), chain.front());
}

SkewPartition BorderStripTableau::strip(int label) const {
  return SkewPartition(chain.at(label), chain.at(label - 1));
}

Composition BorderStripTableau::type() const {
  std::vector<int> parts;
  for (std::size_t j = 1; j < chain.size(); ++j) parts.push_back(chain[j].size() - chain[j - 1].size());
  return Composition(std::move(parts));
}

bool is_border_strip(const SkewPartition& skew) {
  // Nonempty rows must be consecutive, and consecutive rows must share
  // exactly one column.
  const Partition& outer = skew.outer();
  const Partition& inner = skew.inner();
  int first = -1, last = -1;
  for (int i = 0; i < outer.length(); ++i) {
    if (outer[i] == inner[i]) continue;
    if (first < 0) first = i;
    else if (last != i - 1) return false;
    last = i;
  }
  if (first < 0) return false;
  for (int i = first; i < last; ++i)
    if (outer[i + 1] - inner[i] != 1) return false;
  return true;
}

StripMeta strip_meta(const SkewPartition& skew) {
  if (!is_border_strip(skew)) throw std::invalid_argument(to_string(skew) + " is not a border strip");
  int top = 0, bottom = 0;
  for (int i = 0; i < skew.outer().length(); ++i) {
    if (skew.outer()[i] > skew.inner()[i]) {
      if (top == 0) top = i + 1;
      bottom = i + 1;
    }
  }
  return {skew.size(), bottom - top, top};
}

// Both moves work on beta-numbers beta_i = p_i + B - 1 - i, descending. Moving
// one bead past `between` others changes only the parts in between.

std::vector<StripMove> removable_strips(const Partition& outer, int length, const Partition& bound) {
  std::vector<StripMove> out;
  if (length <= 0) return out;
  const int beads = outer.length();
  auto beta = [&](int i) { return outer[i] + beads - 1 - i; };
  for (int j = 0; j < beads; ++j) {
    const int target = beta(j) - length;
    if (target < 0) continue;
    int between = 0;
    bool blocked = false;
    for (int i = j + 1; i < beads && beta(i) >= target; ++i) {
      if (beta(i) == target) blocked = true;
      ++between;
    }
    if (blocked) continue;
    Partition::Parts parts(outer.parts().begin(), outer.parts().end());
    for (int i = j; i < j + between; ++i) parts[i] = outer[i + 1] - 1;
    parts[j + between] = target - (beads - 1 - (j + between));
    Partition result(std::move(parts));
    if (!contains(result, bound)) continue;
    out.push_back({std::move(result), between, j + 1});
  }
  return out;
}

std::vector<StripMove> addable_strips(const Partition& inner, int length, const Partition& bound) {
  std::vector<StripMove> out;
  if (length <= 0) return out;
  const int beads = bound.length();
  if (inner.length() > beads) return out;
  auto beta = [&](int i) { return inner[i] + beads - 1 - i; };
  for (int j = 0; j < beads; ++j) {
    const int target = beta(j) + length;
    int above = 0;
    bool blocked = false;
    for (int i = 0; i < j; ++i) {
      if (beta(i) == target) blocked = true;
      if (beta(i) > target) ++above;
    }
    if (blocked) continue;
    const int new_part = target - (beads - 1 - above);
    if (new_part > bound[above]) continue;
    Partition::Parts parts(beads, 0);
    for (int i = 0; i < beads; ++i) parts[i] = inner[i];
    for (int i = j; i > above; --i) parts[i] = inner[i - 1] + 1;
    parts[above] = new_part;
    Partition result(std::move(parts));
    if (!contains(bound, result)) continue;
    out.push_back({std::move(result), j - above, above + 1});
  }
  return out;
}

namespace {

using Rows = boost::container::small_vector<int, 16>;

// Calls f(inner', height) for each border strip of length g that can be
// added to `inner` inside `outer` (rows of equal length), within rows
// lo..hi. `inner` is changed in place for the call and restored after. A
// strip in rows a..b sets row r to inner[r-1] + 1 for a < r <= b and puts the
// remaining boxes in row a.
template <class F>
void each_added_strip(const Rows& outer, Rows& inner, int g, int lo, int hi, F&& f) {
  Rows saved;
  for (int b = lo; b <= hi; ++b) {
    int below = 0;
    for (int a = b; a >= lo; --a) {
      if (a < b) {
        if (inner[a] + 1 > outer[a + 1]) break;
        below += inner[a] + 1 - inner[a + 1];
      }
      const int top = inner[a] + g - below;
      if (top <= inner[a]) break;
      if (top > outer[a] || (a > 0 && top > inner[a - 1])) continue;
      saved.assign(inner.begin() + a, inner.begin() + b + 1);
      for (int r = b; r > a; --r) inner[r] = inner[r - 1] + 1;
      inner[a] = top;
      f(inner, b - a);
      std::copy(saved.begin(), saved.end(), inner.begin() + a);
    }
  }
}

Rows padded(const Partition& p, std::size_t rows) {
  Rows out(p.parts().begin(), p.parts().end());
  out.resize(rows, 0);
  return out;
}

}  // namespace

std::vector<Partition> strip_reachable(const Partition& inner, int length, int count, const Partition& bound) {
  if (length <= 0 || !contains(bound, inner)) return {};
  static detail::SharedMemo<std::vector<Partition>> cache;
  detail::Key key{length, count};
  key.add(inner);
  key.add(bound);
  if (auto hit = cache.find(key)) return std::move(*hit);
  const Rows o = padded(bound, bound.length());
  std::vector<Rows> layer{padded(inner, o.size())}, next;
  for (int step = 0; step < count && !layer.empty(); ++step) {
    next.clear();
    for (Rows& p : layer)
      each_added_strip(o, p, length, 0, static_cast<int>(o.size()) - 1, [&](const Rows& q, int) { next.push_back(q); });
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::swap(layer, next);
  }
  std::vector<Partition> out;
  out.reserve(layer.size());
  for (Rows& r : layer) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    out.emplace_back(Partition::Parts(r.begin(), r.end()));
  }
  cache.insert(std::move(key), out);
  return out;
}

namespace {

// Peels the strip with the largest remaining label from the current outer
// shape. With block > 1 the row-number condition is enforced between
// consecutive labels of a block.
std::vector<BorderStripTableau> enumerate_impl(const SkewPartition& shape, const Composition& type, int block) {
  if (type.size() != shape.size())
    throw std::invalid_argument("type of size " + std::to_string(type.size()) + " does not match shape " +
                                to_string(shape));
  const int k = type.length();
  std::vector<BorderStripTableau> out;
  std::vector<Partition> rev{shape.outer()};
  std::vector<int> row_of(k + 2, 0);
  std::function<void(const Partition&, int)> rec = [&](const Partition& cur, int label) {
    if (label == 0) {
      if (cur == shape.inner()) out.push_back({std::vector<Partition>(rev.rbegin(), rev.rend())});
      return;
    }
    for (StripMove& mv : removable_strips(cur, type[label - 1], shape.inner())) {
      if (label < k && (label - 1) / block == label / block && mv.row_number < row_of[label + 1]) continue;
      row_of[label] = mv.row_number;
      rev.push_back(mv.result);
      rec(mv.result, label - 1);
      rev.pop_back();
    }
  };
  rec(shape.outer(), k);
  std::sort(out.begin(), out.end());
  return out;
}

detail::SharedMemo<Int>& mn_cache() {
  static detail::SharedMemo<Int> cache;
  return cache;
}

// The Murnaghan-Nakayama recursion on raw rows (outer and inner of equal
// length). Values are unchanged by translating the diagram, so memo entries
// are keyed on the trimmed rows and shared between different outer shapes.
Int mn_rows(const Rows& outer, const Rows& inner, std::span<const int> gamma, int depth = 2) {
  int first = 0, last = static_cast<int>(outer.size()) - 1;
  while (first <= last && outer[first] == inner[first]) ++first;
  while (last >= first && outer[last] == inner[last]) --last;
  if (gamma.empty()) return first > last ? 1 : 0;
  if (first > last) return 0;
  const int shift = inner[last];
  if (gamma.size() == 1) {
    for (int r = first; r < last; ++r)
      if (outer[r + 1] != inner[r] + 1) return 0;
    return (last - first) % 2 == 0 ? 1 : -1;
  }
  // Up to three strips are cheaper to recount than to look up. A query and
  // its first strip in an order other than weakly decreasing rarely repeat;
  // memoizing them mostly grows the table.
  const bool memo = gamma.size() > 3 && (depth >= 2 || std::is_sorted(gamma.begin(), gamma.end(), std::greater<>()));
  auto sum = [&](const Rows& o, Rows i, int lo, int hi) {
    Int total = 0;
    each_added_strip(o, i, gamma.front(), lo, hi, [&](const Rows& next, int height) {
      const Int sub = mn_rows(o, next, gamma.subspan(1), depth + 1);
      total = height % 2 == 0 ? checked_add(total, sub) : checked_sub(total, sub);
    });
    return total;
  };
  if (!memo) return sum(outer, inner, first, last);
  Rows o(outer.begin() + first, outer.begin() + last + 1), i(inner.begin() + first, inner.begin() + last + 1);
  for (int& v : o) v -= shift;
  for (int& v : i) v -= shift;
  detail::Key key;
  key.add(std::span<const int>(o.data(), o.size()));
  key.add(std::span<const int>(i.data(), i.size()));
  key.add(gamma);
  if (auto hit = mn_cache().find(key)) return *hit;
  const Int total = sum(o, std::move(i), 0, last - first);
  mn_cache().insert(std::move(key), total);
  return total;
}

Int mn_rec(const SkewPartition& whole, std::span<const int> gamma) {
  const Partition& outer = whole.outer();
  Rows o(outer.parts().begin(), outer.parts().end()), i(o.size(), 0);
  for (int r = 0; r < whole.inner().length(); ++r) i[r] = whole.inner()[r];
  return mn_rows(o, i, gamma, 0);
}

}  // namespace

std::vector<BorderStripTableau> enumerate_bst(const SkewPartition& shape, const Composition& type) {
  return enumerate_impl(shape, type, 1);
}

int sign(const BorderStripTableau& t) {
  int height = 0;
  for (int j = 1; j <= t.strip_count(); ++j) height += strip_meta(t.strip(j)).height;
  return height % 2 == 0 ? 1 : -1;
}

Int mn_value(const SkewPartition& shape, const Composition& gamma) {
  if (gamma.size() != shape.size())
    throw std::invalid_argument("cycle type of size " + std::to_string(gamma.size()) + " does not match shape " +
                                to_string(shape));
  return mn_rec(shape, gamma.parts());
}

Int mn_value(const SkewPartition& shape, const Partition& gamma) { return mn_value(shape, as_composition(gamma)); }

std::vector<BorderStripTableau> enumerate_m_bst(const SkewPartition& shape, int m, const Composition& gamma) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (checked_mul(m, gamma.size()) != shape.size())
    throw std::invalid_argument("m * |gamma| does not match the size of " + to_string(shape));
  return enumerate_impl(shape, repeat_parts(gamma, m), m);
}

namespace {

detail::SharedMemo<Int>& a_cache() {
  static detail::SharedMemo<Int> cache;
  return cache;
}

// The row-number condition only relates strips within one block, so an
// m-border-strip tableau splits at the end of its first block into one of
// type (gamma_1) on tau/mu and one of type (gamma_2, ...) on lambda/tau.
// As for the character values, a query and its first block are memoized only
// for weakly decreasing gamma. With m = 1 this is the character value.
Int a_rec(const SkewPartition& whole, int m, std::span<const int> gamma, int depth = 2) {
  if (gamma.empty()) return whole.size() == 0 ? 1 : 0;
  if (m == 1) return mn_rec(whole, gamma);
  const bool memo =
      gamma.size() == 1 || depth >= 2 || std::is_sorted(gamma.begin(), gamma.end(), std::greater<>());
  const SkewPartition shape = trimmed(whole);
  const Partition& outer = shape.outer();
  const Partition& inner = shape.inner();
  detail::Key key;
  if (memo) {
    key.add(m);
    key.add(outer);
    key.add(inner);
    key.add(gamma);
    if (auto hit = a_cache().find(key)) return *hit;
  }
  Int total = 0;
  if (gamma.size() == 1) {
    for (const auto& t : enumerate_impl(shape, Composition(std::vector<int>(m, gamma[0])), m))
      total = checked_add(total, sign(t));
  } else {
    for (const Partition& tau : strip_reachable(inner, gamma.front(), m, outer)) {
      const Int first = a_rec(SkewPartition(tau, inner), m, gamma.first(1));
      if (first == 0) continue;
      total = checked_add(total, checked_mul(first, a_rec(SkewPartition(outer, tau), m, gamma.subspan(1), depth + 1)));
    }
  }
  if (memo) a_cache().insert(std::move(key), total);
  return total;
}

}  // namespace

Int a_coefficient(const SkewPartition& shape, int m, const Composition& gamma) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (checked_mul(m, gamma.size()) != shape.size())
    throw std::invalid_argument("m * |gamma| does not match the size of " + to_string(shape));
  return a_rec(shape, m, gamma.parts(), 0);
}

void clear_mn_cache() {
  mn_cache().clear();
  a_cache().clear();
}

namespace {

std::vector<std::string> render_grid(const std::vector<std::vector<int>>& cells) {
  // Cell value 0 marks an inner box.
  int widest = 1;
  for (const auto& row : cells)
    for (int v : row) widest = std::max(widest, static_cast<int>(std::to_string(v).size()));
  std::vector<std::string> lines;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c] == 0 ? ":" : std::to_string(row[c]);
      if (widest > 1) {
        if (c) line += ' ';
        cell = std::string(widest - cell.size(), ' ') + cell;
      }
      line += cell;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::vector<std::string> render(const BorderStripTableau& t, const std::vector<int>& labels) {
  if (t.chain.empty()) return {};
  if (!labels.empty() && static_cast<int>(labels.size()) != t.strip_count())
    throw std::invalid_argument("render: wrong number of labels");
  const Partition& outer = t.chain.back();
  std::vector<std::vector<int>> cells(outer.length());
  for (int i = 0; i < outer.length(); ++i) {
    cells[i].assign(outer[i], 0);
    for (int c = t.chain.front()[i]; c < outer[i]; ++c) {
      int j = 1;
      while (t.chain[j][i] <= c) ++j;
      cells[i][c] = labels.empty() ? j : labels[j - 1];
    }
  }
  return render_grid(cells);
}

std::vector<std::string> render(const SkewPartition& shape) {
  std::vector<std::string> lines;
  for (int i = 0; i < shape.outer().length(); ++i)
    lines.push_back(std::string(shape.inner()[i], ':') + std::string(shape.outer()[i] - shape.inner()[i], '#'));
  return lines;
}

}  // namespace defres
