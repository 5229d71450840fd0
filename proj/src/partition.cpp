#include "defres/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

namespace defres {

Partition::Partition(Parts parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ = checked_add(size_, parts_[i]);
  }
}

SkewPartition::SkewPartition(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw std::invalid_argument("inner partition " + to_string(inner_) + " is not contained in " +
                                to_string(outer_));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition(std::move(out));
}

SkewPartition conjugate(const SkewPartition& s) {
  return SkewPartition(conjugate(s.outer()), conjugate(s.inner()));
}

std::vector<Partition> intermediates(const SkewPartition& skew, int c) {
  if (c < 0 || c > skew.size()) throw std::invalid_argument("intermediates: c out of range");
  const Partition& outer = skew.outer();
  const Partition& inner = skew.inner();
  const int rows = outer.length();
  std::vector<Partition> out;
  std::vector<int> cur(rows, 0);
  // Rows are filled top to bottom with the largest admissible part first,
  // which yields lexicographically descending output.
  std::function<void(int, int)> fill = [&](int row, int left) {
    if (row == rows) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    int hi = outer[row];
    if (row > 0) hi = std::min(hi, cur[row - 1]);
    int lo = inner[row];
    // Capacity of the rows below bounds how little this row may take.
    for (int v = std::min(hi, lo + left); v >= lo; --v) {
      int room = 0;
      for (int r = row + 1; r < rows; ++r) room += std::min(outer[r], v) - inner[r];
      if (left - (v - lo) > room) break;
      cur[row] = v;
      fill(row + 1, left - (v - lo));
    }
    cur[row] = 0;
  };
  fill(0, c);
  return out;
}

std::vector<Partition> partitions_of(int r) {
  if (r < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

SkewPartition trimmed(const SkewPartition& s) {
  const Partition& outer = s.outer();
  const Partition& inner = s.inner();
  int first = 0, last = outer.length() - 1;
  while (first <= last && outer[first] == inner[first]) ++first;
  while (last >= first && outer[last] == inner[last]) --last;
  if (first > last) return {};
  if (first == 0 && inner[last] == 0 && last == outer.length() - 1) return s;
  const int shift = inner[last];
  Partition::Parts o, i;
  for (int r = first; r <= last; ++r) {
    o.push_back(outer[r] - shift);
    i.push_back(inner[r] - shift);
  }
  return SkewPartition(Partition(std::move(o)), Partition(std::move(i)));
}

std::vector<SkewPartition> skew_partitions_of(int r) {
  if (r < 0) throw std::invalid_argument("skew_partitions_of: negative size");
  std::vector<SkewPartition> out;
  if (r == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> outer, inner;
  // Row i occupies columns (inner_i, outer_i]. No empty column means the
  // columns (inner_i, outer_1] are already covered after row i, which holds
  // iff outer_i >= inner_{i-1} at every step; the last row must start at
  // column 1.
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (inner.back() == 0) out.emplace_back(Partition(outer), Partition(inner));
      return;
    }
    const bool first = outer.empty();
    const int max_outer = first ? left : outer.back();
    for (int lam = max_outer; lam >= 1; --lam) {
      if (!first && lam < inner.back()) break;
      const int max_inner = first ? lam - 1 : std::min(inner.back(), lam - 1);
      for (int mu = max_inner; mu >= 0; --mu) {
        const int len = lam - mu;
        if (len > left) break;
        // The remaining rows must still reach column 1.
        if (mu > left - len) continue;
        outer.push_back(lam);
        inner.push_back(mu);
        rec(left - len);
        outer.pop_back();
        inner.pop_back();
      }
    }
  };
  rec(r);
  std::sort(out.begin(), out.end());
  return out;
}

Int centralizer_order(const Partition& alpha) {
  std::map<int, int> mult;
  for (int p : alpha.parts()) ++mult[p];
  Int z = 1;
  for (auto [part, count] : mult) {
    z = checked_mul(z, checked_pow(part, count));
    z = checked_mul(z, factorial(count));
  }
  return z;
}

Int class_size(const Partition& alpha) { return factorial(alpha.size()) / centralizer_order(alpha); }

Partition stretch(const Partition& alpha, int n) {
  if (n < 1) throw std::invalid_argument("stretch: n must be positive");
  std::vector<int> parts(alpha.vec());
  for (int& p : parts) p = static_cast<int>(checked_mul(p, n));
  return Partition(std::move(parts));
}

Composition repeat_parts(const Composition& gamma, int m) {
  if (m < 1) throw std::invalid_argument("repeat_parts: m must be positive");
  std::vector<int> parts;
  for (int p : gamma.parts()) parts.insert(parts.end(), m, p);
  return Composition(std::move(parts));
}

Partition sorted(const Composition& gamma) {
  std::vector<int> parts(gamma.vec());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Composition as_composition(const Partition& p) { return Composition(p.vec()); }

std::vector<Box> boxes(const SkewPartition& s) {
  std::vector<Box> out;
  for (int i = 0; i < s.outer().length(); ++i)
    for (int c = s.inner()[i]; c < s.outer()[i]; ++c) out.push_back({i + 1, c + 1});
  return out;
}

namespace {

std::vector<int> parse_parts(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw ParseError("empty partition text (use '-' for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
      throw ParseError("bad part '" + std::string(tok) + "' in '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<int> parts = parse_parts(text);
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw ParseError("partition '" + std::string(text) + "' is not weakly decreasing");
  return Partition(std::move(parts));
}

SkewPartition parse_skew(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewPartition(parse_partition(text));
  Partition outer = parse_partition(text.substr(0, slash));
  Partition inner = parse_partition(text.substr(slash + 1));
  if (!contains(outer, inner))
    throw ParseError("'" + std::string(text) + "': inner partition is not contained in outer");
  return SkewPartition(std::move(outer), std::move(inner));
}

Composition parse_composition(std::string_view text) { return Composition(parse_parts(text)); }

namespace {
std::string join(std::span<const int> parts) {
  if (parts.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}
}  // namespace

std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const Composition& c) { return join(c.parts()); }
std::string to_string(const SkewPartition& s) {
  if (s.inner().empty()) return to_string(s.outer());
  return to_string(s.outer()) + "/" + to_string(s.inner());
}

std::string paren(const Partition& p) { return p.empty() ? "-" : "(" + join(p.parts()) + ")"; }
std::string paren(const SkewPartition& s) { return paren(s.outer()) + "/" + paren(s.inner()); }


}  // namespace defres
