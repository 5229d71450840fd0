#include "defres/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace defres {

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
  std::vector<bool> seen(image.size(), false);
  for (int v : image) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  Permutation p;
  p.image.resize(size);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r;
  r.image.resize(a.size());
  for (int i = 0; i < a.size(); ++i) r.image[i] = a.image[b.image[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.image.resize(p.size());
  for (int i = 0; i < p.size(); ++i) r.image[p.image[i]] = i;
  return r;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (int start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = p.image[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lens;
  for (const auto& c : cycles(p)) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(std::move(lens));
}

int sign(const Permutation& p) {
  int transpositions = 0;
  for (const auto& c : cycles(p)) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation representative(const Partition& type) {
  Permutation p = Permutation::identity(type.size());
  int base = 0;
  for (int len : type.parts()) {
    for (int k = 0; k < len; ++k) p.image[base + k] = base + (k + 1) % len;
    base += len;
  }
  return p;
}

std::vector<Permutation> all_permutations(int size) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(size);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace defres
