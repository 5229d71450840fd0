#pragma once

#include <string>
#include <vector>

#include "defres/partition.hpp"

namespace defres {

/// A permutation of {0, ..., size-1}; `image[i]` is the image of i.
/// Text and cycle notation are 1-based.
struct Permutation {
  std::vector<int> image;

  Permutation() = default;
  explicit Permutation(std::vector<int> img);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// Cycles in order of their smallest element, each starting at that element.
std::vector<std::vector<int>> cycles(const Permutation& p);
Partition cycle_type(const Permutation& p);
int sign(const Permutation& p);

/// A standard element of the given cycle type: consecutive cycles
/// (1 2 ... a1)(a1+1 ...) ...
Permutation representative(const Partition& cycle_type);

/// Every permutation of the given size in lexicographic order of images.
std::vector<Permutation> all_permutations(int size);

/// "(1 2)(3 4)"; fixed points omitted; the identity is "()".
std::string cycle_notation(const Permutation& p);

}  // namespace defres
