#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "defres/checked.hpp"

namespace defres {

/// Raised for malformed partition / skew-partition / composition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros, so two partitions compare equal exactly
/// when they have the same nonzero parts. Indexing past the last part reads 0.
class Partition {
 public:
  /// Inline capacity covers every shape met at desk scale.
  using Parts = boost::container::small_vector<int, 12>;

  Partition() = default;
  /// Validates and strips trailing zeros. Throws std::invalid_argument if the
  /// parts are negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts) : Partition(Parts(parts.begin(), parts.end())) {}
  explicit Partition(Parts parts);
  Partition(std::initializer_list<int> parts) : Partition(Parts(parts.begin(), parts.end())) {}

  std::span<const int> parts() const { return {parts_.data(), parts_.size()}; }
  std::vector<int> vec() const { return {parts_.begin(), parts_.end()}; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  Parts parts_;
  int size_ = 0;
};

/// The diagram of outer minus the diagram of inner, with inner contained in outer.
class SkewPartition {
 public:
  SkewPartition() = default;
  SkewPartition(Partition outer, Partition inner);
  explicit SkewPartition(Partition outer) : outer_(std::move(outer)) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }

  friend auto operator<=>(const SkewPartition&, const SkewPartition&) = default;
  friend bool operator==(const SkewPartition&, const SkewPartition&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// An ordered list of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// A cell of a Young diagram, 1-based.
struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

bool contains(const Partition& outer, const Partition& inner);
Partition conjugate(const Partition& p);
SkewPartition conjugate(const SkewPartition& s);

/// All tau with inner <= tau <= outer and |tau| - |inner| = c, in
/// lexicographically descending order.
std::vector<Partition> intermediates(const SkewPartition& skew, int c);

/// All partitions of r in reverse-lexicographic order: (r), (r-1,1), ..., (1^r).
std::vector<Partition> partitions_of(int r);

/// The translate of the diagram that starts in row 1 and column 1: fully
/// inner rows above and below it and columns left of it are dropped. Empty
/// rows between nonempty ones are kept.
SkewPartition trimmed(const SkewPartition& s);

/// Skew-partitions of size r whose diagrams have no empty row and no empty
/// column. Every skew diagram is a translate of exactly one of these, up to
/// the removal of empty rows and columns. Sorted ascending by (outer, inner).
std::vector<SkewPartition> skew_partitions_of(int r);

/// z_alpha = prod_i i^{m_i} m_i!.
Int centralizer_order(const Partition& alpha);
/// |S_r| / z_alpha, the size of the conjugacy class of cycle type alpha.
Int class_size(const Partition& alpha);

Partition stretch(const Partition& alpha, int n);
Composition repeat_parts(const Composition& gamma, int m);

/// Sorts the parts of a composition into a partition.
Partition sorted(const Composition& gamma);
Composition as_composition(const Partition& p);

std::vector<Box> boxes(const SkewPartition& s);

/// Text grammar: "6,5,3,2"; "-" for the empty partition; skew "6,5,3,2/3,1".
Partition parse_partition(std::string_view text);
SkewPartition parse_skew(std::string_view text);
Composition parse_composition(std::string_view text);

std::string to_string(const Partition& p);
std::string to_string(const SkewPartition& s);
std::string to_string(const Composition& c);
/// "(3,1)" or "-" for the empty partition.
std::string paren(const Partition& p);
/// "(3,1)/(1,1)", "(1,1,1)/-", "-/-".
std::string paren(const SkewPartition& s);


}  // namespace defres
