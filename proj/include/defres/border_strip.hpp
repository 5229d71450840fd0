#pragma once

#include <string>
#include <vector>

#include "defres/partition.hpp"

namespace defres {

/// A border-strip tableau as a chain mu = chain[0] < chain[1] < ... < chain[k] = lambda
/// where every chain[j] / chain[j-1] is a border strip. The strip labelled j
/// (1-based) is chain[j] / chain[j-1].
struct BorderStripTableau {
  std::vector<Partition> chain;

  SkewPartition shape() const;
  int strip_count() const { return static_cast<int>(chain.size()) - 1; }
  SkewPartition strip(int label) const;
  Composition type() const;

  friend auto operator<=>(const BorderStripTableau&, const BorderStripTableau&) = default;
  friend bool operator==(const BorderStripTableau&, const BorderStripTableau&) = default;
};

struct StripMeta {
  int length = 0;
  int height = 0;
  /// Topmost (lowest-numbered) row met by the strip, 1-based.
  int row_number = 0;
  friend bool operator==(const StripMeta&, const StripMeta&) = default;
};

/// Result of removing a strip from, or adding a strip to, a partition.
struct StripMove {
  Partition result;
  int height = 0;
  int row_number = 0;
};

/// Edge-connected and free of 2x2 blocks. The empty shape is not a strip.
bool is_border_strip(const SkewPartition& skew);
/// Throws std::invalid_argument if skew is not a border strip.
StripMeta strip_meta(const SkewPartition& skew);

/// Partitions tau with bound <= tau and outer / tau a border strip of the
/// given length.
std::vector<StripMove> removable_strips(const Partition& outer, int length, const Partition& bound);
/// Partitions tau with tau <= bound and tau / inner a border strip of the
/// given length.
std::vector<StripMove> addable_strips(const Partition& inner, int length, const Partition& bound);
/// Partitions tau <= bound obtained from inner by adding `count` border
/// strips of the given length, sorted and without repeats.
std::vector<Partition> strip_reachable(const Partition& inner, int length, int count, const Partition& bound);

/// All border-strip tableaux of the given shape and type, sorted by chain.
std::vector<BorderStripTableau> enumerate_bst(const SkewPartition& shape, const Composition& type);

int sign(const BorderStripTableau& t);

/// chi^{outer/inner}(g_gamma) by the memoized Murnaghan--Nakayama recursion
/// that adds a strip of length gamma[0] to the inner shape first.
Int mn_value(const SkewPartition& shape, const Composition& gamma);
Int mn_value(const SkewPartition& shape, const Partition& gamma);
void clear_mn_cache();

/// Border-strip tableaux of type gamma^{*m} whose blocks of m equal-length
/// strips have weakly decreasing row numbers in label order.
std::vector<BorderStripTableau> enumerate_m_bst(const SkewPartition& shape, int m, const Composition& gamma);

/// Signed count of m-border-strip tableaux of the given shape and type.
Int a_coefficient(const SkewPartition& shape, int m, const Composition& gamma);

/// Box-labelled grid, one line per row: ':' for inner boxes, the strip label
/// for outer boxes. Labels are single characters when all are < 10,
/// otherwise space separated. `labels` overrides the default 1..k labels.
std::vector<std::string> render(const BorderStripTableau& t, const std::vector<int>& labels = {});
std::vector<std::string> render(const SkewPartition& shape);

}  // namespace defres
