#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "defres/border_strip.hpp"
#include "defres/partition.hpp"
#include "defres/permutation.hpp"

namespace defres {

/// Beads on an n-runner abacus. Position p lies on runner p mod n in row
/// p / n; positions in row r are r*n, ..., r*n + n - 1.
class AbacusDisplay {
 public:
  /// Beads must be distinct, non-negative, and a positive multiple of
  /// `runners` in number.
  AbacusDisplay(int runners, std::vector<int> beads);
  /// Display of p with exactly `bead_count` beads (bead_count >= len(p)).
  static AbacusDisplay of(const Partition& p, int runners, int bead_count);

  int runners() const { return runners_; }
  /// Bead positions in increasing order; bead number b (natural numbering,
  /// 1-based) sits at beads()[b - 1].
  std::span<const int> beads() const { return beads_; }
  int bead_count() const { return static_cast<int>(beads_.size()); }
  bool occupied(int position) const;

  Partition partition() const;
  /// Rows of the beads on one runner, increasing.
  std::vector<int> runner_rows(int runner) const;
  /// The quotient partition read from one runner.
  Partition runner_partition(int runner) const;

  /// Rows of 'o' (gap) and '*' (bead) markers, each bead tagged with its
  /// natural number.
  std::vector<std::string> render() const;

 private:
  int runners_;
  std::vector<int> beads_;
};

/// Canonical bead count for a shape whose outer partition is `outer`:
/// t*n beads with t = max(1, ceil(len(outer) / n)).
int canonical_bead_count(const Partition& outer, int n);
/// Canonical display: t = max(1, ceil(len(p)/n)), beads p_j + (tn - j).
AbacusDisplay display(const Partition& p, int n);

struct QuotientData {
  /// Component i is read from runner i.
  std::vector<SkewPartition> components;
  int sign = 1;
  /// Maps natural bead numbers of the outer display to those of the inner
  /// display (0-based internally; printed 1-based).
  Permutation relabelling;
};

/// Abacus criterion; throws std::invalid_argument unless n divides |shape|.
bool is_n_decomposable(const SkewPartition& shape, int n);
/// Throws std::invalid_argument for shapes that are not n-decomposable.
QuotientData n_quotient(const SkewPartition& shape, int n);

/// n-core of a partition: every bead pushed as high as it goes on its runner.
Partition n_core(const Partition& p, int n);
/// n-quotient of a partition (inner shape empty) read from its canonical
/// display; requires nothing of the n-core.
std::vector<Partition> partition_quotient(const Partition& p, int n);

bool is_horizontal_strip(const SkewPartition& skew);

struct CycleTableau {
  BorderStripTableau tableau;
  int sign = 1;
};

/// The unique m-border-strip tableau of type (n), when one exists. Requires
/// |shape| = m*n.
std::optional<CycleTableau> unique_cycle_tableau(const SkewPartition& shape, int m, int n);

/// An n-quotient border-strip tableau: one tableau per runner, and for each
/// label of the source tableau the runner whose tableau carries it.
struct QuotientTableau {
  std::vector<BorderStripTableau> components;
  std::vector<int> runner_of_label;
  /// Labels (1-based) carried by component i, in increasing order.
  std::vector<int> labels(int runner) const;
  friend bool operator==(const QuotientTableau&, const QuotientTableau&) = default;
};

/// Tracks each length n*alpha_j strip of t to a bead moving alpha_j rows
/// up one runner. Throws std::invalid_argument if some part of the type of t
/// is not divisible by n.
QuotientTableau quotient_bijection(const BorderStripTableau& t, int n);

}  // namespace defres
