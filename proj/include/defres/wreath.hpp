#pragma once

#include <map>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "defres/character.hpp"
#include "defres/partition.hpp"
#include "defres/permutation.hpp"

namespace defres {

/// (h_1, ..., h_n; g) in S_m wr S_n, acting on {1..m} x {1..n} by
/// (i, j) -> (h_{g(j)}(i), g(j)).
struct WreathElement {
  std::vector<Permutation> base;
  Permutation top;

  int m() const;
  int n() const { return top.size(); }
};

/// Throws std::invalid_argument if the base has the wrong length or the
/// base permutations disagree in degree.
void validate(const WreathElement& w);

/// The permutation of {0..mn-1} with point (i, j) encoded as j*m + i
/// (0-based; 1-based this is (j-1)m + i).
Permutation to_permutation(const WreathElement& w);
Partition cycle_type(const WreathElement& w);

/// For each cycle (x_1 ... x_s) of the top permutation, the product
/// h_{x_s} ... h_{x_1}; theta of the wreath element is the product of theta
/// over these.
std::vector<Permutation> cycle_products(const WreathElement& w);
Int tilde_theta_value(const ClassFunction& theta, const WreathElement& w);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Sum literally over all (m!)^n base elements.
  bool naive = false;
  /// Maximum number of wreath elements evaluated.
  std::uint64_t budget = 10'000'000;
};

/// The shape-independent half of the oracle for a fixed theta and g: for
/// each cycle type of (k; g) in S_{mn}, the sum of tilde-theta over the base
/// elements k reaching it, and |B|.
struct WreathProfile {
  std::map<Partition, Int> weight;
  Int denominator = 1;
};

/// The default path evaluates one representative per combination of
/// conjugacy classes of the top-cycle products, weighted by class sizes;
/// `naive` iterates over the whole base group. Throws BudgetExceeded.
WreathProfile wreath_profile(const ClassFunction& theta, int n, const Permutation& g,
                             const OracleOptions& options = {});

/// (1/|B|) sum over k in B of chi^{shape}((k; g)) * tilde-theta((k; g)).
/// Throws std::logic_error if the average is not an integer.
Int oracle_defres(const SkewPartition& shape, const WreathProfile& profile);
Int oracle_defres(const SkewPartition& shape, const ClassFunction& theta, int n, const Permutation& g,
                  const OracleOptions& options = {});

/// chi^{shape}(g_{n alpha}).
Int omega(const SkewPartition& shape, int m, int n, const Partition& alpha);
/// chi^{shape} evaluated at the literal wreath element (h, 1, ..., 1; g)
/// with h of cycle type alpha and g = (1 2 ... n).
Int omega_literal(const SkewPartition& shape, int m, int n, const Partition& alpha);

}  // namespace defres
