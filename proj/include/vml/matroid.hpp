#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "vml/core.hpp"
#include "vml/report.hpp"

namespace vml {

struct CheckOptions {
  double tol = kDefaultTolerance;
  /// Worker threads for the outer scan loop. Witness selection does not
  /// depend on this value.
  unsigned threads = 1;
};

/// A valuated matroid candidate: a map from the r-subsets of E to Γ ∪ {∞}.
/// Unlisted subsets are ∞. At least one value must be finite.
class PlueckerVector {
 public:
  PlueckerVector(GroundSet ground, int rank, const std::vector<std::pair<Subset, ExtVal>>& entries);
  static PlueckerVector from_function(GroundSet ground, int rank, const std::function<ExtVal(Subset)>& nu);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }

  /// ν(S) for |S| = rank.
  ExtVal value(Subset s) const;
  /// Finite entries in lexicographic order.
  std::vector<std::pair<Subset, ExtVal>> entries() const;
  std::vector<Subset> bases() const;
  std::size_t basis_count() const;
  ExtVal min_value() const;
  bool all_integer() const;

  friend bool operator==(const PlueckerVector& a, const PlueckerVector& b) {
    return a.ground_ == b.ground_ && a.rank_ == b.rank_ && a.values_ == b.values_;
  }

 private:
  PlueckerVector(GroundSet ground, int rank, std::vector<ExtVal> colex_values);
  void validate() const;

  GroundSet ground_;
  int rank_ = 0;
  std::vector<ExtVal> values_;  // indexed by colex rank
};

/// ν̃ on all subsets of size <= r.
class IndepValuation {
 public:
  /// Table given explicitly; unlisted subsets of size <= r are ∞.
  IndepValuation(GroundSet ground, int rank, const std::vector<std::pair<Subset, ExtVal>>& entries);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  ExtVal value(Subset s) const;

  /// Values on the k-subsets, in enumerate_subsets order.
  std::vector<ExtVal> level(int k) const;

 private:
  friend IndepValuation independent_valuation(const PlueckerVector& p);
  IndepValuation(GroundSet ground, int rank, std::vector<std::vector<ExtVal>> levels)
      : ground_(std::move(ground)), rank_(rank), levels_(std::move(levels)) {}

  GroundSet ground_;
  int rank_ = 0;
  std::vector<std::vector<ExtVal>> levels_;  // levels_[k][colex_rank]
};

/// Exhaustive check of the valuated basis exchange inequality
/// ν(S) + ν(T) >= ν(S - s + t) + ν(T - t + s).
/// Witness: sets = {S, T}, elements = {s}.
CheckReport check_valuated_exchange(const PlueckerVector& p, const CheckOptions& opts = {});

/// ν̃(S) = min{ν(B) : B ⊇ S, |B| = r}.
IndepValuation independent_valuation(const PlueckerVector& p);

/// Checks the four independent-set axioms. axiom = "1".."4".
CheckReport check_independence_axioms(const IndepValuation& iv, const CheckOptions& opts = {});

/// The rank-rho valuated matroid given by ν̃ on rho-subsets.
PlueckerVector restrict_rank(const PlueckerVector& p, int rho);

/// Rank-r matroid on Q ⊔ E with ν(S) = ν̃(S ∩ E). Q comes first in the
/// ground order.
PlueckerVector generic_extension(const PlueckerVector& p, const GroundSet& q);

/// Shifts all finite values so the minimum becomes 0.
PlueckerVector normalize(const PlueckerVector& p);

/// Same values on a relabelled ground set of equal size.
PlueckerVector relabel(const PlueckerVector& p, const GroundSet& ground);

}  // namespace vml
