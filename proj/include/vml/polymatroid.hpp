#pragma once

#include <utility>
#include <vector>

#include "vml/matroid.hpp"

namespace vml {

/// An M-convex function candidate on Δ_E^r. Unlisted indices are ∞; at least
/// one value must be finite.
class MConvexMap {
 public:
  MConvexMap(GroundSet ground, int rank, const std::vector<std::pair<MultiIndex, ExtVal>>& entries);
  template <class Fn>
  static MConvexMap from_function(GroundSet ground, int rank, Fn&& nu) {
    std::vector<std::pair<MultiIndex, ExtVal>> entries;
    for (MultiIndex& a : enumerate_multi_indices(ground, rank)) {
      ExtVal v = nu(a);
      entries.emplace_back(std::move(a), v);
    }
    return MConvexMap(std::move(ground), rank, entries);
  }

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  ExtVal value(const MultiIndex& alpha) const;
  /// Finite entries in enumeration order.
  std::vector<std::pair<MultiIndex, ExtVal>> entries() const;
  bool all_integer() const;

  friend bool operator==(const MConvexMap& a, const MConvexMap& b) {
    return a.ground_ == b.ground_ && a.rank_ == b.rank_ && a.values_ == b.values_;
  }

 private:
  GroundSet ground_;
  int rank_ = 0;
  std::vector<ExtVal> values_;  // indexed by simplex_rank
};

/// ν̃_P on Δ_E^{<= r}.
class PolyIndepValuation {
 public:
  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  ExtVal value(const MultiIndex& alpha) const;

 private:
  friend PolyIndepValuation poly_independent_valuation(const MConvexMap& f);
  PolyIndepValuation(GroundSet ground, int rank, std::vector<std::vector<ExtVal>> levels)
      : ground_(std::move(ground)), rank_(rank), levels_(std::move(levels)) {}

  GroundSet ground_;
  int rank_ = 0;
  std::vector<std::vector<ExtVal>> levels_;  // levels_[k][simplex_rank]
};

/// A surjection π: E' -> E.
struct FiberMap {
  GroundSet source;
  GroundSet target;
  std::vector<int> assignment;  // assignment[i'] = index in target

  std::vector<int> fiber_sizes() const;
};

/// Exhaustive check of ν(α) + ν(β) >= ν(α - e_s + e_t) + ν(β - e_t + e_s).
/// Witness: indices = {α, β}, elements = {s}.
CheckReport check_m_convex(const MConvexMap& f, const CheckOptions& opts = {});

/// ν̃_P(α) = min{ν(β) : β ∈ Δ_E^r, β >= α}.
PolyIndepValuation poly_independent_valuation(const MConvexMap& f);

/// Coordinatewise maximum over the finite support.
MultiIndex cage(const MConvexMap& f);

/// Element s with cage a_s becomes s#1 ... s#a_s.
FiberMap canonical_fiber_map(const MConvexMap& f);

/// M_π(ν)(S') = ν(Σ_{s' ∈ S'} e_{π(s')}). Fiber sizes must equal the cage.
PlueckerVector multisymmetric_lift(const MConvexMap& f, const FiberMap& pi);

/// ν(α_Q, α) = ν̃_P(α) on Δ^r_{Q ⊔ E}; Q comes first in the ground order.
MConvexMap generic_extension_poly(const MConvexMap& f, const GroundSet& q);

/// ν(α) = Σ_e c_e α_e + h_e(α_e), with h_e(k) the sum of the first k
/// increments. Indices exceeding an element's increment list get ∞.
MConvexMap separable_mconvex(const GroundSet& ground, int rank, const std::vector<std::int64_t>& linear,
                             const std::vector<std::vector<std::int64_t>>& convex_increments);

/// Reads a 0/1-supported M-convex function as a valuated matroid.
PlueckerVector as_pluecker(const MConvexMap& f);
/// Reads a valuated matroid as an M-convex function supported on 0/1 points.
MConvexMap as_mconvex(const PlueckerVector& p);

}  // namespace vml
