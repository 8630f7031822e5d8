#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "vml/matroid.hpp"

namespace vml {

/// A minor valuation function μ on pairs (I, J), I ⊆ rows, J ⊆ cols,
/// |I| = |J|. Unlisted pairs are ∞ except (∅, ∅), which defaults to 0.
class MinorMap {
 public:
  using Entry = std::tuple<Subset, Subset, ExtVal>;

  MinorMap(GroundSet rows, GroundSet cols, const std::vector<Entry>& entries);
  template <class Fn>
  static MinorMap from_function(GroundSet rows, GroundSet cols, Fn&& mu) {
    std::vector<Entry> entries;
    const int top = std::min(rows.size(), cols.size());
    for (int k = 0; k <= top; ++k)
      for (Subset i : enumerate_subsets(rows, k))
        for (Subset j : enumerate_subsets(cols, k)) entries.emplace_back(i, j, mu(i, j));
    return MinorMap(std::move(rows), std::move(cols), entries);
  }

  const GroundSet& rows() const { return rows_; }
  const GroundSet& cols() const { return cols_; }
  int max_order() const { return std::min(rows_.size(), cols_.size()); }

  ExtVal value(Subset i, Subset j) const;
  /// Finite entries ordered by size, then I, then J (lexicographic).
  std::vector<Entry> entries() const;
  bool all_integer() const;

  friend bool operator==(const MinorMap& a, const MinorMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.levels_ == b.levels_;
  }

 private:
  GroundSet rows_;
  GroundSet cols_;
  std::vector<std::vector<ExtVal>> levels_;  // levels_[k][colex(I) * C(|F|,k) + colex(J)]
};

/// Dense min-plus matrix; ∞ entries allowed.
class TropicalMatrix {
 public:
  TropicalMatrix(GroundSet rows, GroundSet cols, std::vector<ExtVal> row_major);
  /// Rows labelled r1.., columns c1...
  static TropicalMatrix from_rows(const std::vector<std::vector<ExtVal>>& rows);

  const GroundSet& rows() const { return rows_; }
  const GroundSet& cols() const { return cols_; }
  const ExtVal& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_.size() + j]; }
  TropicalMatrix transposed() const;

 private:
  GroundSet rows_;
  GroundSet cols_;
  std::vector<ExtVal> entries_;
};

/// The rank-|E| matroid on E ⊔ F with ν(S) = μ(E - S, S ∩ F).
PlueckerVector associated_matroid(const MinorMap& mu);
/// Inverse of associated_matroid: μ(I, J) = ν((E - I) ∪ J). The matroid's
/// ground set must be rows followed by cols, with rank |rows|.
MinorMap minor_map_from_matroid(const PlueckerVector& p, const GroundSet& rows, const GroundSet& cols);

/// Passes iff μ(∅,∅) = 0 (axiom "1") and the associated matroid satisfies
/// the exchange inequality. Exchange failures are reported as "2(i)" or
/// "2(ii)" with sets = {I, J, I', J'} and elements = {the moved element}
/// (index into rows for 2(i), into cols for 2(ii)).
CheckReport check_bimatroid(const MinorMap& mu, const CheckOptions& opts = {});

MinorMap transpose(const MinorMap& mu);

/// min over bijections σ: I -> J of Σ a_{i,σ(i)}; ∞ without a finite
/// perfect matching; 0 for the empty minor.
ExtVal tropical_determinant(const TropicalMatrix& a, Subset rows, Subset cols);

/// μ(I, J) = tropical_determinant(A, I, J).
MinorMap stiefel_bimatroid(const TropicalMatrix& a);

/// ν(S) = tropical_determinant(A, all rows, S) over |rows|-subsets of the
/// columns, normalized to minimum 0.
PlueckerVector stiefel_matroid(const TropicalMatrix& a);

/// The rank-|E| matroid on E ⊔ F with ν(S) = ν̃_M(S ∩ F) when
/// |S ∩ F| <= r and ∞ otherwise. P lives on F and must be normalized.
PlueckerVector free_extension_matroid(const PlueckerVector& p, const GroundSet& rows);
/// free_extension_matroid read as a bimatroid with rows E and columns F.
MinorMap free_extension_bimatroid(const PlueckerVector& p, const GroundSet& rows);

}  // namespace vml
