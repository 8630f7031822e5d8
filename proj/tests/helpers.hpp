#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vml/bimatroid.hpp"
#include "vml/generators.hpp"
#include "vml/polymatroid.hpp"

namespace helpers {

using namespace vml;

inline Subset labels_to_subset(const GroundSet& g, const std::vector<std::string>& labels) {
  Subset s;
  for (const auto& l : labels) s = s.with(g.index_of(l));
  return s;
}

/// ν given as {labels, value}; unlisted sets are ∞.
inline PlueckerVector matroid(const std::vector<std::string>& ground, int rank,
                              const std::vector<std::pair<std::vector<std::string>, ExtVal>>& values) {
  GroundSet g(ground);
  std::vector<std::pair<Subset, ExtVal>> entries;
  for (const auto& [labels, v] : values) entries.emplace_back(labels_to_subset(g, labels), v);
  return PlueckerVector(g, rank, entries);
}

inline ExtVal fin(std::int64_t v) { return ExtVal::finite(v); }
inline ExtVal inf() { return ExtVal::inf(); }

inline PlueckerVector uniform(int n, int r) { return classical_matroid("uniform(" + std::to_string(n) + "," + std::to_string(r) + ")"); }

inline MConvexMap mconvex(const std::vector<std::string>& ground, int rank,
                          const std::vector<std::pair<std::vector<int>, ExtVal>>& values) {
  std::vector<std::pair<MultiIndex, ExtVal>> entries;
  for (const auto& [a, v] : values) entries.emplace_back(MultiIndex(a), v);
  return MConvexMap(GroundSet(ground), rank, entries);
}

/// Random Stiefel matroid drawn from (seed, stream).
inline PlueckerVector random_matroid(std::uint64_t seed, std::uint64_t stream, int n_max, int r_max, double density = 0.25,
                                     std::int64_t hi = 9) {
  Rng rng({seed, stream});
  const int n = static_cast<int>(rng.uniform_int(1, n_max));
  const int r = static_cast<int>(rng.uniform_int(0, std::min(n, r_max)));
  return random_stiefel_matroid(StiefelParams{n, r, 0, hi, density, 100}, rng);
}

}  // namespace helpers
