#pragma once

// Seeded ULC counterexample search over random valuated matroids.

#include <cstdint>
#include <string>
#include <vector>

#include "vml/generators.hpp"
#include "vml/io.hpp"

namespace vml {

enum class SearchMix { stiefel, classical_sums, both };
std::string to_string(SearchMix mix);
SearchMix search_mix_from_string(const std::string& s);

struct SearchParams {
  std::uint64_t trials = 1000;
  int n_max = 10;
  int r_max = 5;
  double density = 0.25;
  std::int64_t lo = 0;
  std::int64_t hi = 9;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  SearchMix mix = SearchMix::both;
};

/// What one trial drew and found. Trial i uses RngSpec{seed, i}.
struct TrialOutcome {
  std::uint64_t index = 0;
  std::string generator;  ///< "stiefel(n,r)" or "fano+stiefel(n,r)" etc.
  int n = 0;
  int rank = 0;
  std::string q;
  std::vector<std::string> terms;  ///< I_0..I_r as exact rationals
  bool certified = true;
  bool lc_pass = true;
  bool ulc_pass = true;
  std::string digest;  ///< SHA-256 of line()
  /// Canonical one-line summary; wall time and job count do not enter.
  std::string line() const;
};

struct SearchReport {
  SearchParams params;
  std::vector<TrialOutcome> outcomes;  ///< by trial index
  /// Full re-runnable documents for ULC failures (conjecture candidates).
  std::vector<Json> violations;
  /// Strengthened log-concavity failures or uncertified instances.
  std::vector<Json> theorem_violations;
  std::string digest;  ///< SHA-256 over all trial lines in index order
  double wall_seconds = 0;
};

/// The instance trial `index` draws, before certification.
struct TrialInstance {
  PlueckerVector matroid;
  QScalar q;
  std::string generator;
};
TrialInstance draw_trial(const SearchParams& params, std::uint64_t index);

/// Runs one trial: draw, certify with the exchange checker, compute I_k at
/// the drawn q, check strengthened log-concavity and ULC with N = |E|.
TrialOutcome run_trial(const SearchParams& params, std::uint64_t index, Json* violation, Json* theorem_violation);

SearchReport run_search(const SearchParams& params);

/// Report document; includes per-trial digests when `trial_digests`.
Json to_json(const SearchReport& report, bool trial_digests = true);

std::string sha256_hex(const std::string& data);

}  // namespace vml
