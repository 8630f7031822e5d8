#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "vml/bimatroid.hpp"
#include "vml/polymatroid.hpp"

namespace vml {

/// Seed plus stream id. Equal specs give identical draws on every platform.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// mt19937_64 keyed by a SplitMix64 mix of (seed, stream). Bounded draws use
/// rejection sampling rather than std::uniform_int_distribution, whose output
/// is implementation-defined.
class Rng {
 public:
  explicit Rng(RngSpec spec);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

/// fano, vamos, nonpappus, or uniform(n,r), each with the trivial valuation.
PlueckerVector classical_matroid(const std::string& name);

struct StiefelParams {
  int n = 4;
  int r = 2;
  std::int64_t lo = 0;
  std::int64_t hi = 9;
  double density = 0.25;  ///< probability of an ∞ entry
  int max_attempts = 100;
};

/// The r×n min-plus matrix behind a Stiefel matroid draw.
TropicalMatrix random_tropical_matrix(int rows, int cols, std::int64_t lo, std::int64_t hi, double density, Rng& rng);

/// stiefel_matroid of a random r×n matrix; redraws while every maximal
/// minor is ∞. Throws GenerationError once max_attempts is exhausted.
PlueckerVector random_stiefel_matroid(const StiefelParams& params, Rng& rng);
PlueckerVector random_stiefel_matroid(const StiefelParams& params, RngSpec spec);

/// Rank r1+r2 on E1 ⊔ E2 with ν(S) = ν1(S∩E1) + ν2(S∩E2) when the split
/// sizes are (r1, r2), ∞ otherwise.
PlueckerVector direct_sum(const PlueckerVector& a, const PlueckerVector& b);

/// p/s with 1 <= p < s <= 1000, uniform over the pair draw, reduced.
QScalar random_q(Rng& rng);
QScalar random_q(RngSpec spec);

struct SeparableParams {
  int n = 3;
  int r = 3;
  std::int64_t linear_lo = -3;
  std::int64_t linear_hi = 3;
  std::int64_t increment_hi = 4;
  /// Probability that an element's increment list is truncated (caps α_e).
  double cap_probability = 0.3;
};

/// A separable M-convex function with random data; never identically ∞.
MConvexMap random_separable_mconvex(const SeparableParams& params, Rng& rng);

}  // namespace vml
