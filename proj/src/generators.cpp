#include "vml/generators.hpp"

#include <algorithm>
#include <regex>

namespace vml {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(RngSpec spec) {
  std::uint64_t state = spec.seed;
  const std::uint64_t a = splitmix64(state);
  state ^= spec.stream * 0xD1B54A32D192ED03ULL;
  const std::uint64_t b = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32), static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  engine_.seed(seq);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------- classical

namespace {

PlueckerVector paving_from_nonbases(int n, int r, const std::vector<std::vector<int>>& nonbases_one_based) {
  std::vector<Subset> dependent;
  for (const auto& nb : nonbases_one_based) {
    std::vector<int> zero_based;
    for (int x : nb) zero_based.push_back(x - 1);
    dependent.push_back(Subset::of(zero_based));
  }
  return PlueckerVector::from_function(GroundSet::numbered(n), r, [&](Subset s) {
    return std::find(dependent.begin(), dependent.end(), s) == dependent.end() ? ExtVal::finite(0) : ExtVal::inf();
  });
}

}  // namespace

PlueckerVector classical_matroid(const std::string& name) {
  if (name == "fano") {
    // Seven lines of the projective plane over GF(2).
    return paving_from_nonbases(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
  }
  if (name == "vamos") {
    // Pairs {1,2},{3,4},{5,6},{7,8}; every union of two pairs except {5,6,7,8}
    // is a circuit-hyperplane.
    return paving_from_nonbases(8, 4, {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}});
  }
  if (name == "nonpappus") {
    // Pappus configuration: 1,2,3 and 4,5,6 on two lines, 7 = 15∩24,
    // 8 = 16∩34, 9 = 26∩35. The line {7,8,9} is left out.
    return paving_from_nonbases(9, 3, {{1, 2, 3}, {4, 5, 6}, {1, 5, 7}, {2, 4, 7}, {1, 6, 8}, {3, 4, 8}, {2, 6, 9}, {3, 5, 9}});
  }
  static const std::regex uniform_re(R"(uniform\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, uniform_re)) {
    const int n = std::stoi(m[1]);
    const int r = std::stoi(m[2]);
    if (r > n || n > kMaxGround) throw InputError("uniform(n,r) needs r <= n <= " + std::to_string(kMaxGround));
    return PlueckerVector::from_function(GroundSet::numbered(n), r, [](Subset) { return ExtVal::finite(0); });
  }
  throw InputError("unknown classical matroid '" + name + "' (expected fano, vamos, nonpappus, uniform(n,r))");
}

// ---------------------------------------------------------------- random

TropicalMatrix random_tropical_matrix(int rows, int cols, std::int64_t lo, std::int64_t hi, double density, Rng& rng) {
  std::vector<ExtVal> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows * cols; ++i) {
    // Always consume both draws so the stream layout is independent of density.
    const double coin = rng.uniform01();
    const std::int64_t v = rng.uniform_int(lo, hi);
    entries.push_back(coin < density ? ExtVal::inf() : ExtVal::finite(v));
  }
  return TropicalMatrix(GroundSet::numbered(rows, "r"), GroundSet::numbered(cols, "c"), std::move(entries));
}

PlueckerVector random_stiefel_matroid(const StiefelParams& params, Rng& rng) {
  if (params.r < 0 || params.r > params.n) throw InputError("random_stiefel_matroid needs 0 <= r <= n");
  if (params.lo > params.hi) throw InputError("empty value range");
  if (params.density < 0 || params.density > 1) throw InputError("density must lie in [0, 1]");
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    const TropicalMatrix a = random_tropical_matrix(params.r, params.n, params.lo, params.hi, params.density, rng);
    try {
      return stiefel_matroid(a);
    } catch (const InputError&) {
      // every maximal minor is ∞; draw again
    }
  }
  throw GenerationError("random_stiefel_matroid: no matrix with a finite maximal minor after " +
                        std::to_string(params.max_attempts) + " attempts");
}

PlueckerVector random_stiefel_matroid(const StiefelParams& params, RngSpec spec) {
  Rng rng(spec);
  return random_stiefel_matroid(params, rng);
}

PlueckerVector direct_sum(const PlueckerVector& a, const PlueckerVector& b) {
  GroundSet ground = a.ground().concat(b.ground());
  const int na = a.ground().size();
  const Subset in_a = Subset::full(na);
  return PlueckerVector::from_function(std::move(ground), a.rank() + b.rank(), [&](Subset s) {
    const Subset sa = s & in_a;
    const Subset sb(s.mask() >> na);
    if (sa.size() != a.rank()) return ExtVal::inf();
    return a.value(sa) + b.value(sb);
  });
}

QScalar random_q(Rng& rng) {
  const std::int64_t s = rng.uniform_int(2, 1000);
  const std::int64_t p = rng.uniform_int(1, s - 1);
  return QScalar::exact(Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(s))));
}

QScalar random_q(RngSpec spec) {
  Rng rng(spec);
  return random_q(rng);
}

MConvexMap random_separable_mconvex(const SeparableParams& params, Rng& rng) {
  const int n = params.n;
  const int r = params.r;
  if (n < 1 || r < 0) throw InputError("random_separable_mconvex needs n >= 1 and r >= 0");
  std::vector<std::int64_t> linear(n);
  std::vector<std::vector<std::int64_t>> inc(n);
  for (int e = 0; e < n; ++e) {
    linear[e] = rng.uniform_int(params.linear_lo, params.linear_hi);
    for (int j = 0; j < r; ++j) inc[e].push_back(rng.uniform_int(0, params.increment_hi));
    std::sort(inc[e].begin(), inc[e].end());
    if (rng.bernoulli(params.cap_probability)) inc[e].resize(rng.uniform_int(0, r));
  }
  std::size_t total = 0;
  for (const auto& v : inc) total += v.size();
  if (total < static_cast<std::size_t>(r)) {
    // Restore one full list so some index of degree r is finite.
    inc[0].clear();
    for (int j = 0; j < r; ++j) inc[0].push_back(0);
  }
  return separable_mconvex(GroundSet::numbered(n, "e"), r, linear, inc);
}

}  // namespace vml
