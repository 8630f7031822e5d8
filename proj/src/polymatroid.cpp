#include "vml/polymatroid.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace vml {

MConvexMap::MConvexMap(GroundSet ground, int rank, const std::vector<std::pair<MultiIndex, ExtVal>>& entries)
    : ground_(std::move(ground)), rank_(rank) {
  if (rank_ < 0) throw InputError("rank must be nonnegative");
  if (ground_.empty() && rank_ > 0) throw InputError("empty ground set supports only rank 0");
  values_.assign(simplex_size(ground_.size(), rank_), ExtVal::inf());
  for (const auto& [alpha, v] : entries) {
    if (alpha.size() != ground_.size()) throw InputError("multi-index length differs from the ground set");
    if (alpha.degree() != rank_) throw InputError("multi-index " + alpha.to_string() + " does not have degree " + std::to_string(rank_));
    values_[simplex_rank(alpha)] = v;
  }
  if (std::none_of(values_.begin(), values_.end(), [](const ExtVal& v) { return v.is_finite(); }))
    throw InputError("not an M-convex candidate: every value is infinite");
}

ExtVal MConvexMap::value(const MultiIndex& alpha) const {
  if (alpha.size() != ground_.size() || alpha.degree() != rank_) throw InputError("multi-index outside Δ_E^r");
  return values_[simplex_rank(alpha)];
}

std::vector<std::pair<MultiIndex, ExtVal>> MConvexMap::entries() const {
  std::vector<std::pair<MultiIndex, ExtVal>> out;
  for (MultiIndex& a : enumerate_multi_indices(ground_, rank_)) {
    const ExtVal v = values_[simplex_rank(a)];
    if (v.is_finite()) out.emplace_back(std::move(a), v);
  }
  return out;
}

bool MConvexMap::all_integer() const {
  return std::all_of(values_.begin(), values_.end(), [](const ExtVal& v) { return v.is_inf() || v.is_integer(); });
}

ExtVal PolyIndepValuation::value(const MultiIndex& alpha) const {
  if (alpha.size() != ground_.size() || alpha.degree() > rank_) throw InputError("multi-index outside Δ_E^{<=r}");
  return levels_[alpha.degree()][simplex_rank(alpha)];
}

std::vector<int> FiberMap::fiber_sizes() const {
  std::vector<int> sizes(target.size(), 0);
  for (int t : assignment) ++sizes.at(t);
  return sizes;
}

CheckReport check_m_convex(const MConvexMap& f, const CheckOptions& opts) {
  const auto support = f.entries();
  const int n = f.ground().size();
  auto scan = [&](std::size_t i) -> std::optional<CheckReport> {
    const auto& [alpha, va] = support[i];
    for (const auto& [beta, vb] : support) {
      const ExtVal lhs = va + vb;
      for (int s = 0; s < n; ++s) {
        if (alpha[s] <= beta[s]) continue;
        bool found = false;
        for (int t = 0; t < n && !found; ++t) {
          if (beta[t] <= alpha[t]) continue;
          const ExtVal rhs = f.value(alpha.minus_unit(s).plus_unit(t)) + f.value(beta.minus_unit(t).plus_unit(s));
          found = ge_tol(lhs, rhs, opts.tol);
        }
        if (!found) {
          CheckReport r = CheckReport::failure("exchange", "no t satisfies the M-convex exchange for alpha=" +
                                                               alpha.to_string() + ", beta=" + beta.to_string() +
                                                               ", s=" + f.ground().label(s));
          r.indices = {alpha, beta};
          r.elements = {s};
          return r;
        }
      }
    }
    return std::nullopt;
  };
  if (auto bad = detail::first_hit<CheckReport>(support.size(), opts.threads, scan)) return *bad;
  return CheckReport::ok();
}

PolyIndepValuation poly_independent_valuation(const MConvexMap& f) {
  const int n = f.ground().size();
  const int r = f.rank();
  std::vector<std::vector<ExtVal>> levels(r + 1);
  levels[r].resize(simplex_size(n, r));
  for (const MultiIndex& a : enumerate_multi_indices(n, r)) levels[r][simplex_rank(a)] = f.value(a);
  for (int k = r - 1; k >= 0; --k) {
    levels[k].assign(simplex_size(n, k), ExtVal::inf());
    for (const MultiIndex& a : enumerate_multi_indices(n, k)) {
      ExtVal best = ExtVal::inf();
      for (int e = 0; e < n; ++e) best = min(best, levels[k + 1][simplex_rank(a.plus_unit(e))]);
      levels[k][simplex_rank(a)] = best;
    }
  }
  return PolyIndepValuation(f.ground(), r, std::move(levels));
}

MultiIndex cage(const MConvexMap& f) {
  std::vector<int> a(f.ground().size(), 0);
  for (const auto& [alpha, v] : f.entries())
    for (int i = 0; i < alpha.size(); ++i) a[i] = std::max(a[i], alpha[i]);
  return MultiIndex(std::move(a));
}

FiberMap canonical_fiber_map(const MConvexMap& f) {
  const MultiIndex a = cage(f);
  std::vector<std::string> labels;
  std::vector<int> assignment;
  for (int s = 0; s < a.size(); ++s) {
    for (int j = 1; j <= a[s]; ++j) {
      labels.push_back(f.ground().label(s) + "#" + std::to_string(j));
      assignment.push_back(s);
    }
  }
  return FiberMap{GroundSet(std::move(labels)), f.ground(), std::move(assignment)};
}

PlueckerVector multisymmetric_lift(const MConvexMap& f, const FiberMap& pi) {
  if (!(pi.target == f.ground())) throw InputError("fiber map target differs from the function's ground set");
  if (static_cast<int>(pi.assignment.size()) != pi.source.size()) throw InputError("fiber map assignment has wrong length");
  for (int t : pi.assignment)
    if (t < 0 || t >= pi.target.size()) throw InputError("fiber map assigns outside the target");
  const MultiIndex a = cage(f);
  const std::vector<int> sizes = pi.fiber_sizes();
  for (int s = 0; s < a.size(); ++s)
    if (sizes[s] != a[s])
      throw InputError("fiber over '" + f.ground().label(s) + "' has size " + std::to_string(sizes[s]) +
                       " but the cage entry is " + std::to_string(a[s]));
  const int n = f.ground().size();
  return PlueckerVector::from_function(pi.source, f.rank(), [&](Subset sp) {
    std::vector<int> alpha(n, 0);
    for (int i : sp.members()) ++alpha[pi.assignment[i]];
    return f.value(MultiIndex(std::move(alpha)));
  });
}

MConvexMap generic_extension_poly(const MConvexMap& f, const GroundSet& q) {
  if (q.empty()) return f;
  GroundSet ground = q.concat(f.ground());
  const PolyIndepValuation iv = poly_independent_valuation(f);
  const int nq = q.size();
  return MConvexMap::from_function(std::move(ground), f.rank(), [&](const MultiIndex& a) {
    std::vector<int> rest(a.entries().begin() + nq, a.entries().end());
    return iv.value(MultiIndex(std::move(rest)));
  });
}

MConvexMap separable_mconvex(const GroundSet& ground, int rank, const std::vector<std::int64_t>& linear,
                             const std::vector<std::vector<std::int64_t>>& convex_increments) {
  const int n = ground.size();
  if (static_cast<int>(linear.size()) != n || static_cast<int>(convex_increments.size()) != n)
    throw InputError("separable_mconvex: one linear coefficient and one increment list per element");
  std::vector<std::vector<std::int64_t>> prefix(n);
  for (int e = 0; e < n; ++e) {
    const auto& inc = convex_increments[e];
    for (std::size_t j = 1; j < inc.size(); ++j)
      if (inc[j] < inc[j - 1]) throw InputError("increments of '" + ground.label(e) + "' are not nondecreasing");
    prefix[e].push_back(0);
    for (std::int64_t d : inc) prefix[e].push_back(prefix[e].back() + d);
  }
  return MConvexMap::from_function(ground, rank, [&](const MultiIndex& a) {
    std::int64_t total = 0;
    for (int e = 0; e < n; ++e) {
      if (a[e] >= static_cast<int>(prefix[e].size())) return ExtVal::inf();
      total += linear[e] * a[e] + prefix[e][a[e]];
    }
    return ExtVal::finite(total);
  });
}

PlueckerVector as_pluecker(const MConvexMap& f) {
  std::vector<std::pair<Subset, ExtVal>> entries;
  for (const auto& [alpha, v] : f.entries()) {
    if (!alpha.is_zero_one()) throw InputError("function is not supported on 0/1 indices");
    std::vector<int> members;
    for (int i = 0; i < alpha.size(); ++i)
      if (alpha[i] == 1) members.push_back(i);
    entries.emplace_back(Subset::of(members), v);
  }
  return PlueckerVector(f.ground(), f.rank(), entries);
}

MConvexMap as_mconvex(const PlueckerVector& p) {
  std::vector<std::pair<MultiIndex, ExtVal>> entries;
  for (const auto& [s, v] : p.entries()) entries.emplace_back(MultiIndex::indicator(p.ground().size(), s), v);
  return MConvexMap(p.ground(), p.rank(), entries);
}

}  // namespace vml
