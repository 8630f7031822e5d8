#include "vml/matroid.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace vml {

// ---------------------------------------------------------------- PlueckerVector

PlueckerVector::PlueckerVector(GroundSet ground, int rank, std::vector<ExtVal> colex_values)
    : ground_(std::move(ground)), rank_(rank), values_(std::move(colex_values)) {
  validate();
}

PlueckerVector::PlueckerVector(GroundSet ground, int rank, const std::vector<std::pair<Subset, ExtVal>>& entries)
    : ground_(std::move(ground)), rank_(rank) {
  if (rank_ < 0 || rank_ > ground_.size()) throw InputError("rank out of range");
  values_.assign(binomial(ground_.size(), rank_), ExtVal::inf());
  const Subset full = Subset::full(ground_.size());
  for (const auto& [s, v] : entries) {
    if (s.size() != rank_) throw InputError("keyed subset has size " + std::to_string(s.size()) + ", expected rank " + std::to_string(rank_));
    if (!s.subset_of(full)) throw InputError("subset refers to elements outside the ground set");
    values_[colex_rank(s)] = v;
  }
  validate();
}

PlueckerVector PlueckerVector::from_function(GroundSet ground, int rank, const std::function<ExtVal(Subset)>& nu) {
  if (rank < 0 || rank > ground.size()) throw InputError("rank out of range");
  std::vector<ExtVal> values(binomial(ground.size(), rank));
  for (Subset s : enumerate_subsets(ground, rank)) values[colex_rank(s)] = nu(s);
  return PlueckerVector(std::move(ground), rank, std::move(values));
}

void PlueckerVector::validate() const {
  if (std::none_of(values_.begin(), values_.end(), [](const ExtVal& v) { return v.is_finite(); }))
    throw InputError("not a valuated matroid candidate: every value is infinite");
}

ExtVal PlueckerVector::value(Subset s) const {
  if (s.size() != rank_) throw InputError("subset size differs from rank");
  return values_.at(colex_rank(s));
}

std::vector<std::pair<Subset, ExtVal>> PlueckerVector::entries() const {
  std::vector<std::pair<Subset, ExtVal>> out;
  for (Subset s : enumerate_subsets(ground_, rank_)) {
    const ExtVal& v = values_[colex_rank(s)];
    if (v.is_finite()) out.emplace_back(s, v);
  }
  return out;
}

std::vector<Subset> PlueckerVector::bases() const {
  std::vector<Subset> out;
  for (Subset s : enumerate_subsets(ground_, rank_))
    if (values_[colex_rank(s)].is_finite()) out.push_back(s);
  return out;
}

std::size_t PlueckerVector::basis_count() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](const ExtVal& v) { return v.is_finite(); }));
}

ExtVal PlueckerVector::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

bool PlueckerVector::all_integer() const {
  return std::all_of(values_.begin(), values_.end(), [](const ExtVal& v) { return v.is_inf() || v.is_integer(); });
}

// ---------------------------------------------------------------- exchange

CheckReport check_valuated_exchange(const PlueckerVector& p, const CheckOptions& opts) {
  const std::vector<Subset> bases = p.bases();
  std::vector<ExtVal> vals;
  vals.reserve(bases.size());
  for (Subset b : bases) vals.push_back(p.value(b));

  auto scan = [&](std::size_t i) -> std::optional<CheckReport> {
    const Subset s_set = bases[i];
    for (std::size_t j = 0; j < bases.size(); ++j) {
      const Subset t_set = bases[j];
      const Subset s_only = s_set - t_set;
      if (s_only.empty()) continue;
      const Subset t_only = t_set - s_set;
      const ExtVal lhs = vals[i] + vals[j];
      for (std::uint64_t sm = s_only.mask(); sm != 0; sm &= sm - 1) {
        const int s = __builtin_ctzll(sm);
        bool found = false;
        for (std::uint64_t tm = t_only.mask(); tm != 0; tm &= tm - 1) {
          const int t = __builtin_ctzll(tm);
          const ExtVal rhs = p.value(s_set.without(s).with(t)) + p.value(t_set.without(t).with(s));
          if (ge_tol(lhs, rhs, opts.tol)) {
            found = true;
            break;
          }
        }
        if (!found) {
          CheckReport r = CheckReport::failure(
              "exchange", "no t in T-S satisfies the exchange inequality for S=" + format_subset(p.ground(), s_set) +
                              ", T=" + format_subset(p.ground(), t_set) + ", s=" + p.ground().label(s));
          r.sets = {s_set, t_set};
          r.elements = {s};
          return r;
        }
      }
    }
    return std::nullopt;
  };
  if (auto bad = detail::first_hit<CheckReport>(bases.size(), opts.threads, scan)) return *bad;
  return CheckReport::ok();
}

// ---------------------------------------------------------------- ν̃

IndepValuation::IndepValuation(GroundSet ground, int rank, const std::vector<std::pair<Subset, ExtVal>>& entries)
    : ground_(std::move(ground)), rank_(rank) {
  if (rank_ < 0 || rank_ > ground_.size()) throw InputError("rank out of range");
  levels_.resize(rank_ + 1);
  for (int k = 0; k <= rank_; ++k) levels_[k].assign(binomial(ground_.size(), k), ExtVal::inf());
  const Subset full = Subset::full(ground_.size());
  for (const auto& [s, v] : entries) {
    if (s.size() > rank_) throw InputError("subset larger than the rank");
    if (!s.subset_of(full)) throw InputError("subset refers to elements outside the ground set");
    levels_[s.size()][colex_rank(s)] = v;
  }
}

ExtVal IndepValuation::value(Subset s) const {
  if (s.size() > rank_) throw InputError("subset larger than the rank");
  return levels_[s.size()].at(colex_rank(s));
}

std::vector<ExtVal> IndepValuation::level(int k) const {
  std::vector<ExtVal> out;
  for (Subset s : enumerate_subsets(ground_, k)) out.push_back(levels_.at(k)[colex_rank(s)]);
  return out;
}

IndepValuation independent_valuation(const PlueckerVector& p) {
  const int n = p.ground().size();
  const int r = p.rank();
  std::vector<std::vector<ExtVal>> levels(r + 1);
  levels[r].resize(binomial(n, r));
  for (Subset s : enumerate_subsets(n, r)) levels[r][colex_rank(s)] = p.value(s);
  // Minimizing over r-supersets equals minimizing over one-element extensions
  // of the next level up.
  for (int k = r - 1; k >= 0; --k) {
    levels[k].assign(binomial(n, k), ExtVal::inf());
    for (Subset s : enumerate_subsets(n, k)) {
      ExtVal best = ExtVal::inf();
      for (int e = 0; e < n; ++e)
        if (!s.contains(e)) best = min(best, levels[k + 1][colex_rank(s.with(e))]);
      levels[k][colex_rank(s)] = best;
    }
  }
  return IndepValuation(p.ground(), r, std::move(levels));
}

CheckReport check_independence_axioms(const IndepValuation& iv, const CheckOptions& opts) {
  const GroundSet& g = iv.ground();
  const int n = g.size();
  const int r = iv.rank();

  // (1) some r-set is finite
  {
    bool any = false;
    for (Subset s : enumerate_subsets(n, r)) any = any || iv.value(s).is_finite();
    if (!any) return CheckReport::failure("1", "every subset of size r has infinite value");
  }

  std::vector<Subset> all;
  for (int k = 0; k <= r; ++k)
    for (Subset s : enumerate_subsets(n, k)) all.push_back(s);

  // (2) monotone along every covering pair S ⊂ S+e
  for (Subset s : all) {
    if (s.size() == r) continue;
    for (int e = 0; e < n; ++e) {
      if (s.contains(e)) continue;
      if (!ge_tol(iv.value(s.with(e)), iv.value(s), opts.tol)) {
        CheckReport rep = CheckReport::failure("2", "monotonicity fails: value(" + format_subset(g, s) + ") > value(" +
                                                        format_subset(g, s.with(e)) + ")");
        rep.sets = {s, s.with(e)};
        return rep;
      }
    }
  }

  // (3) every finite non-maximal set extends without changing its value
  for (Subset s : all) {
    if (s.size() >= r || iv.value(s).is_inf()) continue;
    bool found = false;
    for (int e = 0; e < n && !found; ++e)
      if (!s.contains(e)) found = eq_tol(iv.value(s.with(e)), iv.value(s), opts.tol);
    if (!found) {
      CheckReport rep = CheckReport::failure("3", "no value-preserving extension of " + format_subset(g, s));
      rep.sets = {s};
      return rep;
    }
  }

  // (4) augmentation exchange for |S| < |T|
  auto scan = [&](std::size_t i) -> std::optional<CheckReport> {
    const Subset s = all[i];
    const ExtVal vs = iv.value(s);
    if (vs.is_inf()) return std::nullopt;
    for (Subset t : all) {
      if (t.size() <= s.size()) continue;
      const ExtVal lhs = vs + iv.value(t);
      if (lhs.is_inf()) continue;
      bool found = false;
      for (int x : (t - s).members()) {
        if (ge_tol(lhs, iv.value(s.with(x)) + iv.value(t.without(x)), opts.tol)) {
          found = true;
          break;
        }
      }
      if (!found) {
        CheckReport rep = CheckReport::failure(
            "4", "augmentation fails for S=" + format_subset(g, s) + ", T=" + format_subset(g, t));
        rep.sets = {s, t};
        return rep;
      }
    }
    return std::nullopt;
  };
  if (auto bad = detail::first_hit<CheckReport>(all.size(), opts.threads, scan)) return *bad;
  return CheckReport::ok();
}

// ---------------------------------------------------------------- constructions

PlueckerVector restrict_rank(const PlueckerVector& p, int rho) {
  if (rho < 0 || rho > p.rank()) throw InputError("restriction rank out of range");
  if (rho == p.rank()) return p;
  const IndepValuation iv = independent_valuation(p);
  return PlueckerVector::from_function(p.ground(), rho, [&](Subset s) { return iv.value(s); });
}

PlueckerVector generic_extension(const PlueckerVector& p, const GroundSet& q) {
  if (q.empty()) return p;
  GroundSet ground = q.concat(p.ground());
  const IndepValuation iv = independent_valuation(p);
  const int nq = q.size();
  return PlueckerVector::from_function(std::move(ground), p.rank(),
                                       [&](Subset s) { return iv.value(Subset(s.mask() >> nq)); });
}

PlueckerVector normalize(const PlueckerVector& p) {
  const ExtVal shift = p.min_value();
  if (shift == ExtVal::finite(0)) return p;
  return PlueckerVector::from_function(p.ground(), p.rank(), [&](Subset s) { return p.value(s) - shift; });
}

PlueckerVector relabel(const PlueckerVector& p, const GroundSet& ground) {
  if (ground.size() != p.ground().size()) throw InputError("relabel needs a ground set of the same size");
  return PlueckerVector::from_function(ground, p.rank(), [&](Subset s) { return p.value(s); });
}

}  // namespace vml
