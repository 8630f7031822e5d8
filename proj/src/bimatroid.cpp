#include "vml/bimatroid.hpp"

#include "vml/assignment.hpp"

namespace vml {

// ---------------------------------------------------------------- MinorMap

MinorMap::MinorMap(GroundSet rows, GroundSet cols, const std::vector<Entry>& entries)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.size() + cols_.size() > kMaxGround) throw InputError("bimatroid too large");
  const int top = max_order();
  levels_.resize(top + 1);
  for (int k = 0; k <= top; ++k) levels_[k].assign(binomial(rows_.size(), k) * binomial(cols_.size(), k), ExtVal::inf());
  levels_[0][0] = ExtVal::finite(0);
  const Subset all_rows = Subset::full(rows_.size());
  const Subset all_cols = Subset::full(cols_.size());
  for (const auto& [i, j, v] : entries) {
    if (i.size() != j.size()) throw InputError("minor with |I| != |J|");
    if (!i.subset_of(all_rows) || !j.subset_of(all_cols)) throw InputError("minor refers to unknown rows or columns");
    const int k = i.size();
    levels_[k][colex_rank(i) * binomial(cols_.size(), k) + colex_rank(j)] = v;
  }
}

ExtVal MinorMap::value(Subset i, Subset j) const {
  if (i.size() != j.size()) throw InputError("minor with |I| != |J|");
  const int k = i.size();
  if (k > max_order()) return ExtVal::inf();
  return levels_[k].at(colex_rank(i) * binomial(cols_.size(), k) + colex_rank(j));
}

std::vector<MinorMap::Entry> MinorMap::entries() const {
  std::vector<Entry> out;
  for (int k = 0; k <= max_order(); ++k)
    for (Subset i : enumerate_subsets(rows_, k))
      for (Subset j : enumerate_subsets(cols_, k)) {
        const ExtVal v = value(i, j);
        if (v.is_finite()) out.emplace_back(i, j, v);
      }
  return out;
}

bool MinorMap::all_integer() const {
  for (const auto& level : levels_)
    for (const ExtVal& v : level)
      if (v.is_finite() && !v.is_integer()) return false;
  return true;
}

// ---------------------------------------------------------------- TropicalMatrix

TropicalMatrix::TropicalMatrix(GroundSet rows, GroundSet cols, std::vector<ExtVal> row_major)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(row_major)) {
  if (entries_.size() != static_cast<std::size_t>(rows_.size()) * cols_.size())
    throw InputError("matrix entry count does not match its shape");
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<ExtVal>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  std::vector<ExtVal> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InputError("ragged matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return TropicalMatrix(GroundSet::numbered(m, "r"), GroundSet::numbered(n, "c"), std::move(flat));
}

TropicalMatrix TropicalMatrix::transposed() const {
  std::vector<ExtVal> t(entries_.size());
  for (int i = 0; i < rows_.size(); ++i)
    for (int j = 0; j < cols_.size(); ++j) t[static_cast<std::size_t>(j) * rows_.size() + i] = at(i, j);
  return TropicalMatrix(cols_, rows_, std::move(t));
}

// ---------------------------------------------------------------- operations

PlueckerVector associated_matroid(const MinorMap& mu) {
  const int m = mu.rows().size();
  const Subset all_rows = Subset::full(m);
  return PlueckerVector::from_function(mu.rows().concat(mu.cols()), m, [&](Subset s) {
    const Subset in_rows = s & all_rows;
    return mu.value(all_rows - in_rows, Subset(s.mask() >> m));
  });
}

MinorMap minor_map_from_matroid(const PlueckerVector& p, const GroundSet& rows, const GroundSet& cols) {
  if (!(p.ground() == rows.concat(cols))) throw InputError("matroid ground set must be rows followed by columns");
  if (p.rank() != rows.size()) throw InputError("matroid rank must equal the number of rows");
  const int m = rows.size();
  const Subset all_rows = Subset::full(m);
  return MinorMap::from_function(rows, cols, [&](Subset i, Subset j) {
    return p.value((all_rows - i) | Subset(j.mask() << m));
  });
}

CheckReport check_bimatroid(const MinorMap& mu, const CheckOptions& opts) {
  const ExtVal empty = mu.value(Subset(), Subset());
  if (!(empty == ExtVal::finite(0))) {
    CheckReport r = CheckReport::failure("1", "mu(empty, empty) = " + empty.to_string() + ", expected 0");
    r.sets = {Subset(), Subset()};
    return r;
  }
  CheckReport inner = check_valuated_exchange(associated_matroid(mu), opts);
  if (inner.pass) return inner;

  const int m = mu.rows().size();
  const Subset all_rows = Subset::full(m);
  const Subset s_set = inner.sets.at(0);
  const Subset t_set = inner.sets.at(1);
  const int s = inner.elements.at(0);
  const Subset i1 = all_rows - (s_set & all_rows);
  const Subset j1(s_set.mask() >> m);
  const Subset i2 = all_rows - (t_set & all_rows);
  const Subset j2(t_set.mask() >> m);
  const bool row_move = s < m;
  CheckReport r = CheckReport::failure(
      row_move ? "2(i)" : "2(ii)",
      "bimatroid exchange fails for (I,J)=(" + format_subset(mu.rows(), i1) + "," + format_subset(mu.cols(), j1) +
          "), (I',J')=(" + format_subset(mu.rows(), i2) + "," + format_subset(mu.cols(), j2) + "), moved " +
          (row_move ? "row " + mu.rows().label(s) : "column " + mu.cols().label(s - m)));
  r.sets = {i1, j1, i2, j2};
  r.elements = {row_move ? s : s - m};
  return r;
}

MinorMap transpose(const MinorMap& mu) {
  return MinorMap::from_function(mu.cols(), mu.rows(), [&](Subset j, Subset i) { return mu.value(i, j); });
}

namespace {

template <class T>
ExtVal solve_minor(const TropicalMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols,
                   bool integral) {
  const int k = static_cast<int>(rows.size());
  std::vector<T> cost(static_cast<std::size_t>(k) * k);
  std::vector<char> present(cost.size(), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const ExtVal& x = a.at(rows[i], cols[j]);
      if (x.is_inf()) continue;
      const std::size_t idx = static_cast<std::size_t>(i) * k + j;
      present[idx] = 1;
      if constexpr (std::is_integral_v<T>) cost[idx] = x.integer();
      else cost[idx] = x.to_double();
    }
  auto result = solve_assignment<T>(k, cost, present);
  if (!result) return ExtVal::inf();
  if (integral) return ExtVal::finite(static_cast<std::int64_t>(result->cost));
  return ExtVal::real(static_cast<double>(result->cost));
}

}  // namespace

ExtVal tropical_determinant(const TropicalMatrix& a, Subset rows, Subset cols) {
  if (rows.size() != cols.size()) throw InputError("tropical determinant needs |I| = |J|");
  if (!rows.subset_of(Subset::full(a.rows().size())) || !cols.subset_of(Subset::full(a.cols().size())))
    throw InputError("minor index outside the matrix");
  if (rows.empty()) return ExtVal::finite(0);
  const std::vector<int> ri = rows.members();
  const std::vector<int> ci = cols.members();
  bool integral = true;
  for (int i : ri)
    for (int j : ci)
      if (a.at(i, j).is_finite() && !a.at(i, j).is_integer()) integral = false;
  return integral ? solve_minor<std::int64_t>(a, ri, ci, true) : solve_minor<double>(a, ri, ci, false);
}

MinorMap stiefel_bimatroid(const TropicalMatrix& a) {
  return MinorMap::from_function(a.rows(), a.cols(), [&](Subset i, Subset j) { return tropical_determinant(a, i, j); });
}

PlueckerVector stiefel_matroid(const TropicalMatrix& a) {
  const int r = a.rows().size();
  if (r > a.cols().size()) throw InputError("stiefel_matroid needs at most as many rows as columns");
  const Subset all_rows = Subset::full(r);
  return normalize(PlueckerVector::from_function(a.cols(), r, [&](Subset s) { return tropical_determinant(a, all_rows, s); }));
}

PlueckerVector free_extension_matroid(const PlueckerVector& p, const GroundSet& rows) {
  if (rows.size() < p.rank())
    throw InputError("free extension needs |E| >= rank (|E| = " + std::to_string(rows.size()) + ", rank " +
                     std::to_string(p.rank()) + ")");
  if (!(p.min_value() == ExtVal::finite(0))) throw InputError("free extension needs a normalized matroid; run normalize first");
  const IndepValuation iv = independent_valuation(p);
  const int m = rows.size();
  const int r = p.rank();
  return PlueckerVector::from_function(rows.concat(p.ground()), m, [&](Subset s) {
    const Subset in_f(s.mask() >> m);
    return in_f.size() <= r ? iv.value(in_f) : ExtVal::inf();
  });
}

MinorMap free_extension_bimatroid(const PlueckerVector& p, const GroundSet& rows) {
  return minor_map_from_matroid(free_extension_matroid(p, rows), rows, p.ground());
}

}  // namespace vml
