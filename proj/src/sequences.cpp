#include "vml/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace vml {

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::ik_matroid: return "ik_matroid";
    case SequenceKind::ik_polymatroid: return "ik_polymatroid";
    case SequenceKind::rk_bimatroid: return "rk_bimatroid";
    case SequenceKind::raw: break;
  }
  return "raw";
}

SequenceKind sequence_kind_from_string(const std::string& s) {
  if (s == "ik_matroid") return SequenceKind::ik_matroid;
  if (s == "ik_polymatroid") return SequenceKind::ik_polymatroid;
  if (s == "rk_bimatroid") return SequenceKind::rk_bimatroid;
  if (s == "raw") return SequenceKind::raw;
  throw InputError("unknown sequence kind '" + s + "'");
}

PositiveSequence PositiveSequence::exact(std::vector<Rational> terms, SequenceContext ctx) {
  for (const Rational& t : terms)
    if (t < 0) throw InputError("sequence terms must be nonnegative");
  PositiveSequence s;
  s.mode_ = NumericMode::exact;
  s.exact_ = std::move(terms);
  s.ctx_ = std::move(ctx);
  return s;
}

PositiveSequence PositiveSequence::relaxed(std::vector<double> terms, SequenceContext ctx) {
  for (double t : terms)
    if (!(t >= 0)) throw InputError("sequence terms must be nonnegative");
  PositiveSequence s;
  s.mode_ = NumericMode::relaxed;
  s.approx_ = std::move(terms);
  s.ctx_ = std::move(ctx);
  return s;
}

double PositiveSequence::approx(std::size_t k) const {
  return mode_ == NumericMode::exact ? exact_.at(k).get_d() : approx_.at(k);
}

std::string PositiveSequence::term_string(std::size_t k) const {
  if (mode_ == NumericMode::exact) return exact_.at(k).get_str();
  std::ostringstream os;
  os.precision(17);
  os << approx_.at(k);
  return os.str();
}

namespace {

/// Accumulates Σ weight·q^v, grouping equal exponents so each power is
/// computed once.
class PowerSum {
 public:
  explicit PowerSum(const QScalar& q) : q_(q) {}

  void add(const ExtVal& v, const Rational& weight) {
    if (v.is_inf()) return;
    if (q_.mode() == NumericMode::exact) {
      if (!v.is_integer())
        throw ModeError("non-integer valuation " + v.to_string() + " needs relaxed mode (--relaxed)");
      exact_[v.integer()] += weight;
    } else {
      approx_ += weight.get_d() * q_power_relaxed(q_, v);
    }
  }

  Rational exact_total() const {
    Rational total = 0;
    for (const auto& [e, w] : exact_) total += w * q_power(q_, ExtVal::finite(e));
    return total;
  }
  double approx_total() const { return approx_; }

 private:
  const QScalar& q_;
  std::map<std::int64_t, Rational> exact_;
  double approx_ = 0;
};

PositiveSequence finish(const QScalar& q, const std::vector<PowerSum>& sums, SequenceContext ctx) {
  if (q.mode() == NumericMode::exact) {
    std::vector<Rational> terms;
    for (const auto& s : sums) terms.push_back(s.exact_total());
    return PositiveSequence::exact(std::move(terms), std::move(ctx));
  }
  std::vector<double> terms;
  for (const auto& s : sums) terms.push_back(s.approx_total());
  return PositiveSequence::relaxed(std::move(terms), std::move(ctx));
}

}  // namespace

PositiveSequence ik_matroid(const PlueckerVector& p, const QScalar& q) {
  const IndepValuation iv = independent_valuation(p);
  std::vector<PowerSum> sums(p.rank() + 1, PowerSum(q));
  const Rational one(1);
  for (int k = 0; k <= p.rank(); ++k)
    for (Subset s : enumerate_subsets(p.ground(), k)) sums[k].add(iv.value(s), one);
  return finish(q, sums, {SequenceKind::ik_matroid, q.to_string(), p.ground().size()});
}

PositiveSequence ik_polymatroid(const MConvexMap& f, const QScalar& q) {
  const PolyIndepValuation iv = poly_independent_valuation(f);
  std::vector<PowerSum> sums(f.rank() + 1, PowerSum(q));
  for (int k = 0; k <= f.rank(); ++k)
    for (const MultiIndex& a : enumerate_multi_indices(f.ground(), k))
      sums[k].add(iv.value(a), Rational(BigInt(1), multi_index_factorial(a)));
  return finish(q, sums, {SequenceKind::ik_polymatroid, q.to_string(), f.ground().size()});
}

PositiveSequence rk_bimatroid(const MinorMap& mu, const QScalar& q) {
  const int top = mu.max_order();
  std::vector<PowerSum> sums(top + 1, PowerSum(q));
  const Rational one(1);
  for (int k = 0; k <= top; ++k)
    for (Subset i : enumerate_subsets(mu.rows(), k))
      for (Subset j : enumerate_subsets(mu.cols(), k)) sums[k].add(mu.value(i, j), one);
  return finish(q, sums, {SequenceKind::rk_bimatroid, q.to_string(), top});
}

namespace {

/// Exact terms scaled by the lcm of their denominators.
std::vector<BigInt> cleared(const std::vector<Rational>& terms) {
  BigInt lcm = 1;
  for (const Rational& t : terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(terms.size());
  for (const Rational& t : terms) out.push_back(t.get_num() * (lcm / t.get_den()));
  return out;
}

bool relaxed_ge(double lhs, double rhs, double tol) {
  return lhs >= rhs - tol * std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

}  // namespace

CheckReport check_strengthened_lc(const PositiveSequence& seq, double tol) {
  const int len = static_cast<int>(seq.size());
  if (seq.mode() == NumericMode::exact) {
    const std::vector<BigInt> a = cleared(seq.exact_terms());
    for (int k = 1; k + 1 < len; ++k) {
      const BigInt lhs = BigInt(k) * a[k] * a[k];
      const BigInt rhs = BigInt(k + 1) * a[k + 1] * a[k - 1];
      if (lhs < rhs) {
        CheckReport r = CheckReport::failure("strengthened-lc", "k*I_k^2 < (k+1)*I_{k+1}*I_{k-1} at k=" + std::to_string(k));
        r.k = k;
        r.lhs = Rational(Rational(k) * seq.exact_terms()[k] * seq.exact_terms()[k]).get_str();
        r.rhs = Rational(Rational(k + 1) * seq.exact_terms()[k + 1] * seq.exact_terms()[k - 1]).get_str();
        return r;
      }
    }
    return CheckReport::ok();
  }
  for (int k = 1; k + 1 < len; ++k) {
    const double lhs = k * seq.approx(k) * seq.approx(k);
    const double rhs = (k + 1) * seq.approx(k + 1) * seq.approx(k - 1);
    if (!relaxed_ge(lhs, rhs, tol)) {
      CheckReport r = CheckReport::failure("strengthened-lc", "k*I_k^2 < (k+1)*I_{k+1}*I_{k-1} at k=" + std::to_string(k));
      r.k = k;
      r.lhs = std::to_string(lhs);
      r.rhs = std::to_string(rhs);
      return r;
    }
  }
  return CheckReport::ok();
}

CheckReport check_ulc(const PositiveSequence& seq, int n, double tol) {
  const int len = static_cast<int>(seq.size());
  if (n < len - 1) throw InputError("ULC needs N >= length - 1 (N = " + std::to_string(n) + ", length " + std::to_string(len) + ")");
  if (seq.mode() == NumericMode::exact) {
    const std::vector<BigInt> a = cleared(seq.exact_terms());
    for (int k = 1; k + 1 < len; ++k) {
      const BigInt c_prev = binomial_big(n, k - 1);
      const BigInt c_mid = binomial_big(n, k);
      const BigInt c_next = binomial_big(n, k + 1);
      const BigInt lhs = a[k] * a[k] * c_next * c_prev;
      const BigInt rhs = a[k + 1] * a[k - 1] * c_mid * c_mid;
      if (lhs < rhs) {
        CheckReport r = CheckReport::failure("ulc", "ultra log-concavity fails at k=" + std::to_string(k) + " with N=" + std::to_string(n));
        r.k = k;
        const auto& t = seq.exact_terms();
        const Rational mid = t[k] / Rational(c_mid);
        r.lhs = Rational(mid * mid).get_str();
        r.rhs = Rational(t[k + 1] / Rational(c_next) * (t[k - 1] / Rational(c_prev))).get_str();
        return r;
      }
    }
    return CheckReport::ok();
  }
  for (int k = 1; k + 1 < len; ++k) {
    const double mid = seq.approx(k) / static_cast<double>(binomial(n, k));
    const double lhs = mid * mid;
    const double rhs = seq.approx(k + 1) / static_cast<double>(binomial(n, k + 1)) * seq.approx(k - 1) /
                       static_cast<double>(binomial(n, k - 1));
    if (!relaxed_ge(lhs, rhs, tol)) {
      CheckReport r = CheckReport::failure("ulc", "ultra log-concavity fails at k=" + std::to_string(k) + " with N=" + std::to_string(n));
      r.k = k;
      r.lhs = std::to_string(lhs);
      r.rhs = std::to_string(rhs);
      return r;
    }
  }
  return CheckReport::ok();
}

bool is_conjecture_probe(SequenceKind kind, const std::string& check) {
  return check == "ulc" && kind == SequenceKind::ik_matroid;
}

bool is_asserted(SequenceKind kind, const std::string& check) {
  if (check == "strengthened-lc") return kind != SequenceKind::raw;
  return check == "ulc" && kind == SequenceKind::rk_bimatroid;
}

}  // namespace vml
