#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vml/bimatroid.hpp"
#include "vml/polymatroid.hpp"

namespace vml {

enum class SequenceKind { ik_matroid, ik_polymatroid, rk_bimatroid, raw };

std::string to_string(SequenceKind kind);
SequenceKind sequence_kind_from_string(const std::string& s);

struct SequenceContext {
  SequenceKind kind = SequenceKind::raw;
  std::string q;                ///< q as text, empty for raw data
  std::optional<int> ground;    ///< |E| for I_k, min(|E|,|F|) for R_k
};

/// Nonnegative terms, exact rationals or (relaxed mode) doubles.
class PositiveSequence {
 public:
  static PositiveSequence exact(std::vector<Rational> terms, SequenceContext ctx = {});
  static PositiveSequence relaxed(std::vector<double> terms, SequenceContext ctx = {});

  NumericMode mode() const { return mode_; }
  std::size_t size() const { return mode_ == NumericMode::exact ? exact_.size() : approx_.size(); }
  const std::vector<Rational>& exact_terms() const { return exact_; }
  const std::vector<double>& approx_terms() const { return approx_; }
  double approx(std::size_t k) const;
  std::string term_string(std::size_t k) const;
  const SequenceContext& context() const { return ctx_; }

  friend bool operator==(const PositiveSequence& a, const PositiveSequence& b) {
    return a.mode_ == b.mode_ && a.exact_ == b.exact_ && a.approx_ == b.approx_;
  }

 private:
  NumericMode mode_ = NumericMode::exact;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
  SequenceContext ctx_;
};

/// I_k = Σ_{|S| = k} q^{ν̃(S)}, 0 <= k <= r.
PositiveSequence ik_matroid(const PlueckerVector& p, const QScalar& q);
/// I_k = Σ_{α ∈ Δ^k} q^{ν̃(α)} / α!, 0 <= k <= r.
PositiveSequence ik_polymatroid(const MConvexMap& f, const QScalar& q);
/// R_k = Σ_{|I| = |J| = k} q^{μ(I,J)}, 0 <= k <= min(|E|,|F|).
PositiveSequence rk_bimatroid(const MinorMap& mu, const QScalar& q);

/// k·a_k² >= (k+1)·a_{k+1}·a_{k-1} for 1 <= k < len-1. axiom = "strengthened-lc".
CheckReport check_strengthened_lc(const PositiveSequence& seq, double tol = kDefaultTolerance);

/// (a_k/C(N,k))² >= (a_{k+1}/C(N,k+1))·(a_{k-1}/C(N,k-1)) for every k with
/// both neighbours present. Requires N >= len - 1. axiom = "ulc".
CheckReport check_ulc(const PositiveSequence& seq, int n, double tol = kDefaultTolerance);

/// True when a failed check on this kind of sequence is only evidence about
/// an open question (ULC of I_k of a valuated matroid).
bool is_conjecture_probe(SequenceKind kind, const std::string& check);

/// True when a failed check contradicts a proved inequality: strengthened
/// LC of every I_k, ULC of R_k. ULC of I_k for M-convex functions is
/// neither asserted nor conjectured.
bool is_asserted(SequenceKind kind, const std::string& check);

}  // namespace vml
