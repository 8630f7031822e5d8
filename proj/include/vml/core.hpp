#pragma once

// Extended valuations, ground sets, subsets, multi-indices and exact q-powers.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vml {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact-mode operation meets a non-integer valuation.
class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BigInt = mpz_class;
using Rational = mpq_class;

enum class NumericMode { exact, relaxed };

inline constexpr double kDefaultTolerance = 1e-9;

/// An element of Γ ∪ {∞}. Finite values are exact integers or, in relaxed
/// mode, doubles. Default-constructed values are ∞ (absent entries).
class ExtVal {
 public:
  constexpr ExtVal() = default;

  static constexpr ExtVal inf() { return ExtVal(); }
  static constexpr ExtVal finite(std::int64_t v) {
    ExtVal x;
    x.kind_ = Kind::integer;
    x.i_ = v;
    return x;
  }
  static ExtVal real(double v);

  constexpr bool is_inf() const { return kind_ == Kind::infinite; }
  constexpr bool is_finite() const { return kind_ != Kind::infinite; }
  constexpr bool is_integer() const { return kind_ == Kind::integer; }

  /// Requires is_integer().
  std::int64_t integer() const;
  /// Requires is_finite().
  double to_double() const;

  friend ExtVal operator+(const ExtVal& a, const ExtVal& b);
  friend ExtVal operator-(const ExtVal& a, const ExtVal& b);  // b finite
  ExtVal& operator+=(const ExtVal& b) { return *this = *this + b; }

  friend bool operator==(const ExtVal& a, const ExtVal& b);
  friend std::partial_ordering operator<=>(const ExtVal& a, const ExtVal& b);

  std::string to_string() const;

 private:
  enum class Kind : std::uint8_t { infinite, integer, real };
  Kind kind_ = Kind::infinite;
  union {
    std::int64_t i_ = 0;
    double d_;
  };
};

inline ExtVal min(const ExtVal& a, const ExtVal& b) { return b < a ? b : a; }

/// a >= b. Integer and ∞ comparisons are exact; when a real value is involved
/// the comparison allows a relative slack of `tol`.
bool ge_tol(const ExtVal& a, const ExtVal& b, double tol = kDefaultTolerance);
bool eq_tol(const ExtVal& a, const ExtVal& b, double tol = kDefaultTolerance);

/// Ordered list of distinct labels. Declaration order is canonical.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels "<prefix>1" ... "<prefix>n".
  static GroundSet numbered(int n, std::string_view prefix = "");

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& label) const { return index_.contains(label); }
  int index_of(const std::string& label) const;

  bool disjoint_from(const GroundSet& other) const;
  /// Disjoint union, `*this` first. Throws InputError on a label collision.
  GroundSet concat(const GroundSet& other) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

inline constexpr int kMaxGround = 62;

/// Sorted set of element indices, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}
  static Subset of(std::initializer_list<int> members);
  static Subset of(const std::vector<int>& members);
  static constexpr Subset full(int n) { return Subset(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))); }

  constexpr std::uint64_t mask() const { return mask_; }
  int size() const { return __builtin_popcountll(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  std::vector<int> members() const;

  Subset with(int i) const { return Subset(mask_ | (std::uint64_t{1} << i)); }
  Subset without(int i) const { return Subset(mask_ & ~(std::uint64_t{1} << i)); }
  Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }
  bool subset_of(Subset o) const { return (mask_ & ~o.mask_) == 0; }

  friend constexpr bool operator==(Subset a, Subset b) { return a.mask_ == b.mask_; }
  /// Lexicographic order of the sorted index vectors.
  friend std::strong_ordering operator<=>(Subset a, Subset b);

 private:
  std::uint64_t mask_ = 0;
};

std::string format_subset(const GroundSet& ground, Subset s);

/// Vector of nonnegative integers indexed by a ground set.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> alpha);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int i);
  static MultiIndex indicator(int n, Subset s);

  int size() const { return static_cast<int>(alpha_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return alpha_[i]; }
  const std::vector<int>& entries() const { return alpha_; }

  /// True iff every entry is 0 or 1.
  bool is_zero_one() const;
  bool dominated_by(const MultiIndex& other) const;

  MultiIndex plus_unit(int i) const;
  MultiIndex minus_unit(int i) const;  // entry must be positive
  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.alpha_ == b.alpha_; }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.alpha_ <=> b.alpha_; }

  std::string to_string() const;

 private:
  std::vector<int> alpha_;
  int degree_ = 0;
};

std::uint64_t binomial(int n, int k);
BigInt binomial_big(int n, int k);
BigInt factorial(int n);

/// All k-subsets of E in lexicographic order of their index vectors.
std::vector<Subset> enumerate_subsets(const GroundSet& ground, int k);
std::vector<Subset> enumerate_subsets(int n, int k);

/// All elements of the discrete simplex Δ_E^k, lexicographically descending
/// ((2,0), (1,1), (0,2)). Its 0/1 points appear in enumerate_subsets order.
std::vector<MultiIndex> enumerate_multi_indices(const GroundSet& ground, int k);
std::vector<MultiIndex> enumerate_multi_indices(int n, int k);

/// Position of a k-subset in colexicographic order (dense storage key).
std::uint64_t colex_rank(Subset s);
/// Position of alpha inside enumerate_multi_indices(alpha.size(), alpha.degree()).
std::uint64_t simplex_rank(const MultiIndex& alpha);
std::uint64_t simplex_size(int n, int k);

/// Π_e α_e!
BigInt multi_index_factorial(const MultiIndex& alpha);

/// The constant 0 < q <= 1 used in q^ν.
class QScalar {
 public:
  static QScalar exact(Rational q);
  static QScalar relaxed(double q);
  /// Parses "p/s", an integer, or (relaxed only) a decimal.
  static QScalar parse(const std::string& text, NumericMode mode = NumericMode::exact);

  NumericMode mode() const { return mode_; }
  const Rational& value() const { return q_; }
  double approx() const { return approx_; }
  std::string to_string() const;

 private:
  QScalar() = default;
  Rational q_{1};
  double approx_ = 1.0;
  NumericMode mode_ = NumericMode::exact;
};

/// q^v exactly; q^∞ = 0. Throws ModeError for non-integer v or a relaxed q.
Rational q_power(const QScalar& q, const ExtVal& v);
/// Floating-point q^v; q^∞ = 0.
double q_power_relaxed(const QScalar& q, const ExtVal& v);

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace vml
