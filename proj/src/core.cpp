#include "vml/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace vml {

// ---------------------------------------------------------------- ExtVal

ExtVal ExtVal::real(double v) {
  if (!std::isfinite(v)) {
    if (v > 0) return inf();
    throw InputError("valuation must be a finite real or +inf");
  }
  ExtVal x;
  x.kind_ = Kind::real;
  x.d_ = v;
  return x;
}

std::int64_t ExtVal::integer() const {
  if (kind_ != Kind::integer) throw ModeError("valuation is not an exact integer");
  return i_;
}

double ExtVal::to_double() const {
  switch (kind_) {
    case Kind::integer: return static_cast<double>(i_);
    case Kind::real: return d_;
    case Kind::infinite: break;
  }
  return std::numeric_limits<double>::infinity();
}

ExtVal operator+(const ExtVal& a, const ExtVal& b) {
  if (a.is_inf() || b.is_inf()) return ExtVal::inf();
  if (a.is_integer() && b.is_integer()) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.i_, b.i_, &r)) throw InputError("valuation overflow");
    return ExtVal::finite(r);
  }
  return ExtVal::real(a.to_double() + b.to_double());
}

ExtVal operator-(const ExtVal& a, const ExtVal& b) {
  if (b.is_inf()) throw InputError("cannot subtract infinity");
  if (a.is_inf()) return a;
  if (a.is_integer() && b.is_integer()) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a.i_, b.i_, &r)) throw InputError("valuation overflow");
    return ExtVal::finite(r);
  }
  return ExtVal::real(a.to_double() - b.to_double());
}

bool operator==(const ExtVal& a, const ExtVal& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  if (a.is_integer() && b.is_integer()) return a.i_ == b.i_;
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const ExtVal& a, const ExtVal& b) {
  if (a.is_inf() || b.is_inf()) {
    if (a.is_inf() && b.is_inf()) return std::partial_ordering::equivalent;
    return a.is_inf() ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  if (a.is_integer() && b.is_integer()) return a.i_ <=> b.i_;
  return a.to_double() <=> b.to_double();
}

std::string ExtVal::to_string() const {
  switch (kind_) {
    case Kind::integer: return std::to_string(i_);
    case Kind::real: {
      std::ostringstream os;
      os.precision(17);
      os << d_;
      return os.str();
    }
    case Kind::infinite: break;
  }
  return "inf";
}

bool ge_tol(const ExtVal& a, const ExtVal& b, double tol) {
  if (a.is_inf()) return true;
  if (b.is_inf()) return false;
  if (a.is_integer() && b.is_integer()) return a.integer() >= b.integer();
  const double x = a.to_double();
  const double y = b.to_double();
  return x >= y - tol * std::max({1.0, std::abs(x), std::abs(y)});
}

bool eq_tol(const ExtVal& a, const ExtVal& b, double tol) { return ge_tol(a, b, tol) && ge_tol(b, a, tol); }

// ---------------------------------------------------------------- GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGround))
    throw InputError("ground set too large (max " + std::to_string(kMaxGround) + " elements)");
  for (int i = 0; i < size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty element label");
    if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate element label '" + labels_[i] + "'");
  }
}

GroundSet GroundSet::numbered(int n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown element label '" + label + "'");
  return it->second;
}

bool GroundSet::disjoint_from(const GroundSet& other) const {
  return std::none_of(other.labels_.begin(), other.labels_.end(),
                      [this](const std::string& l) { return contains(l); });
}

GroundSet GroundSet::concat(const GroundSet& other) const {
  for (const auto& l : other.labels_)
    if (contains(l)) throw InputError("label collision on '" + l + "'");
  std::vector<std::string> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return GroundSet(std::move(labels));
}

// ---------------------------------------------------------------- Subset

Subset Subset::of(std::initializer_list<int> members) { return of(std::vector<int>(members)); }

Subset Subset::of(const std::vector<int>& members) {
  std::uint64_t mask = 0;
  for (int i : members) {
    if (i < 0 || i >= 64) throw InputError("subset index out of range");
    mask |= std::uint64_t{1} << i;
  }
  return Subset(mask);
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m));
  return out;
}

std::strong_ordering operator<=>(Subset a, Subset b) {
  // The first differing index decides; the set holding it sorts first.
  // A proper prefix sorts first.
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  const int low = __builtin_ctzll(diff);
  const std::uint64_t below = (std::uint64_t{1} << low) - 1;
  const bool a_has = a.contains(low);
  const std::uint64_t rest = a_has ? (b.mask_ & ~below & ~(std::uint64_t{1} << low))
                                   : (a.mask_ & ~below & ~(std::uint64_t{1} << low));
  // The set lacking `low` continues with a larger index or ends there.
  if (a_has) return rest == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  return rest == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string format_subset(const GroundSet& ground, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += ground.label(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::vector<int> alpha) : alpha_(std::move(alpha)) {
  for (int a : alpha_) {
    if (a < 0) throw InputError("multi-index entries must be nonnegative");
    degree_ += a;
  }
}

MultiIndex MultiIndex::unit(int n, int i) {
  std::vector<int> a(n, 0);
  a.at(i) = 1;
  return MultiIndex(std::move(a));
}

MultiIndex MultiIndex::indicator(int n, Subset s) {
  std::vector<int> a(n, 0);
  for (int i : s.members()) a.at(i) = 1;
  return MultiIndex(std::move(a));
}

bool MultiIndex::is_zero_one() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](int a) { return a <= 1; });
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  for (int i = 0; i < size(); ++i)
    if (alpha_[i] > other.alpha_[i]) return false;
  return true;
}

MultiIndex MultiIndex::plus_unit(int i) const {
  MultiIndex out = *this;
  ++out.alpha_.at(i);
  ++out.degree_;
  return out;
}

MultiIndex MultiIndex::minus_unit(int i) const {
  if (alpha_.at(i) == 0) throw InputError("multi-index entry would become negative");
  MultiIndex out = *this;
  --out.alpha_[i];
  --out.degree_;
  return out;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> out(a.alpha_);
  for (int i = 0; i < a.size(); ++i) out[i] += b.alpha_.at(i);
  return MultiIndex(std::move(out));
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> out(a.alpha_);
  for (int i = 0; i < a.size(); ++i) out[i] -= b.alpha_.at(i);
  return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- counting

namespace {

constexpr int kBinomRows = 128;

const std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows> t{};
    for (int n = 0; n < kBinomRows; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        const std::uint64_t a = t[n - 1][k - 1];
        const std::uint64_t b = t[n - 1][k];
        t[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;  // saturate
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n >= kBinomRows) throw InputError("binomial argument too large");
  return binomial_table()[n][k];
}

BigInt binomial_big(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw InputError("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::vector<Subset> enumerate_subsets(int n, int k) {
  if (n < 0 || n > kMaxGround) throw InputError("ground set size out of range");
  if (k < 0 || k > n) throw InputError("subset size " + std::to_string(k) + " out of range for |E| = " + std::to_string(n));
  std::vector<Subset> out;
  out.reserve(binomial(n, k));
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(Subset::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> enumerate_subsets(const GroundSet& ground, int k) { return enumerate_subsets(ground.size(), k); }

std::uint64_t simplex_size(int n, int k) {
  if (k < 0 || n < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(k + n - 1, n - 1);
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int k) {
  if (k < 0) throw InputError("negative degree");
  if (n < 0) throw InputError("negative ground set size");
  std::vector<MultiIndex> out;
  out.reserve(simplex_size(n, k));
  if (n == 0) {
    if (k == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> a(n, 0);
  // Depth-first with the first coordinate descending.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      a[pos] = remaining;
      out.emplace_back(a);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      a[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices(const GroundSet& ground, int k) {
  return enumerate_multi_indices(ground.size(), k);
}

std::uint64_t colex_rank(Subset s) {
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1, ++i) rank += binomial(__builtin_ctzll(m), i);
  return rank;
}

std::uint64_t simplex_rank(const MultiIndex& alpha) {
  const int n = alpha.size();
  int remaining = alpha.degree();
  std::uint64_t rank = 0;
  for (int i = 0; i + 1 < n; ++i) {
    for (int v = remaining; v > alpha[i]; --v) rank += simplex_size(n - i - 1, remaining - v);
    remaining -= alpha[i];
  }
  return rank;
}

BigInt multi_index_factorial(const MultiIndex& alpha) {
  BigInt out = 1;
  for (int a : alpha.entries()) out *= factorial(a);
  return out;
}

// ---------------------------------------------------------------- QScalar

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational");
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("not an exact rational: '" + text + "'");
  Rational r(BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den));
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

QScalar QScalar::exact(Rational q) {
  q.canonicalize();
  if (q <= 0 || q > 1) throw InputError("q must satisfy 0 < q <= 1 (got " + q.get_str() + ")");
  QScalar out;
  out.q_ = q;
  out.approx_ = q.get_d();
  out.mode_ = NumericMode::exact;
  return out;
}

QScalar QScalar::relaxed(double q) {
  if (!(q > 0.0) || q > 1.0) throw InputError("q must satisfy 0 < q <= 1");
  QScalar out;
  out.q_ = Rational(q);
  out.approx_ = q;
  out.mode_ = NumericMode::relaxed;
  return out;
}

QScalar QScalar::parse(const std::string& text, NumericMode mode) {
  if (mode == NumericMode::exact) return exact(parse_rational(text));
  if (text.find('/') != std::string::npos) {
    QScalar out = exact(parse_rational(text));
    out.mode_ = NumericMode::relaxed;
    return out;
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("cannot parse q '" + text + "'");
  }
  if (used != text.size()) throw InputError("cannot parse q '" + text + "'");
  return relaxed(v);
}

std::string QScalar::to_string() const {
  if (mode_ == NumericMode::exact) return q_.get_str();
  std::ostringstream os;
  os.precision(17);
  os << approx_;
  return os.str();
}

Rational q_power(const QScalar& q, const ExtVal& v) {
  if (v.is_inf()) return Rational(0);
  if (q.mode() != NumericMode::exact) throw ModeError("q is not exact; use relaxed evaluation");
  if (!v.is_integer())
    throw ModeError("non-integer valuation " + v.to_string() + " needs relaxed mode (--relaxed)");
  const std::int64_t e = v.integer();
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q.value().get_num_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), q.value().get_den_mpz_t(), mag);
  Rational out = e < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

double q_power_relaxed(const QScalar& q, const ExtVal& v) {
  if (v.is_inf()) return 0.0;
  return std::pow(q.approx(), v.to_double());
}

}  // namespace vml
