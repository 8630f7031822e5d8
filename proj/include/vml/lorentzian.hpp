#pragma once

#include <map>
#include <vector>

#include "vml/polymatroid.hpp"

namespace vml {

/// Homogeneous polynomial of degree d with nonnegative rational coefficients.
/// Zero coefficients are not stored.
class MultiHomPoly {
 public:
  MultiHomPoly(GroundSet vars, int degree, const std::map<MultiIndex, Rational>& coeffs);

  const GroundSet& vars() const { return vars_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const MultiIndex& alpha) const;

  friend bool operator==(const MultiHomPoly& a, const MultiHomPoly& b) {
    return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GroundSet vars_;
  int degree_ = 0;
  std::map<MultiIndex, Rational> coeffs_;
};

/// Square symmetric matrix of exact rationals.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  /// Sets both (i,j) and (j,i).
  void set(int i, int j, const Rational& v);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_;
  std::vector<Rational> a_;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// f_M(w) = Σ_B q^{ν(B)} Π_{s∈B} w_s. Exact mode only.
MultiHomPoly generating_poly_matroid(const PlueckerVector& p, const QScalar& q);
/// f_P(w) = Σ_α q^{ν(α)}/α! w^α. Exact mode only.
MultiHomPoly generating_poly_mconvex(const MConvexMap& f, const QScalar& q);

/// ∂^α p; the degree drops by |α|.
MultiHomPoly partial_derivative(const MultiHomPoly& p, const MultiIndex& alpha);

/// Hessian of a quadratic form.
SymMatrix hessian(const MultiHomPoly& p);

/// Exact inertia by symmetric elimination with 1x1 and 2x2 pivots
/// (Sylvester's law of inertia).
Inertia exact_inertia(const SymMatrix& h);

/// One positive and n-1 negative eigenvalues, none zero. Exact mode uses
/// exact_inertia; relaxed mode uses floating-point eigenvalues and counts
/// |λ| <= tol·max|λ| as zero.
bool has_lorentzian_signature(const SymMatrix& h, NumericMode mode = NumericMode::exact,
                              double tol = kDefaultTolerance);

/// All coefficients of Δ_n^d strictly positive and every degree-2 derivative
/// ∂^α p, α ∈ Δ_n^{d-2}, has a Lorentzian Hessian.
bool is_strictly_lorentzian(const MultiHomPoly& p, NumericMode mode = NumericMode::exact,
                            double tol = kDefaultTolerance);

/// Evidence for membership in the closure of the strictly Lorentzian
/// polynomials: p + ε(Σ w)^d is strictly Lorentzian for each ε in a
/// decreasing schedule 10^-1 ... 10^-steps. This is not a decision procedure.
struct BoundaryEvidence {
  bool consistent = true;
  std::vector<std::string> epsilons;
  std::vector<bool> strict;
};
BoundaryEvidence boundary_consistency(const MultiHomPoly& p, int steps = 8);

/// Coefficients a_0..a_d of g(x, y) = p(w_s = x on xgroup, w_s = y on
/// ygroup), with a_k the coefficient of x^{d-k} y^k.
std::vector<Rational> specialize_bivariate(const MultiHomPoly& p, Subset xgroup, Subset ygroup);

/// Passes iff (a_k/C(d,k))² >= (a_{k+1}/C(d,k+1))(a_{k-1}/C(d,k-1)) for
/// 1 <= k <= d-1 and the support of a is an interval. Failures report axiom
/// "ulc" or "support".
CheckReport ulc_of_bivariate(const std::vector<Rational>& coeffs, int d);

}  // namespace vml
