#include "vml/lorentzian.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace vml {

MultiHomPoly::MultiHomPoly(GroundSet vars, int degree, const std::map<MultiIndex, Rational>& coeffs)
    : vars_(std::move(vars)), degree_(degree) {
  if (degree_ < 0) throw InputError("polynomial degree must be nonnegative");
  for (const auto& [alpha, c] : coeffs) {
    if (alpha.size() != vars_.size()) throw InputError("monomial exponent length differs from the variable count");
    if (alpha.degree() != degree_) throw InputError("monomial " + alpha.to_string() + " is not of degree " + std::to_string(degree_));
    if (c < 0) throw InputError("coefficients must be nonnegative");
    if (c != 0) coeffs_.emplace(alpha, c);
  }
}

Rational MultiHomPoly::coeff(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw InputError("matrix is not symmetric");
      m.a_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(int i, int j, const Rational& v) {
  a_.at(static_cast<std::size_t>(i) * n_ + j) = v;
  a_.at(static_cast<std::size_t>(j) * n_ + i) = v;
}

MultiHomPoly generating_poly_matroid(const PlueckerVector& p, const QScalar& q) {
  if (q.mode() != NumericMode::exact) throw ModeError("generating polynomials need an exact q");
  std::map<MultiIndex, Rational> coeffs;
  for (const auto& [s, v] : p.entries()) coeffs[MultiIndex::indicator(p.ground().size(), s)] = q_power(q, v);
  return MultiHomPoly(p.ground(), p.rank(), coeffs);
}

MultiHomPoly generating_poly_mconvex(const MConvexMap& f, const QScalar& q) {
  if (q.mode() != NumericMode::exact) throw ModeError("generating polynomials need an exact q");
  std::map<MultiIndex, Rational> coeffs;
  for (const auto& [alpha, v] : f.entries()) coeffs[alpha] = q_power(q, v) / Rational(multi_index_factorial(alpha));
  return MultiHomPoly(f.ground(), f.rank(), coeffs);
}

MultiHomPoly partial_derivative(const MultiHomPoly& p, const MultiIndex& alpha) {
  if (alpha.size() != p.vars().size()) throw InputError("derivative index length differs from the variable count");
  if (alpha.degree() > p.degree()) throw InputError("derivative order exceeds the degree");
  std::map<MultiIndex, Rational> out;
  for (const auto& [beta, c] : p.coeffs()) {
    if (!alpha.dominated_by(beta)) continue;
    // d^a/dw^a w^b = b!/(b-a)! w^(b-a)
    BigInt falling = 1;
    for (int i = 0; i < beta.size(); ++i)
      for (int j = 0; j < alpha[i]; ++j) falling *= beta[i] - j;
    out[beta - alpha] += c * Rational(falling);
  }
  return MultiHomPoly(p.vars(), p.degree() - alpha.degree(), out);
}

SymMatrix hessian(const MultiHomPoly& p) {
  if (p.degree() != 2) throw InputError("hessian needs a polynomial of degree exactly 2");
  const int n = p.vars().size();
  SymMatrix h(n);
  for (const auto& [alpha, c] : p.coeffs()) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < alpha[i]; ++j) idx.push_back(i);
    if (idx[0] == idx[1]) h.set(idx[0], idx[0], h.at(idx[0], idx[0]) + 2 * c);
    else h.set(idx[0], idx[1], h.at(idx[0], idx[1]) + c);
  }
  return h;
}

Inertia exact_inertia(const SymMatrix& h) {
  const int n = h.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = h.at(i, j);
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  Inertia out;
  auto drop = [&](int idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    // 1x1 pivot on the diagonal entry of largest magnitude.
    int piv = -1;
    for (int i : active)
      if (m[i][i] != 0 && (piv < 0 || abs(m[i][i]) > abs(m[piv][piv]))) piv = i;
    if (piv >= 0) {
      const Rational d = m[piv][piv];
      (d > 0 ? out.positive : out.negative) += 1;
      drop(piv);
      for (int j : active) {
        if (m[j][piv] == 0) continue;
        const Rational f = m[j][piv] / d;
        for (int k : active) m[j][k] -= f * m[piv][k];
      }
      continue;
    }
    // Zero diagonal: a nonzero off-diagonal b gives the block [[0,b],[b,0]],
    // one positive and one negative direction.
    int pi = -1;
    int pj = -1;
    for (int i : active)
      for (int j : active)
        if (i < j && m[i][j] != 0 && pi < 0) {
          pi = i;
          pj = j;
        }
    if (pi < 0) {
      out.zero += static_cast<int>(active.size());
      break;
    }
    const Rational b = m[pi][pj];
    out.positive += 1;
    out.negative += 1;
    drop(pi);
    drop(pj);
    std::vector<std::vector<Rational>> next = m;
    for (int k : active)
      for (int l : active) next[k][l] = m[k][l] - (m[k][pi] * m[pj][l] + m[k][pj] * m[pi][l]) / b;
    m = std::move(next);
  }
  return out;
}

bool has_lorentzian_signature(const SymMatrix& h, NumericMode mode, double tol) {
  const int n = h.size();
  if (n == 0) return false;
  if (mode == NumericMode::exact) {
    const Inertia in = exact_inertia(h);
    return in.positive == 1 && in.negative == n - 1 && in.zero == 0;
  }
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = h.at(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  int pos = 0;
  int neg = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(ev[i]) <= tol * scale) return false;
    (ev[i] > 0 ? pos : neg) += 1;
  }
  return pos == 1 && neg == n - 1;
}

bool is_strictly_lorentzian(const MultiHomPoly& p, NumericMode mode, double tol) {
  const int n = p.vars().size();
  const int d = p.degree();
  for (const MultiIndex& alpha : enumerate_multi_indices(n, d))
    if (p.coeff(alpha) <= 0) return false;
  if (d <= 1) return true;
  for (const MultiIndex& alpha : enumerate_multi_indices(n, d - 2))
    if (!has_lorentzian_signature(hessian(partial_derivative(p, alpha)), mode, tol)) return false;
  return true;
}

BoundaryEvidence boundary_consistency(const MultiHomPoly& p, int steps) {
  BoundaryEvidence out;
  const int n = p.vars().size();
  const int d = p.degree();
  const BigInt d_fact = factorial(d);
  Rational eps(1, 10);
  for (int step = 0; step < steps; ++step, eps /= 10) {
    std::map<MultiIndex, Rational> coeffs = p.coeffs();
    for (const MultiIndex& alpha : enumerate_multi_indices(n, d))
      coeffs[alpha] += eps * Rational(d_fact, multi_index_factorial(alpha));
    const bool strict = is_strictly_lorentzian(MultiHomPoly(p.vars(), d, coeffs));
    out.epsilons.push_back(eps.get_str());
    out.strict.push_back(strict);
    out.consistent = out.consistent && strict;
  }
  return out;
}

std::vector<Rational> specialize_bivariate(const MultiHomPoly& p, Subset xgroup, Subset ygroup) {
  const Subset all = Subset::full(p.vars().size());
  if (!(xgroup & ygroup).empty() || !((xgroup | ygroup) == all))
    throw InputError("x and y groups must partition the variables");
  std::vector<Rational> out(p.degree() + 1, Rational(0));
  for (const auto& [alpha, c] : p.coeffs()) {
    int k = 0;
    for (int i : ygroup.members()) k += alpha[i];
    out[k] += c;
  }
  return out;
}

CheckReport ulc_of_bivariate(const std::vector<Rational>& coeffs, int d) {
  if (static_cast<int>(coeffs.size()) != d + 1) throw InputError("expected d+1 coefficients");
  for (const Rational& c : coeffs)
    if (c < 0) throw InputError("coefficients must be nonnegative");
  int first = -1;
  int last = -1;
  for (int k = 0; k <= d; ++k)
    if (coeffs[k] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  for (int k = first; first >= 0 && k <= last; ++k)
    if (coeffs[k] == 0) {
      CheckReport r = CheckReport::failure("support", "internal zero at k=" + std::to_string(k));
      r.k = k;
      return r;
    }
  for (int k = 1; k <= d - 1; ++k) {
    const Rational mid = coeffs[k] / Rational(binomial_big(d, k));
    const Rational lhs = mid * mid;
    const Rational rhs = coeffs[k + 1] / Rational(binomial_big(d, k + 1)) * (coeffs[k - 1] / Rational(binomial_big(d, k - 1)));
    if (lhs < rhs) {
      CheckReport r = CheckReport::failure("ulc", "normalized coefficients fail log-concavity at k=" + std::to_string(k));
      r.k = k;
      r.lhs = lhs.get_str();
      r.rhs = rhs.get_str();
      return r;
    }
  }
  return CheckReport::ok();
}

}  // namespace vml
