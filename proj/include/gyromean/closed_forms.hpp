#pragma once

// Closed forms of both weighted means for 2x2 positive definite matrices and
// for qubit density matrices written through their Bloch vectors.

#include <cmath>
#include <string>

#include "gyromean/ball.hpp"
#include "gyromean/means.hpp"

namespace gyromean::closed_form {

/// Below this distance from 1 the quotient in l_map is replaced by its limit
/// t. The quotient is even in log x, so the substitution error is O(|x-1|^2).
inline constexpr double kLMapUnitBand = 1e-7;
inline constexpr double kUnitDetTolerance = 1e-9;

/// L_t(x) = (x^t - x^{-t}) / (x - x^{-1}), and t at x = 1.
inline double l_map(double t, double x) {
  if (!(x > 0.0)) throw Error(Errc::non_positive_argument, "l_map needs a positive argument");
  if (std::abs(x - 1.0) < kLMapUnitBand) return t;
  return (std::pow(x, t) - std::pow(x, -t)) / (x - 1.0 / x);
}

enum class Branch { larger, smaller };

namespace detail {

inline void require_2x2(const PositiveDefinite& a) {
  if (a.dim() != 2) throw Error(Errc::dimension_mismatch, "closed forms are for 2x2 matrices");
}

inline double det2(const Matrix& m) { return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real(); }

inline void require_unit_det(const PositiveDefinite& a) {
  require_2x2(a);
  const double d = det2(a.matrix());
  if (!(std::abs(d - 1.0) < kUnitDetTolerance)) {
    throw Error(Errc::not_unit_determinant, "determinant " + std::to_string(d) + " is not 1");
  }
}

/// adj(M), the inverse for a determinant-one 2x2 matrix.
inline Matrix adjugate(const Matrix& m) {
  Matrix a(2, 2);
  a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return a;
}

}  // namespace detail

/// Eigenvalue of A B^{-1} for determinant-one A, B; the pair is (λ, 1/λ).
inline double unit_det_ratio_eigenvalue(const PositiveDefinite& a, const PositiveDefinite& b, Branch branch) {
  const double tau = (a.matrix() * detail::adjugate(b.matrix())).trace().real();
  const double root = std::sqrt(std::max(tau * tau - 4.0, 0.0));
  const double big = 0.5 * (tau + root);
  return branch == Branch::larger ? big : 1.0 / big;
}

/// A #_t B = L_{1-t}(λ) A + L_t(λ) B for determinant-one 2x2 A, B.
inline PositiveDefinite gm2_det1(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                                 Branch branch = Branch::larger) {
  detail::require_unit_det(a);
  detail::require_unit_det(b);
  const double lambda = unit_det_ratio_eigenvalue(a, b, branch);
  return PositiveDefinite::from_computed(l_map(1.0 - t, lambda) * a.matrix() + l_map(t, lambda) * b.matrix());
}

/// A # B = (A + B) / sqrt(det(A + B)) for determinant-one 2x2 A, B.
inline PositiveDefinite gm2_det1_half(const PositiveDefinite& a, const PositiveDefinite& b) {
  detail::require_unit_det(a);
  detail::require_unit_det(b);
  const Matrix s = a.matrix() + b.matrix();
  return PositiveDefinite::from_computed(s / std::sqrt(detail::det2(s)));
}

/// (A^{-1} + B)^t A (A^{-1} + B)^t / (2 + tr(AB))^t for determinant-one A, B.
inline PositiveDefinite sgm2_det1(const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  detail::require_unit_det(a);
  detail::require_unit_det(b);
  const auto m = powm(PositiveDefinite::from_computed(inverse(a).matrix() + b.matrix()), t);
  const double denom = std::pow(2.0 + (a.matrix() * b.matrix()).trace().real(), t);
  return PositiveDefinite::from_computed(m.matrix() * a.matrix() * m.matrix() / denom);
}

/// With det A = α², det B = β², k = αβ:
/// (k A^{-1} + B)^t A (k A^{-1} + B)^t / (2k + tr(AB))^t
inline PositiveDefinite sgm2_general(const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  detail::require_2x2(a);
  detail::require_2x2(b);
  const double k = std::sqrt(detail::det2(a.matrix()) * detail::det2(b.matrix()));
  const auto m = powm(PositiveDefinite::from_computed(k * inverse(a).matrix() + b.matrix()), t);
  const double factor = std::pow(2.0 * k + (a.matrix() * b.matrix()).trace().real(), -t);
  return PositiveDefinite::from_computed(factor * (m.matrix() * a.matrix() * m.matrix()));
}

inline PositiveDefinite sgm2(const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  detail::require_2x2(a);
  detail::require_2x2(b);
  const bool unit = std::abs(detail::det2(a.matrix()) - 1.0) < kUnitDetTolerance &&
                    std::abs(detail::det2(b.matrix()) - 1.0) < kUnitDetTolerance;
  return unit ? sgm2_det1(a, b, t) : sgm2_general(a, b, t);
}

/// |det(cI + X) - (c² + c tr X + det X)|
inline double det_shift_identity(double c, const Matrix& x) {
  if (x.rows() != 2 || x.cols() != 2) throw Error(Errc::dimension_mismatch, "identity is for 2x2 matrices");
  const Matrix shifted = c * Matrix::Identity(2, 2) + x;
  const Complex lhs = shifted(0, 0) * shifted(1, 1) - shifted(0, 1) * shifted(1, 0);
  const Complex rhs = c * c + c * x.trace() + (x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0));
  return std::abs(lhs - rhs);
}

/// Eigenvalue of A B^{-1} for A = 2γ_u ρ_u, B = 2γ_v ρ_v:
/// γ_u γ_v (1 - u·v)(1 ± ||u ⊕_E (-v)||). The two branches are reciprocal.
inline double qubit_mu(const ball::BallVector& u, const ball::BallVector& v, Branch branch = Branch::larger) {
  const double r = ball::einstein_add(u, -v).norm();
  const double base = ball::gamma(u) * ball::gamma(v) * (1.0 - u.coords().dot(v.coords()));
  return base * (branch == Branch::larger ? 1.0 + r : 1.0 - r);
}

/// ρ_u #_t ρ_v = L_{1-t}(μ) (γ_u/γ_v)^t ρ_u + L_t(μ) (γ_v/γ_u)^{1-t} ρ_v (not trace-normalized).
inline PositiveDefinite qubit_geo_mean(const ball::BallVector& u, const ball::BallVector& v, double t,
                                       Branch branch = Branch::larger) {
  const double mu = qubit_mu(u, v, branch);
  const double ratio = ball::gamma(u) / ball::gamma(v);
  const Matrix m = l_map(1.0 - t, mu) * std::pow(ratio, t) * ball::bloch_to_density(u).matrix() +
                   l_map(t, mu) * std::pow(ratio, t - 1.0) * ball::bloch_to_density(v).matrix();
  return PositiveDefinite::from_computed(m);
}

/// ρ_u ♮_t ρ_v = 2^t (γ_u/γ_v)^t M^t ρ_u M^t / (1 + γ_{u ⊕_E v})^t with
/// M = γ_u ρ_{-u} + γ_v ρ_v (not trace-normalized).
inline PositiveDefinite qubit_spectral_mean(const ball::BallVector& u, const ball::BallVector& v, double t) {
  const double gu = ball::gamma(u);
  const double gv = ball::gamma(v);
  const auto rho_u = ball::bloch_to_density(u).matrix();
  const auto m = powm(PositiveDefinite::from_computed(gu * ball::bloch_to_density(-u).matrix() +
                                                      gv * ball::bloch_to_density(v).matrix()),
                      t);
  const double factor = std::pow(2.0 * gu / gv / (1.0 + ball::gamma(ball::einstein_add(u, v))), t);
  return PositiveDefinite::from_computed(factor * (m.matrix() * rho_u * m.matrix()));
}

/// sqrt(det(A+B) ||A|| ||B||) - ||A+B|| for determinant-one 2x2 A, B.
inline double norm_product_check(const PositiveDefinite& a, const PositiveDefinite& b) {
  detail::require_unit_det(a);
  detail::require_unit_det(b);
  const Matrix s = a.matrix() + b.matrix();
  const double lhs = norm(Hermitian::symmetrized(s), NormKind::operator_norm);
  return std::sqrt(detail::det2(s) * a.max_eig() * b.max_eig()) - lhs;
}

/// The same inequality for arbitrary 2x2 A, B after dividing by α = sqrt(det A)
/// and β = sqrt(det B):
/// [det(A/α + B/β) ||A|| ||B||]^{1/2} - sqrt(αβ) ||A/α + B/β||.
inline double norm_product_check_scaled(const PositiveDefinite& a, const PositiveDefinite& b) {
  detail::require_2x2(a);
  detail::require_2x2(b);
  const double alpha = std::sqrt(a.determinant());
  const double beta = std::sqrt(b.determinant());
  const Matrix s = a.matrix() / alpha + b.matrix() / beta;
  const double lhs = std::sqrt(alpha * beta) * norm(Hermitian::symmetrized(s), NormKind::operator_norm);
  return std::sqrt(detail::det2(s) * a.max_eig() * b.max_eig()) - lhs;
}

/// sqrt((1+|u|)(1+|v|) / ((1-|u|)(1-|v|))) - (1+|m|)/(1-|m|) for the Einstein
/// gyromidpoint m; nonnegative is 2 d_E(0,m) <= d_E(0,u) + d_E(0,v).
inline double midpoint_vector_check(const ball::BallVector& u, const ball::BallVector& v) {
  const double m = ball::gyromidpoint(u, v).norm();
  const double nu = u.norm();
  const double nv = v.norm();
  const double rhs = std::sqrt((1.0 + nu) * (1.0 + nv) / ((1.0 - nu) * (1.0 - nv)));
  return rhs - (1.0 + m) / (1.0 - m);
}

}  // namespace gyromean::closed_form
