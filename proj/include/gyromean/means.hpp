#pragma once

// Weighted metric geometric mean A #_t B and weighted spectral geometric mean
// A ♮_t B, with residuals of their defining equations.

#include <cmath>
#include <string>

#include "gyromean/spectral.hpp"

namespace gyromean {

enum class MeanKind { metric, spectral };

namespace detail {

inline void require_same_dim(const PositiveDefinite& a, const PositiveDefinite& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::dimension_mismatch,
                "operands are " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  }
}

inline void require_finite_weight(double t) {
  if (!std::isfinite(t)) throw Error(Errc::weight_out_of_range, "weight must be finite");
}

inline void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::weight_out_of_range, "weight must lie in [0, 1]");
}

}  // namespace detail

/// A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}, defined for every real t.
inline PositiveDefinite geo_mean(const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  detail::require_same_dim(a, b);
  detail::require_finite_weight(t);
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  const auto& s = a.spectrum();
  const Matrix half = s.map([](double x) { return std::sqrt(x); });
  const Matrix inv_half = s.map([](double x) { return 1.0 / std::sqrt(x); });
  const auto inner = PositiveDefinite::from_computed(inv_half * b.matrix() * inv_half);
  return PositiveDefinite::from_computed(half * powm(inner, t).matrix() * half);
}

/// (A^{-1} # B)^t A (A^{-1} # B)^t, defined for every real t.
inline PositiveDefinite spectral_mean(const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  detail::require_same_dim(a, b);
  detail::require_finite_weight(t);
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  const auto g = powm(geo_mean(inverse(a), b, 0.5), t);
  return PositiveDefinite::from_computed(g.matrix() * a.matrix() * g.matrix());
}

inline PositiveDefinite mean(MeanKind kind, const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  return kind == MeanKind::metric ? geo_mean(a, b, t) : spectral_mean(a, b, t);
}

/// ||X A^{-1} X - B||_F
inline double riccati_residual(const PositiveDefinite& a, const PositiveDefinite& b, const PositiveDefinite& x) {
  detail::require_same_dim(a, b);
  detail::require_same_dim(a, x);
  return (x.matrix() * inverse(a).matrix() * x.matrix() - b.matrix()).norm();
}

/// Frobenius norm of (1-t) log(X^{1/2} A^{-1} X^{1/2}) + t log(X^{1/2} B^{-1} X^{1/2}).
inline double karcher_residual(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                               const PositiveDefinite& x) {
  detail::require_same_dim(a, b);
  detail::require_same_dim(a, x);
  detail::require_unit_interval(t);
  const Matrix xh = sqrtm(x).matrix();
  const auto pa = PositiveDefinite::from_computed(xh * inverse(a).matrix() * xh);
  const auto pb = PositiveDefinite::from_computed(xh * inverse(b).matrix() * xh);
  return ((1.0 - t) * logm(pa).matrix() + t * logm(pb).matrix()).norm();
}

/// ||(A^{-1} # B)^t - A^{-1} # X||_F, zero exactly when X = A ♮_t B.
inline double spectral_defining_residual(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                                         const PositiveDefinite& x) {
  detail::require_same_dim(a, b);
  detail::require_same_dim(a, x);
  detail::require_unit_interval(t);
  const auto ainv = inverse(a);
  return (powm(geo_mean(ainv, b, 0.5), t).matrix() - geo_mean(ainv, x, 0.5).matrix()).norm();
}

/// X with mean(kind, A, X, t) = C, obtained from the extended curve at 1/t.
inline PositiveDefinite mean_left_inverse(MeanKind kind, const PositiveDefinite& a, const PositiveDefinite& c,
                                          double t) {
  if (!(t > 0.0 && t <= 1.0)) throw Error(Errc::weight_out_of_range, "left inverse needs t in (0, 1]");
  return mean(kind, a, c, 1.0 / t);
}

/// Smallest eigenvalue of the block matrix [[A, X], [X, B]].
inline double block_psd_margin(const PositiveDefinite& a, const PositiveDefinite& b, const Hermitian& x) {
  detail::require_same_dim(a, b);
  if (x.dim() != a.dim()) throw Error(Errc::dimension_mismatch, "off-diagonal block has wrong size");
  const Index n = a.dim();
  Matrix block(2 * n, 2 * n);
  block << a.matrix(), x.matrix(), x.matrix(), b.matrix();
  return min_eigenvalue(Hermitian::symmetrized(block));
}

}  // namespace gyromean
