#pragma once

// The gyrovector space of positive definite matrices:
//   A ⊕ B = A^{1/2} B A^{1/2},  t ∘ A = A^t,  gyr[A,B] X = U X U*
// with U = U(A,B) the unitary polar factor of A^{1/2} B^{1/2}.

#include "gyromean/gyro.hpp"
#include "gyromean/means.hpp"

namespace gyromean::cone {

inline PositiveDefinite add(const PositiveDefinite& a, const PositiveDefinite& b) {
  gyromean::detail::require_same_dim(a, b);
  const Matrix h = sqrtm(a).matrix();
  return PositiveDefinite::from_computed(h * b.matrix() * h);
}

inline PositiveDefinite scalar(double t, const PositiveDefinite& a) {
  if (t == 0.0) return PositiveDefinite::identity(a.dim());
  return powm(a, t);
}

inline PositiveDefinite neg(const PositiveDefinite& a) { return inverse(a); }

/// U(A,B) = (A^{1/2} B A^{1/2})^{-1/2} A^{1/2} B^{1/2}
inline Matrix gyration_unitary(const PositiveDefinite& a, const PositiveDefinite& b) {
  gyromean::detail::require_same_dim(a, b);
  return polar_unitary(sqrtm(a).matrix() * sqrtm(b).matrix());
}

inline PositiveDefinite gyration(const PositiveDefinite& a, const PositiveDefinite& b, const PositiveDefinite& x) {
  gyromean::detail::require_same_dim(a, x);
  const Matrix u = gyration_unitary(a, b);
  return PositiveDefinite::from_computed(u * x.matrix() * u.adjoint());
}

struct Model {
  using element_type = PositiveDefinite;
  PositiveDefinite identity_like(const PositiveDefinite& a) const { return PositiveDefinite::identity(a.dim()); }
  PositiveDefinite add(const PositiveDefinite& a, const PositiveDefinite& b) const { return cone::add(a, b); }
  PositiveDefinite neg(const PositiveDefinite& a) const { return cone::neg(a); }
  PositiveDefinite scalar(double t, const PositiveDefinite& a) const { return cone::scalar(t, a); }
  PositiveDefinite gyr(const PositiveDefinite& a, const PositiveDefinite& b, const PositiveDefinite& x) const {
    return gyration(a, b, x);
  }
  double residual(const PositiveDefinite& x, const PositiveDefinite& y) const {
    return relative_distance(x.matrix(), y.matrix());
  }
};

inline PositiveDefinite cooperation(const PositiveDefinite& a, const PositiveDefinite& b) {
  return gyro::cooperation(Model{}, a, b);
}

/// Built from the gyro operations; coincides with geo_mean(a, b, t).
inline PositiveDefinite gyroline(double t, const PositiveDefinite& a, const PositiveDefinite& b) {
  return gyro::gyroline(Model{}, t, a, b);
}

/// Built from the gyro operations; coincides with spectral_mean(a, b, t).
inline PositiveDefinite cogyroline(double t, const PositiveDefinite& a, const PositiveDefinite& b) {
  return gyro::cogyroline(Model{}, t, a, b);
}

/// tr(X Y*)
inline Complex inner_product(const Matrix& x, const Matrix& y) { return (x * y.adjoint()).trace(); }

}  // namespace gyromean::cone
