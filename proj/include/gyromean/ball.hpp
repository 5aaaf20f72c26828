#pragma once

// Einstein and Möbius gyrovector spaces on the open unit ball, and the Bloch
// correspondence between the 3-ball and invertible 2x2 density matrices.

#include <cmath>
#include <string>

#include "gyromean/gyro.hpp"
#include "gyromean/gyro_density.hpp"

namespace gyromean::ball {

using Vector = Eigen::VectorXd;

/// Inputs closer to the boundary than this are rejected rather than clamped.
inline constexpr double kBoundaryMargin = 1e-12;

class BallVector {
 public:
  explicit BallVector(Vector coords) : v_(std::move(coords)) {
    if (v_.size() < 1) throw Error(Errc::dimension_mismatch, "ball vectors need at least one coordinate");
    if (!v_.allFinite()) throw Error(Errc::invalid_argument, "ball vector has non-finite coordinates");
    if (!(v_.norm() < 1.0 - kBoundaryMargin)) {
      throw Error(Errc::not_in_ball, "norm " + std::to_string(v_.norm()) + " is not inside the unit ball");
    }
  }

  static BallVector zero(Index n) { return BallVector(Vector::Zero(n)); }

  Index dim() const { return v_.size(); }
  const Vector& coords() const { return v_; }
  double norm() const { return v_.norm(); }
  BallVector operator-() const { return BallVector(-v_); }

 private:
  Vector v_;
};

namespace detail {
inline void require_same_dim(const BallVector& u, const BallVector& v) {
  if (u.dim() != v.dim()) throw Error(Errc::dimension_mismatch, "ball vectors differ in dimension");
}
}  // namespace detail

/// Lorentz factor 1/sqrt(1 - ||v||^2)
inline double gamma(const BallVector& v) { return 1.0 / std::sqrt(1.0 - v.coords().squaredNorm()); }

inline BallVector einstein_add(const BallVector& u, const BallVector& v) {
  detail::require_same_dim(u, v);
  const double gu = gamma(u);
  const double uv = u.coords().dot(v.coords());
  return BallVector((u.coords() + v.coords() / gu + (gu / (1.0 + gu)) * uv * u.coords()) / (1.0 + uv));
}

inline BallVector mobius_add(const BallVector& u, const BallVector& v) {
  detail::require_same_dim(u, v);
  const double uv = u.coords().dot(v.coords());
  const double uu = u.coords().squaredNorm();
  const double vv = v.coords().squaredNorm();
  return BallVector(((1.0 + 2.0 * uv + vv) * u.coords() + (1.0 - uu) * v.coords()) / (1.0 + 2.0 * uv + uu * vv));
}

/// tanh(t atanh||v||) v/||v||, with t ⊗ 0 = 0.
inline BallVector scalar(double t, const BallVector& v) {
  const double n = v.norm();
  if (n == 0.0) return v;
  return BallVector(std::tanh(t * std::atanh(n)) * (v.coords() / n));
}

inline BallVector einstein_gyration(const BallVector& u, const BallVector& v, const BallVector& w) {
  detail::require_same_dim(u, v);
  detail::require_same_dim(u, w);
  const double gu = gamma(u);
  const double gv = gamma(v);
  const double uv = u.coords().dot(v.coords());
  const double uw = u.coords().dot(w.coords());
  const double vw = v.coords().dot(w.coords());
  const double a = -gu * gu / (gu + 1.0) * (gv - 1.0) * uw + gu * gv * vw +
                   2.0 * gu * gu * gv * gv / ((gu + 1.0) * (gv + 1.0)) * uv * vw;
  const double b = -gv / (gv + 1.0) * (gu * (gv + 1.0) * uw + (gu - 1.0) * gv * vw);
  const double d = gu * gv * (1.0 + uv) + 1.0;
  return BallVector(w.coords() + (a * u.coords() + b * v.coords()) / d);
}

inline BallVector mobius_gyration(const BallVector& u, const BallVector& v, const BallVector& w) {
  detail::require_same_dim(u, v);
  detail::require_same_dim(u, w);
  const double uv = u.coords().dot(v.coords());
  const double uw = u.coords().dot(w.coords());
  const double vw = v.coords().dot(w.coords());
  const double uu = u.coords().squaredNorm();
  const double vv = v.coords().squaredNorm();
  const double a = -uw * vv + vw + 2.0 * uv * vw;
  const double b = -vw * uu - uw;
  const double d = 1.0 + 2.0 * uv + uu * vv;
  return BallVector(w.coords() + 2.0 * (a * u.coords() + b * v.coords()) / d);
}

struct EinsteinModel {
  using element_type = BallVector;
  BallVector identity_like(const BallVector& a) const { return BallVector::zero(a.dim()); }
  BallVector add(const BallVector& a, const BallVector& b) const { return einstein_add(a, b); }
  BallVector neg(const BallVector& a) const { return -a; }
  BallVector scalar(double t, const BallVector& a) const { return ball::scalar(t, a); }
  BallVector gyr(const BallVector& a, const BallVector& b, const BallVector& x) const {
    return einstein_gyration(a, b, x);
  }
  double residual(const BallVector& x, const BallVector& y) const { return (x.coords() - y.coords()).norm(); }
};

struct MobiusModel {
  using element_type = BallVector;
  BallVector identity_like(const BallVector& a) const { return BallVector::zero(a.dim()); }
  BallVector add(const BallVector& a, const BallVector& b) const { return mobius_add(a, b); }
  BallVector neg(const BallVector& a) const { return -a; }
  BallVector scalar(double t, const BallVector& a) const { return ball::scalar(t, a); }
  BallVector gyr(const BallVector& a, const BallVector& b, const BallVector& x) const {
    return mobius_gyration(a, b, x);
  }
  double residual(const BallVector& x, const BallVector& y) const { return (x.coords() - y.coords()).norm(); }
};

inline BallVector einstein_cooperation(const BallVector& u, const BallVector& v) {
  return gyro::cooperation(EinsteinModel{}, u, v);
}

/// atanh ||(-u) ⊕_E v||
inline double rapidity_distance(const BallVector& u, const BallVector& v) {
  return std::atanh(einstein_add(-u, v).norm());
}

/// Einstein gyromidpoint (γ_u u + γ_v v) / (γ_u + γ_v).
inline BallVector gyromidpoint(const BallVector& u, const BallVector& v) {
  detail::require_same_dim(u, v);
  const double gu = gamma(u);
  const double gv = gamma(v);
  return BallVector((gu * u.coords() + gv * v.coords()) / (gu + gv));
}

/// ρ_v = (I + v1 σx + v2 σy + v3 σz) / 2
inline density::DensityMatrix bloch_to_density(const BallVector& v) {
  if (v.dim() != 3) throw Error(Errc::dimension_mismatch, "Bloch vectors are 3-dimensional");
  const auto& c = v.coords();
  Matrix m(2, 2);
  m << Complex(1.0 + c(2), 0.0), Complex(c(0), -c(1)), Complex(c(0), c(1)), Complex(1.0 - c(2), 0.0);
  return density::DensityMatrix(PositiveDefinite::from_computed(0.5 * m));
}

inline BallVector density_to_bloch(const density::DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(Errc::not_density, "Bloch vectors describe 2x2 density matrices only");
  const auto& m = rho.matrix();
  Vector v(3);
  v << 2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real();
  return BallVector(v);
}

}  // namespace gyromean::ball
