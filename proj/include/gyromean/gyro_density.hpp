#pragma once

// Invertible density matrices as a gyrovector space:
//   ρ ⊙ σ = ρ^{1/2} σ ρ^{1/2} / tr(ρσ),   t ★ ρ = ρ^t / tr(ρ^t)
// with identity I/n. Gyrations are the cone's unitary conjugations, which
// preserve the trace.

#include <cmath>
#include <string>

#include "gyromean/gyro_cone.hpp"

namespace gyromean::density {

inline constexpr double kTraceTolerance = 1e-10;

class DensityMatrix {
 public:
  explicit DensityMatrix(PositiveDefinite p) : p_(std::move(p)) {
    if (std::abs(p_.trace() - 1.0) > kTraceTolerance) {
      throw Error(Errc::not_density, "trace " + std::to_string(p_.trace()) + " differs from 1");
    }
  }

  explicit DensityMatrix(const Matrix& m, const Tolerances& tol = {}) : DensityMatrix(PositiveDefinite(m, tol)) {}

  /// P / tr(P)
  static DensityMatrix normalized(const PositiveDefinite& p) { return DensityMatrix(p.scaled(1.0 / p.trace())); }

  static DensityMatrix maximally_mixed(Index n) {
    return DensityMatrix(PositiveDefinite::identity(n).scaled(1.0 / static_cast<double>(n)));
  }

  Index dim() const { return p_.dim(); }
  const PositiveDefinite& pd() const { return p_; }
  const Matrix& matrix() const { return p_.matrix(); }

 private:
  PositiveDefinite p_;
};

inline DensityMatrix add(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return DensityMatrix::normalized(cone::add(rho.pd(), sigma.pd()));
}

inline DensityMatrix scalar(double t, const DensityMatrix& rho) {
  return DensityMatrix::normalized(cone::scalar(t, rho.pd()));
}

/// ρ^{-1} / tr(ρ^{-1})
inline DensityMatrix neg(const DensityMatrix& rho) { return DensityMatrix::normalized(inverse(rho.pd())); }

inline DensityMatrix gyration(const DensityMatrix& rho, const DensityMatrix& sigma, const DensityMatrix& x) {
  return DensityMatrix::normalized(cone::gyration(rho.pd(), sigma.pd(), x.pd()));
}

struct Model {
  using element_type = DensityMatrix;
  DensityMatrix identity_like(const DensityMatrix& a) const { return DensityMatrix::maximally_mixed(a.dim()); }
  DensityMatrix add(const DensityMatrix& a, const DensityMatrix& b) const { return density::add(a, b); }
  DensityMatrix neg(const DensityMatrix& a) const { return density::neg(a); }
  DensityMatrix scalar(double t, const DensityMatrix& a) const { return density::scalar(t, a); }
  DensityMatrix gyr(const DensityMatrix& a, const DensityMatrix& b, const DensityMatrix& x) const {
    return gyration(a, b, x);
  }
  double residual(const DensityMatrix& x, const DensityMatrix& y) const {
    return relative_distance(x.matrix(), y.matrix());
  }
};

/// ρ #_t σ / tr(ρ #_t σ)
inline DensityMatrix gyroline(double t, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return DensityMatrix::normalized(geo_mean(rho.pd(), sigma.pd(), t));
}

/// ρ ♮_t σ / tr(ρ ♮_t σ)
inline DensityMatrix cogyroline(double t, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return DensityMatrix::normalized(spectral_mean(rho.pd(), sigma.pd(), t));
}

}  // namespace gyromean::density
