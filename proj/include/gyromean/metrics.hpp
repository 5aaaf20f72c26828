#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "gyromean/means.hpp"

namespace gyromean {

/// thompson:        ||log(A^{-1/2} B A^{-1/2})||        (operator norm)
/// riemannian:      ||log(A^{-1/2} B A^{-1/2})||_F
/// semimetric_op:   2 ||log(A^{-1} # B)||               (operator norm)
/// semimetric_frob: 2 ||log(A^{-1} # B)||_F
/// The semi-metrics satisfy every metric axiom except the triangle inequality.
enum class DistanceKind { thompson, riemannian, semimetric_op, semimetric_frob };

constexpr const char* to_string(DistanceKind k) noexcept {
  switch (k) {
    case DistanceKind::thompson: return "thompson";
    case DistanceKind::riemannian: return "riemannian";
    case DistanceKind::semimetric_op: return "semimetric_op";
    case DistanceKind::semimetric_frob: return "semimetric_frob";
  }
  return "?";
}

/// Eigenvalues of A^{-1/2} B A^{-1/2}, ascending.
inline RealVector relative_spectrum(const PositiveDefinite& a, const PositiveDefinite& b) {
  detail::require_same_dim(a, b);
  const Matrix inv_half = a.spectrum().map([](double x) { return 1.0 / std::sqrt(x); });
  return eigh(Hermitian::symmetrized(inv_half * b.matrix() * inv_half)).eigenvalues;
}

/// Eigenvalues of log(A^{-1} # B), ascending.
inline RealVector semimetric_log_spectrum(const PositiveDefinite& a, const PositiveDefinite& b) {
  detail::require_same_dim(a, b);
  return geo_mean(inverse(a), b, 0.5).spectrum().eigenvalues.array().log().matrix();
}

inline double distance(DistanceKind kind, const PositiveDefinite& a, const PositiveDefinite& b) {
  switch (kind) {
    case DistanceKind::thompson:
      return relative_spectrum(a, b).array().log().abs().maxCoeff();
    case DistanceKind::riemannian:
      return relative_spectrum(a, b).array().log().matrix().norm();
    case DistanceKind::semimetric_op:
      return 2.0 * semimetric_log_spectrum(a, b).cwiseAbs().maxCoeff();
    case DistanceKind::semimetric_frob:
      return 2.0 * semimetric_log_spectrum(a, b).norm();
  }
  throw Error(Errc::invalid_argument, "unknown distance kind");
}

/// M(B/A) = inf{alpha > 0 : B <= alpha A}, the top eigenvalue of A^{-1/2} B A^{-1/2}.
inline double sup_ratio(const PositiveDefinite& a, const PositiveDefinite& b) {
  const auto s = relative_spectrum(a, b);
  return s(s.size() - 1);
}

/// (|dist(A,M) - dist(A,B)/2|, |dist(B,M) - dist(A,B)/2|)
inline std::pair<double, double> midpoint_deviation(DistanceKind kind, const PositiveDefinite& a,
                                                    const PositiveDefinite& b, const PositiveDefinite& m) {
  detail::require_same_dim(a, m);
  const double half = 0.5 * distance(kind, a, b);
  return {std::abs(distance(kind, a, m) - half), std::abs(distance(kind, b, m) - half)};
}

}  // namespace gyromean
