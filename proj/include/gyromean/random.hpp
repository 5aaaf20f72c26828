#pragma once

// Deterministic random inputs. Every draw comes from a SplitMix64 counter
// stream keyed by (seed, property, dim, trial), so results do not depend on
// scheduling.

#include <Eigen/QR>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>

#include "gyromean/ball.hpp"
#include "gyromean/spectral.hpp"

namespace gyromean::rng {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a, used to turn property names into stream keys.
constexpr std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Stream {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  explicit Stream(std::uint64_t seed) : key_(mix64(seed)) {}

  /// Substream for one trial of one property.
  Stream(std::uint64_t seed, std::uint64_t property, std::uint64_t dim, std::uint64_t trial)
      : key_(mix64(mix64(mix64(seed ^ property) + dim * kGolden) ^ trial)) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal by Box-Muller; the second variate is cached.
  double normal() {
    if (cached_) {
      const double z = *cached_;
      cached_.reset();
      return z;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * std::numbers::pi * u2);
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Circular complex normal with E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::optional<double> cached_;
};

inline constexpr int kMaxResamples = 100;

inline Matrix ginibre(Stream& s, Index rows, Index cols) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) g(i, j) = s.complex_normal();
  }
  return g;
}

inline double condition_number(const PositiveDefinite& a) { return a.max_eig() / a.min_eig(); }

namespace detail {
inline void require_generator_args(Index dim, double cond_cap) {
  if (dim < 1) throw Error(Errc::invalid_argument, "dimension must be positive");
  if (!(cond_cap > 1.0)) throw Error(Errc::invalid_argument, "condition cap must exceed 1");
}
}  // namespace detail

/// G G* + εI with ε = 1e-3 * tr(G G*)/n, resampled until the condition number
/// is at most cond_cap; optionally scaled to determinant one.
inline PositiveDefinite gen_random_pd(Stream& s, Index dim, double cond_cap = 1e4, bool unit_det = false) {
  detail::require_generator_args(dim, cond_cap);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const Matrix g = ginibre(s, dim, dim);
    Matrix a = g * g.adjoint();
    const double eps = 1e-3 * a.trace().real() / static_cast<double>(dim);
    a += eps * Matrix::Identity(dim, dim);
    auto pd = PositiveDefinite::from_computed(a);
    if (condition_number(pd) > cond_cap) continue;
    if (unit_det) pd = pd.scaled(std::pow(pd.determinant(), -1.0 / static_cast<double>(dim)));
    return pd;
  }
  throw Error(Errc::generation_failure,
              "no sample within condition cap after " + std::to_string(kMaxResamples) + " draws");
}

/// Haar unitary: Q of a Ginibre QR with the phases of diag(R) divided out.
inline Matrix random_unitary(Stream& s, Index dim) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(s, dim, dim));
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

/// U diag(e^{x_i}) U* with x_i uniform on [-L/2, L/2], L = log(cond_cap). Used
/// where matrix powers would square a Wishart sample's conditioning.
inline PositiveDefinite gen_pd_log_spectrum(Stream& s, Index dim, double cond_cap) {
  detail::require_generator_args(dim, cond_cap);
  const double half = 0.5 * std::log(cond_cap);
  const Matrix u = random_unitary(s, dim);
  RealVector d(dim);
  for (Index i = 0; i < dim; ++i) d(i) = std::exp(s.uniform(-half, half));
  return PositiveDefinite::from_computed(u * d.cast<Complex>().asDiagonal() * u.adjoint());
}

/// (G + G*)/2 for a Ginibre G.
inline Hermitian random_hermitian(Stream& s, Index dim) {
  return Hermitian::symmetrized(ginibre(s, dim, dim));
}

/// Uniform direction, norm uniform on [0, max_norm).
inline ball::BallVector random_ball_vector(Stream& s, Index dim, double max_norm = 0.95) {
  ball::Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = s.normal();
  const double n = v.norm();
  if (n == 0.0) return ball::BallVector::zero(dim);
  return ball::BallVector(v * (max_norm * s.uniform() / n));
}

/// Positive definite K with ||K|| <= max_norm.
inline PositiveDefinite random_contraction(Stream& s, Index dim, double max_norm = 0.95, double cond_cap = 1e4) {
  const auto k = gen_random_pd(s, dim, cond_cap);
  return k.scaled(max_norm * s.uniform(0.1, 1.0) / k.max_eig());
}

}  // namespace gyromean::rng
