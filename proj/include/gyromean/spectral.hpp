#pragma once

// Hermitian eigendecomposition (cyclic complex Jacobi) and the spectral
// functional calculus that every other header builds on.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gyromean/error.hpp"

namespace gyromean {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Tolerances {
  double hermiticity = 1e-10;
  double pd = 1e-10;
  double reconstruct = 1e-10;
  double loewner = 1e-8;
  double equality = 1e-8;

  void validate() const {
    for (double v : {hermiticity, pd, reconstruct, loewner, equality}) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(Errc::invalid_argument, "tolerances must be finite and strictly positive");
      }
    }
  }
};

namespace detail {

inline void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(Errc::dimension_mismatch, std::string(what) + " must be a non-empty square matrix");
  }
}

inline void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw Error(Errc::invalid_argument, "matrix has non-finite entries");
}

inline Matrix symmetrize(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

}  // namespace detail

/// n-by-n complex matrix equal to its conjugate transpose. The stored entries
/// are exactly Hermitian; construction from user data checks the asymmetry
/// against the hermiticity tolerance (relative to the largest entry) first.
class Hermitian {
 public:
  explicit Hermitian(const Matrix& m, const Tolerances& tol = {}) {
    detail::require_square(m, "Hermitian matrix");
    detail::require_finite(m);
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol.hermiticity * scale) {
      throw Error(Errc::not_hermitian, "asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }
    m_ = detail::symmetrize(m);
  }

  /// Takes the Hermitian part (M + M*)/2 without checking. For results that
  /// are Hermitian in exact arithmetic.
  static Hermitian symmetrized(const Matrix& m) {
    detail::require_square(m, "Hermitian matrix");
    Hermitian h;
    h.m_ = detail::symmetrize(m);
    return h;
  }

  static Hermitian identity(Index n) { return symmetrized(Matrix::Identity(n, n)); }

  static Hermitian diagonal(const RealVector& d) {
    return symmetrized(d.cast<Complex>().asDiagonal().toDenseMatrix());
  }

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  friend Hermitian operator+(const Hermitian& a, const Hermitian& b) {
    same_dim(a, b);
    return symmetrized(a.m_ + b.m_);
  }
  friend Hermitian operator-(const Hermitian& a, const Hermitian& b) {
    same_dim(a, b);
    return symmetrized(a.m_ - b.m_);
  }
  friend Hermitian operator*(double s, const Hermitian& a) { return symmetrized(s * a.m_); }
  friend Hermitian operator*(const Hermitian& a, double s) { return s * a; }

 private:
  Hermitian() = default;

  static void same_dim(const Hermitian& a, const Hermitian& b) {
    if (a.dim() != b.dim()) throw Error(Errc::dimension_mismatch, "Hermitian operands differ in size");
  }

  Matrix m_;
};

/// H = V diag(eigenvalues) V*, eigenvalues ascending. Each eigenvector has
/// its largest-magnitude component real and positive.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix vectors;

  Index dim() const { return eigenvalues.size(); }

  template <class F>
  Matrix map(F&& f) const {
    RealVector d(eigenvalues.size());
    for (Index i = 0; i < d.size(); ++i) d(i) = f(eigenvalues(i));
    return detail::symmetrize(vectors * d.cast<Complex>().asDiagonal() * vectors.adjoint());
  }

  Matrix reconstruct() const {
    return map([](double x) { return x; });
  }
};

namespace detail {

constexpr int kMaxJacobiSweeps = 50;

inline void fix_phase(Matrix& v) {
  for (Index j = 0; j < v.cols(); ++j) {
    Index best = 0;
    double best_abs = -1.0;
    for (Index i = 0; i < v.rows(); ++i) {
      const double a = std::abs(v(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best_abs > 0.0) v.col(j) *= std::conj(v(best, j)) / best_abs;
  }
}

inline SpectralDecomposition sort_ascending(const RealVector& values, const Matrix& vectors) {
  std::vector<Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values(a) < values(b); });
  SpectralDecomposition out{RealVector(values.size()), Matrix(vectors.rows(), vectors.cols())};
  for (Index k = 0; k < values.size(); ++k) {
    out.eigenvalues(k) = values(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

// One complex Jacobi rotation J = diag(1, e^{-i phi}) R(c, s) zeroing a(p,q),
// applied as a <- J* a J and v <- v J.
inline void jacobi_rotate(Matrix& a, Matrix& v, Index p, Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex j00 = c;
  const Complex j01 = s;
  const Complex j10 = -s * std::conj(phase);
  const Complex j11 = c * std::conj(phase);

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * j00 + akq * j10;
    a(k, q) = akp * j01 + akq * j11;
  }
  for (Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
    a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  for (Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * j00 + vkq * j10;
    v(k, q) = vkp * j01 + vkq * j11;
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver. A pair is rotated while its off-diagonal entry
/// exceeds machine epsilon relative to the geometric mean of the two diagonal
/// magnitudes, which keeps small eigenvalues of definite matrices accurate.
inline SpectralDecomposition eigh(const Hermitian& h) {
  Matrix a = h.matrix();
  const Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = std::numeric_limits<double>::min() * std::max(1.0, a.norm());

  bool converged = (n == 1) || a.norm() == 0.0;
  for (int sweep = 0; sweep < detail::kMaxJacobiSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double off = std::abs(a(p, q));
        const double diag = std::sqrt(std::abs(a(p, p).real()) * std::abs(a(q, q).real()));
        if (off <= eps * diag || off <= floor) continue;
        detail::jacobi_rotate(a, v, p, q);
        rotated = true;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw Error(Errc::no_convergence, "Jacobi iteration did not converge in 50 sweeps");
  }

  RealVector values(n);
  for (Index i = 0; i < n; ++i) values(i) = a(i, i).real();
  auto out = detail::sort_ascending(values, v);
  detail::fix_phase(out.vectors);
  return out;
}

/// Convenience overload that validates hermiticity of raw input first.
inline SpectralDecomposition eigh(const Matrix& m, const Tolerances& tol = {}) {
  return eigh(Hermitian(m, tol));
}

inline double min_eigenvalue(const Hermitian& h) { return eigh(h).eigenvalues(0); }

/// Hermitian matrix with strictly positive spectrum. Keeps its spectral
/// decomposition so matrix functions do not re-diagonalize.
class PositiveDefinite {
 public:
  explicit PositiveDefinite(const Hermitian& h, const Tolerances& tol = {})
      : h_(h), spectrum_(eigh(h)) {
    if (!(spectrum_.eigenvalues(0) > tol.pd)) {
      throw Error(Errc::not_positive_definite,
                  "smallest eigenvalue " + std::to_string(spectrum_.eigenvalues(0)) +
                      " is not above the positive-definiteness tolerance");
    }
  }

  explicit PositiveDefinite(const Matrix& m, const Tolerances& tol = {})
      : PositiveDefinite(Hermitian(m, tol), tol) {}

  /// For matrices positive definite in exact arithmetic: takes the Hermitian
  /// part and only requires a strictly positive computed spectrum.
  static PositiveDefinite from_computed(const Matrix& m) {
    auto h = Hermitian::symmetrized(m);
    auto s = eigh(h);
    if (!(s.eigenvalues(0) > 0.0)) {
      throw Error(Errc::not_positive_definite, "computed matrix lost positive definiteness");
    }
    return PositiveDefinite(std::move(h), std::move(s));
  }

  /// V f(Λ) V* with the spectrum carried over (f must be positive).
  template <class F>
  static PositiveDefinite from_spectrum(const SpectralDecomposition& base, F&& f) {
    RealVector values(base.dim());
    for (Index i = 0; i < values.size(); ++i) values(i) = f(base.eigenvalues(i));
    if (!(values.minCoeff() > 0.0) || !values.allFinite()) {
      throw Error(Errc::not_positive_definite, "spectral map produced a non-positive eigenvalue");
    }
    auto s = detail::sort_ascending(values, base.vectors);
    auto h = Hermitian::symmetrized(s.reconstruct());
    return PositiveDefinite(std::move(h), std::move(s));
  }

  static PositiveDefinite identity(Index n) {
    return from_spectrum(SpectralDecomposition{RealVector::Ones(n), Matrix::Identity(n, n)},
                         [](double x) { return x; });
  }

  static PositiveDefinite diagonal(const RealVector& d) {
    return PositiveDefinite(Hermitian::diagonal(d));
  }

  Index dim() const { return h_.dim(); }
  const Hermitian& hermitian() const { return h_; }
  const Matrix& matrix() const { return h_.matrix(); }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  double min_eig() const { return spectrum_.eigenvalues(0); }
  double max_eig() const { return spectrum_.eigenvalues(spectrum_.dim() - 1); }
  double trace() const { return h_.trace(); }
  double determinant() const { return spectrum_.eigenvalues.prod(); }

  PositiveDefinite scaled(double a) const {
    if (!(a > 0.0)) throw Error(Errc::non_positive_argument, "scale factor must be positive");
    return from_spectrum(spectrum_, [a](double x) { return a * x; });
  }

 private:
  PositiveDefinite(Hermitian h, SpectralDecomposition s) : h_(std::move(h)), spectrum_(std::move(s)) {}

  Hermitian h_;
  SpectralDecomposition spectrum_;
};

struct Sqrt {};
struct Log {};
struct Power {
  double t;
};
using SpectralFunction = std::variant<Sqrt, Log, Power>;

inline PositiveDefinite sqrtm(const PositiveDefinite& a) {
  return PositiveDefinite::from_spectrum(a.spectrum(), [](double x) { return std::sqrt(x); });
}

inline PositiveDefinite powm(const PositiveDefinite& a, double t) {
  if (!std::isfinite(t)) throw Error(Errc::invalid_argument, "power exponent must be finite");
  if (t == 1.0) return a;
  return PositiveDefinite::from_spectrum(a.spectrum(), [t](double x) { return std::pow(x, t); });
}

inline PositiveDefinite inverse(const PositiveDefinite& a) {
  return PositiveDefinite::from_spectrum(a.spectrum(), [](double x) { return 1.0 / x; });
}

inline Hermitian logm(const PositiveDefinite& a) {
  return Hermitian::symmetrized(a.spectrum().map([](double x) { return std::log(x); }));
}

inline PositiveDefinite expm(const Hermitian& h) {
  return PositiveDefinite::from_spectrum(eigh(h), [](double x) { return std::exp(x); });
}

inline Hermitian matrix_function(const PositiveDefinite& a, const SpectralFunction& f) {
  return std::visit(
      [&](const auto& fn) -> Hermitian {
        using F = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<F, Sqrt>) {
          return sqrtm(a).hermitian();
        } else if constexpr (std::is_same_v<F, Log>) {
          return logm(a);
        } else {
          return powm(a, fn.t).hermitian();
        }
      },
      f);
}

/// S X S*. S may be rectangular (m-by-n against an n-by-n X).
inline Hermitian congruence(const Hermitian& x, const Matrix& s) {
  if (s.cols() != x.dim()) throw Error(Errc::dimension_mismatch, "congruence factor has wrong width");
  return Hermitian::symmetrized(s * x.matrix() * s.adjoint());
}

enum class NormKind { operator_norm, frobenius };

inline double norm(const Hermitian& h, NormKind kind) {
  if (kind == NormKind::frobenius) return h.matrix().norm();
  return eigh(h).eigenvalues.cwiseAbs().maxCoeff();
}

enum class Ordering { LE, GE, EQ, INCOMPARABLE };

constexpr const char* to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::LE: return "LE";
    case Ordering::GE: return "GE";
    case Ordering::EQ: return "EQ";
    case Ordering::INCOMPARABLE: return "INCOMPARABLE";
  }
  return "?";
}

/// Smallest eigenvalue of Y - X: nonnegative iff X <= Y in the Loewner order.
inline double loewner_margin(const Hermitian& x, const Hermitian& y) {
  if (x.dim() != y.dim()) throw Error(Errc::dimension_mismatch, "Loewner comparison of different sizes");
  return min_eigenvalue(y - x);
}

inline bool loewner_le(const Hermitian& x, const Hermitian& y, double tol) {
  return loewner_margin(x, y) >= -tol;
}

inline Ordering loewner_compare(const Hermitian& x, const Hermitian& y, double tol = Tolerances{}.loewner) {
  const auto d = eigh(y - x).eigenvalues;
  const bool le = d(0) >= -tol;
  const bool ge = d(d.size() - 1) <= tol;
  if (le && ge) return Ordering::EQ;
  if (le) return Ordering::LE;
  if (ge) return Ordering::GE;
  return Ordering::INCOMPARABLE;
}

/// Unitary factor U of the polar decomposition M = (M M*)^{1/2} U.
inline Matrix polar_unitary(const Matrix& m) {
  detail::require_square(m, "polar factor input");
  const auto gram = Hermitian::symmetrized(m * m.adjoint());
  const auto s = eigh(gram);
  const double scale = std::max(s.eigenvalues(s.dim() - 1), std::numeric_limits<double>::min());
  if (!(s.eigenvalues(0) > scale * 1e-28)) throw Error(Errc::singular, "polar decomposition of a singular matrix");
  return s.map([](double x) { return 1.0 / std::sqrt(x); }) * m;
}

inline double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

/// ||a - b||_F / max(1, ||b||_F).
inline double relative_distance(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace gyromean
