#pragma once

// Reference implementations for tests, built on Eigen's own Hermitian solver
// rather than the library's Jacobi routine.

#include <Eigen/Eigenvalues>
#include <fstream>
#include <json.hpp>
#include <string>

#include "gyromean/matrix_io.hpp"
#include "gyromean/spectral.hpp"

namespace oracle {

using gyromean::Matrix;
using gyromean::RealVector;

inline Matrix fn(const Matrix& a, double (*f)(double, double), double p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  RealVector d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(d(i), p);
  return es.eigenvectors() * d.cast<gyromean::Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

inline Matrix pow(const Matrix& a, double p) {
  return fn(a, [](double x, double q) { return std::pow(x, q); }, p);
}
inline Matrix log(const Matrix& a) {
  return fn(a, [](double x, double) { return std::log(x); }, 0.0);
}
inline RealVector eigenvalues(const Matrix& a) { return Eigen::SelfAdjointEigenSolver<Matrix>(a).eigenvalues(); }

inline Matrix geo(const Matrix& a, const Matrix& b, double t) {
  const Matrix h = pow(a, 0.5);
  const Matrix hi = pow(a, -0.5);
  return h * pow(hi * b * hi, t) * h;
}

inline Matrix spectral(const Matrix& a, const Matrix& b, double t) {
  const Matrix g = pow(geo(a.inverse(), b, 0.5), t);
  return g * a * g;
}

inline RealVector relative_log_spectrum(const Matrix& a, const Matrix& b) {
  const Matrix hi = pow(a, -0.5);
  return eigenvalues(hi * b * hi).array().log();
}

inline RealVector semimetric_log_spectrum(const Matrix& a, const Matrix& b) {
  return 2.0 * eigenvalues(geo(a.inverse(), b, 0.5)).array().log();
}

inline nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(GYROMEAN_DATA_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

inline Matrix matrix(const nlohmann::json& j) { return gyromean::io::matrix_from_json(j); }

inline double rel(const Matrix& a, const Matrix& b) { return gyromean::relative_distance(a, b); }

}  // namespace oracle
