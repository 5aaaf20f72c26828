#include <gtest/gtest.h>

#include "gyromean/gyro_cone.hpp"
#include "gyromean/gyro_density.hpp"
#include "gyromean/random.hpp"
#include "oracle.hpp"

using namespace gyromean;

namespace {

std::vector<gyro::AxiomSample<PositiveDefinite>> cone_samples(Index n, int count) {
  std::vector<gyro::AxiomSample<PositiveDefinite>> out;
  for (int i = 0; i < count; ++i) {
    rng::Stream s(31, rng::hash_name("cone-test"), static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
    auto a = rng::gen_random_pd(s, n, 1e3);
    auto b = rng::gen_random_pd(s, n, 1e3);
    auto c = rng::gen_random_pd(s, n, 1e3);
    out.push_back({a, b, c, s.uniform(-1, 1), s.uniform(-1, 1)});
  }
  return out;
}

/// Commutative addition on the cone with the trivial gyration; fails
/// gyroassociativity on non-commuting inputs.
struct BrokenModel {
  using element_type = PositiveDefinite;
  PositiveDefinite identity_like(const PositiveDefinite& a) const { return PositiveDefinite::identity(a.dim()); }
  PositiveDefinite add(const PositiveDefinite& a, const PositiveDefinite& b) const { return cone::add(a, b); }
  PositiveDefinite neg(const PositiveDefinite& a) const { return inverse(a); }
  PositiveDefinite scalar(double t, const PositiveDefinite& a) const { return powm(a, t); }
  PositiveDefinite gyr(const PositiveDefinite&, const PositiveDefinite&, const PositiveDefinite& x) const { return x; }
  double residual(const PositiveDefinite& x, const PositiveDefinite& y) const {
    return relative_distance(x.matrix(), y.matrix());
  }
};

}  // namespace

TEST(Cone, AdditionFormula) {
  rng::Stream s(1);
  const auto a = rng::gen_random_pd(s, 3);
  const auto b = rng::gen_random_pd(s, 3);
  const Matrix h = oracle::pow(a.matrix(), 0.5);
  EXPECT_LT(oracle::rel(cone::add(a, b).matrix(), h * b.matrix() * h), 1e-12);
  EXPECT_LT(oracle::rel(cone::scalar(0.5, a).matrix(), h), 1e-12);
  EXPECT_LT(oracle::rel(cone::neg(a).matrix(), a.matrix().inverse()), 1e-12);
}

TEST(Cone, AxiomSuitePasses) {
  for (Index n : {2, 3, 4}) {
    const auto rep = gyro::axiom_suite(cone::Model{}, cone_samples(n, 15));
    EXPECT_TRUE(rep.passed()) << "n=" << n << " worst=" << rep.worst();
    EXPECT_EQ(rep.residuals.size(), gyro::kAxiomNames.size());
  }
}

TEST(Cone, SuiteDetectsMissingGyration) {
  const auto rep = gyro::axiom_suite(BrokenModel{}, cone_samples(3, 5));
  EXPECT_FALSE(rep.passed());
  EXPECT_GT(rep.at("G3_gyroassociativity"), 1e-4);
}

TEST(Cone, GyrationIsUnitaryAndTrivialOnCommutingPairs) {
  rng::Stream s(2);
  const auto a = rng::gen_random_pd(s, 4);
  const auto b = rng::gen_random_pd(s, 4);
  const Matrix u = cone::gyration_unitary(a, b);
  EXPECT_LT((u * u.adjoint() - Matrix::Identity(4, 4)).norm(), 1e-12);
  const auto d1 = PositiveDefinite::diagonal((RealVector(2) << 2, 3).finished());
  const auto d2 = PositiveDefinite::diagonal((RealVector(2) << 5, 0.5).finished());
  const auto x = rng::gen_random_pd(s, 2);
  EXPECT_LT(oracle::rel(cone::gyration(d1, d2, x).matrix(), x.matrix()), 1e-12);
}

TEST(Cone, GyrolinesAreTheMeans) {
  rng::Stream s(4);
  const auto a = rng::gen_random_pd(s, 3);
  const auto b = rng::gen_random_pd(s, 3);
  for (double t : {0.2, 0.5, 0.85}) {
    EXPECT_LT(oracle::rel(cone::gyroline(t, a, b).matrix(), oracle::geo(a.matrix(), b.matrix(), t)), 1e-9);
    EXPECT_LT(oracle::rel(cone::cogyroline(t, a, b).matrix(), oracle::spectral(a.matrix(), b.matrix(), t)), 1e-9);
    EXPECT_LT(oracle::rel(gyro::gyroline(cone::Model{}, t, a, b).matrix(), cone::gyroline(t, a, b).matrix()), 1e-9);
  }
}

TEST(Cone, InnerProductInvariance) {
  rng::Stream s(6);
  const auto a = rng::gen_random_pd(s, 3);
  const auto b = rng::gen_random_pd(s, 3);
  const auto x = rng::gen_random_pd(s, 3);
  const auto y = rng::gen_random_pd(s, 3);
  const Complex before = cone::inner_product(x.matrix(), y.matrix());
  const Complex after = cone::inner_product(cone::gyration(a, b, x).matrix(), cone::gyration(a, b, y).matrix());
  EXPECT_LT(std::abs(after - before) / std::abs(before), 1e-12);
}

TEST(Density, TraceValidation) {
  try {
    density::DensityMatrix(PositiveDefinite::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_density);
  }
  EXPECT_NEAR(density::DensityMatrix::maximally_mixed(4).pd().trace(), 1.0, 1e-15);
}

TEST(Density, AxiomSuitePasses) {
  std::vector<gyro::AxiomSample<density::DensityMatrix>> samples;
  for (const auto& c : cone_samples(3, 15)) {
    samples.push_back({density::DensityMatrix::normalized(c.a), density::DensityMatrix::normalized(c.b),
                       density::DensityMatrix::normalized(c.c), c.s, c.t});
  }
  const auto rep = gyro::axiom_suite(density::Model{}, samples);
  EXPECT_TRUE(rep.passed()) << rep.worst();
}

TEST(Density, GyrolinesAreNormalizedMeans) {
  rng::Stream s(8);
  const auto rho = density::DensityMatrix::normalized(rng::gen_random_pd(s, 3));
  const auto sigma = density::DensityMatrix::normalized(rng::gen_random_pd(s, 3));
  const density::Model m;
  for (double t : {0.3, 0.7}) {
    EXPECT_LT(oracle::rel(gyro::gyroline(m, t, rho, sigma).matrix(), density::gyroline(t, rho, sigma).matrix()), 1e-9);
    EXPECT_LT(oracle::rel(gyro::cogyroline(m, t, rho, sigma).matrix(), density::cogyroline(t, rho, sigma).matrix()),
              1e-9);
    EXPECT_NEAR(density::cogyroline(t, rho, sigma).pd().trace(), 1.0, 1e-12);
  }
}
