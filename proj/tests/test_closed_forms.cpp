#include <gtest/gtest.h>

#include "gyromean/closed_forms.hpp"
#include "gyromean/random.hpp"
#include "oracle.hpp"

using namespace gyromean;
namespace cf = gyromean::closed_form;
using ball::BallVector;

namespace {

PositiveDefinite diag(double a, double b) { return PositiveDefinite::diagonal((RealVector(2) << a, b).finished()); }
BallVector v3(double x, double y, double z) { return BallVector((ball::Vector(3) << x, y, z).finished()); }

std::pair<PositiveDefinite, PositiveDefinite> unit_det_pair(std::uint64_t trial) {
  rng::Stream s(99, rng::hash_name("cf-test"), 2, trial);
  auto a = rng::gen_random_pd(s, 2, 1e4, true);
  auto b = rng::gen_random_pd(s, 2, 1e4, true);
  return {a, b};
}

}  // namespace

TEST(LMap, ValuesAndLimit) {
  EXPECT_DOUBLE_EQ(cf::l_map(0.3, 1.0), 0.3);
  EXPECT_NEAR(cf::l_map(0.5, 4.0), (2.0 - 0.5) / (4.0 - 0.25), 1e-15);
  EXPECT_NEAR(cf::l_map(0.3, 1.0 + 1e-6), 0.3, 1e-9);
  EXPECT_NEAR(cf::l_map(0.7, 3.0), cf::l_map(0.7, 1.0 / 3.0), 1e-15);
  try {
    cf::l_map(0.5, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_positive_argument);
  }
}

TEST(Gm2, CommutingUnitDeterminantPair) {
  EXPECT_LT((cf::gm2_det1(diag(2, 0.5), diag(0.5, 2), 0.5).matrix() - Matrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(Gm2, MatchesGeneralPathAndHalfForm) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto [a, b] = unit_det_pair(trial);
    for (double t : {0.2, 0.7}) {
      const Matrix g = oracle::geo(a.matrix(), b.matrix(), t);
      EXPECT_LT(oracle::rel(cf::gm2_det1(a, b, t, cf::Branch::larger).matrix(), g), 1e-9);
      EXPECT_LT(oracle::rel(cf::gm2_det1(a, b, t, cf::Branch::smaller).matrix(), g), 1e-9);
    }
    EXPECT_LT(oracle::rel(cf::gm2_det1_half(a, b).matrix(), oracle::geo(a.matrix(), b.matrix(), 0.5)), 1e-9);
  }
}

TEST(Gm2, RejectsNonUnitDeterminant) {
  try {
    cf::gm2_det1(diag(2, 2), diag(1, 1), 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_unit_determinant);
  }
  EXPECT_THROW(cf::gm2_det1(PositiveDefinite::identity(3), PositiveDefinite::identity(3), 0.5), Error);
}

TEST(Sgm2, CommutingPair) {
  EXPECT_LT((cf::sgm2(diag(2, 0.5), diag(0.5, 2), 0.5).matrix() - Matrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(Sgm2, UnitDeterminantMatchesGeneralPath) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto [a, b] = unit_det_pair(trial);
    for (double t : {0.3, 0.5}) {
      EXPECT_LT(oracle::rel(cf::sgm2(a, b, t).matrix(), oracle::spectral(a.matrix(), b.matrix(), t)), 1e-9);
    }
  }
}

TEST(Sgm2, GeneralDeterminants) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto [a1, b1] = unit_det_pair(trial);
    const auto a = a1.scaled(2.0);
    const auto b = b1.scaled(3.0);
    for (double t : {0.25, 0.6}) {
      const Matrix s = oracle::spectral(a.matrix(), b.matrix(), t);
      EXPECT_LT(oracle::rel(cf::sgm2_general(a, b, t).matrix(), s), 1e-9);
      EXPECT_LT(oracle::rel(cf::sgm2(a, b, t).matrix(), s), 1e-9);
    }
  }
}

TEST(DetShift, Identity) {
  rng::Stream s(5);
  for (int i = 0; i < 10; ++i) EXPECT_LT(cf::det_shift_identity(s.uniform(-3, 3), rng::ginibre(s, 2, 2)), 1e-12);
  EXPECT_THROW(cf::det_shift_identity(1.0, Matrix::Identity(3, 3)), Error);
}

TEST(Qubit, MuBranchesAreReciprocalEigenvalues) {
  const auto u = v3(0.3, -0.2, 0.4);
  const auto v = v3(-0.5, 0.1, 0.2);
  const double hi = cf::qubit_mu(u, v, cf::Branch::larger);
  const double lo = cf::qubit_mu(u, v, cf::Branch::smaller);
  EXPECT_NEAR(hi * lo, 1.0, 1e-12);
  const Matrix a = 2.0 * ball::gamma(u) * ball::bloch_to_density(u).matrix();
  const Matrix b = 2.0 * ball::gamma(v) * ball::bloch_to_density(v).matrix();
  Eigen::ComplexEigenSolver<Matrix> es(a * b.inverse());
  std::vector<double> ev{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
  std::sort(ev.begin(), ev.end());
  EXPECT_NEAR(lo, ev[0], 1e-12);
  EXPECT_NEAR(hi, ev[1], 1e-12);
}

TEST(Qubit, MeansMatchGeneralPath) {
  for (int i = 0; i < 20; ++i) {
    rng::Stream s(21, rng::hash_name("qubit-test"), 3, static_cast<std::uint64_t>(i));
    const auto u = rng::random_ball_vector(s, 3);
    const auto v = rng::random_ball_vector(s, 3);
    const Matrix ru = ball::bloch_to_density(u).matrix();
    const Matrix rv = ball::bloch_to_density(v).matrix();
    for (double t : {0.1, 0.5, 0.9}) {
      const Matrix g = oracle::geo(ru, rv, t);
      EXPECT_LT(oracle::rel(cf::qubit_geo_mean(u, v, t, cf::Branch::larger).matrix(), g), 1e-9);
      EXPECT_LT(oracle::rel(cf::qubit_geo_mean(u, v, t, cf::Branch::smaller).matrix(), g), 1e-9);
      EXPECT_LT(oracle::rel(cf::qubit_spectral_mean(u, v, t).matrix(), oracle::spectral(ru, rv, t)), 1e-9);
    }
  }
}

TEST(NormProduct, HoldsOnRandomPairs) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto [a, b] = unit_det_pair(trial);
    EXPECT_GE(cf::norm_product_check(a, b), -1e-10);
    EXPECT_GE(cf::norm_product_check_scaled(a.scaled(0.3), b.scaled(7.0)), -1e-10);
  }
}

TEST(MidpointVector, SymmetricBoundHolds) {
  for (int i = 0; i < 50; ++i) {
    rng::Stream s(23, rng::hash_name("mid-test"), 3, static_cast<std::uint64_t>(i));
    const auto u = rng::random_ball_vector(s, 3);
    const auto v = rng::random_ball_vector(s, 3);
    EXPECT_GE(cf::midpoint_vector_check(u, v), -1e-10);
  }
}
