#include <gtest/gtest.h>

#include <cstdio>
#include <set>

#include "gyromean/matrix_io.hpp"
#include "gyromean/random.hpp"
#include "oracle.hpp"

using namespace gyromean;

TEST(Stream, KnownSplitMix64Output) {
  // SplitMix64 seeded with 0: first output of the reference generator.
  EXPECT_EQ(rng::mix64(0x9e3779b97f4a7c15ULL), 0xe220a8397b1dcdafULL);
}

TEST(Stream, DeterministicAndKeyed) {
  rng::Stream a(42, rng::hash_name("p"), 3, 7);
  rng::Stream b(42, rng::hash_name("p"), 3, 7);
  rng::Stream c(42, rng::hash_name("p"), 3, 8);
  rng::Stream d(42, rng::hash_name("q"), 3, 7);
  const auto x = a.next_u64();
  EXPECT_EQ(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
  EXPECT_NE(x, d.next_u64());
}

TEST(Stream, UniformAndNormalMoments) {
  rng::Stream s(1);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double z = s.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Generator, PositiveDefiniteWithinCap) {
  for (Index n : {1, 2, 5, 8}) {
    rng::Stream s(4, 0, static_cast<std::uint64_t>(n), 0);
    const auto a = rng::gen_random_pd(s, n, 1e4);
    EXPECT_GT(a.min_eig(), 0.0);
    EXPECT_LE(rng::condition_number(a), 1e4);
    const auto u = rng::gen_random_pd(s, n, 1e4, true);
    EXPECT_NEAR(u.determinant(), 1.0, 1e-9);
  }
}

TEST(Generator, BitIdenticalForSameStream) {
  rng::Stream a(42, rng::hash_name("x"), 4, 0);
  rng::Stream b(42, rng::hash_name("x"), 4, 0);
  EXPECT_EQ(rng::gen_random_pd(a, 4).matrix(), rng::gen_random_pd(b, 4).matrix());
}

TEST(Generator, RejectsBadArgumentsAndUnreachableCap) {
  rng::Stream s(1);
  EXPECT_THROW(rng::gen_random_pd(s, 0), Error);
  EXPECT_THROW(rng::gen_random_pd(s, 2, 1.0), Error);
  try {
    rng::gen_random_pd(s, 8, 1.0001);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::generation_failure);
  }
}

TEST(Generator, UnitaryAndLogSpectrum) {
  rng::Stream s(8);
  const Matrix u = rng::random_unitary(s, 5);
  EXPECT_LT((u * u.adjoint() - Matrix::Identity(5, 5)).norm(), 1e-12);
  const auto a = rng::gen_pd_log_spectrum(s, 5, 100.0);
  EXPECT_LE(rng::condition_number(a), 100.0 * (1 + 1e-12));
  const auto k = rng::random_contraction(s, 4);
  EXPECT_LT(k.max_eig(), 0.95 + 1e-12);
  EXPECT_LT(rng::random_ball_vector(s, 3).norm(), 0.95);
}

TEST(MatrixIo, ParsesRealAndComplex) {
  const Matrix r = io::parse_matrix(R"({"dim": 2, "complex": false, "rows": [[1, 2], [3, 4]]})");
  EXPECT_EQ(r(1, 0), Complex(3, 0));
  const Matrix c = io::parse_matrix(R"({"dim": 1, "rows": [[[1.5, -2]]]})");
  EXPECT_EQ(c(0, 0), Complex(1.5, -2));
}

TEST(MatrixIo, RoundTrip) {
  rng::Stream s(3);
  const Matrix m = rng::ginibre(s, 3, 3);
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(m)), m);
}

TEST(MatrixIo, Errors) {
  for (const char* bad : {"not json", R"({"dim": 2, "rows": [[[1,0]]]})", R"({"dim": 0, "rows": []})",
                          R"({"dim": 1, "complex": true, "rows": [[1]]})", R"([1, 2])", R"({"rows": [[1]]})"}) {
    try {
      io::parse_matrix(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::parse_error) << bad;
    }
  }
  EXPECT_THROW(io::read_matrix_file("/nonexistent/file.json"), Error);
}

TEST(MatrixIo, DataFixturesLoad) {
  EXPECT_NO_THROW(PositiveDefinite(io::read_matrix_file(std::string(GYROMEAN_DATA_DIR) + "/a_diag.json")));
  EXPECT_THROW(PositiveDefinite(io::read_matrix_file(std::string(GYROMEAN_DATA_DIR) + "/not_pd.json")), Error);
}
