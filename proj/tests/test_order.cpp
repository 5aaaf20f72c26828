#include <gtest/gtest.h>

#include "gyromean/order.hpp"
#include "gyromean/random.hpp"

using namespace gyromean;
using namespace gyromean::order;

namespace {

PositiveDefinite diag(double a, double b) { return PositiveDefinite::diagonal((RealVector(2) << a, b).finished()); }

Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(CaseNames, RoundTrip) {
  for (auto c : kAllCases) EXPECT_EQ(parse_case(to_string(c)), c);
  try {
    parse_case("no_such_case");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_case);
  }
}

TEST(LoewnerHeinz, DiagonalPremise) {
  const auto r = check_loewner_heinz(Hermitian::diagonal((RealVector(2) << 1, 1).finished()), diag(1, 4), diag(4, 9));
  EXPECT_TRUE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
  EXPECT_NEAR(r.margin, 0.0, 1e-14);
}

TEST(LoewnerHeinz, SquareIsNotMonotone) {
  // B >= A but B^2 - A^2 is indefinite: the square is not operator monotone,
  // so only the square root direction is asserted.
  const PositiveDefinite a(m2(1, 1, 1, 1) + 1e-3 * Matrix::Identity(2, 2));
  const PositiveDefinite b(m2(2, 1, 1, 1) + 1e-3 * Matrix::Identity(2, 2));
  EXPECT_TRUE(loewner_le(a.hermitian(), b.hermitian(), 1e-12));
  const auto a2 = Hermitian::symmetrized(a.matrix() * a.matrix());
  const auto b2 = Hermitian::symmetrized(b.matrix() * b.matrix());
  EXPECT_EQ(loewner_compare(a2, b2), Ordering::INCOMPARABLE);
}

TEST(Furuta, PremiseFalseIsNotRequired) {
  const auto r = check_furuta(diag(1, 1), diag(2, 2), 2.0);
  EXPECT_FALSE(r.premise_held);
  EXPECT_FALSE(r.violated());
  EXPECT_THROW(check_furuta(diag(1, 1), diag(1, 1), 0.0), Error);
}

TEST(AndoHiai, CommutingPair) {
  const auto r = check_ando_hiai(diag(0.5, 2), diag(1.5, 0.25), 3.0);
  EXPECT_TRUE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
  EXPECT_THROW(check_ando_hiai(diag(1, 1), diag(1, 1), 0.5), Error);
}

TEST(MainSpectral, ValidatesArguments) {
  EXPECT_THROW(check_main_spectral_ah(diag(1, 1), diag(1, 1), 0.0, 1.0), Error);
  EXPECT_THROW(check_main_spectral_ah(diag(1, 1), diag(1, 1), 0.5, 0.9), Error);
}

TEST(MainSpectral, RandomPremiseImpliesConclusion) {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    rng::Stream s(77, rng::hash_name("main-test"), 3, trial);
    const auto a = rng::gen_pd_log_spectrum(s, 3, 10.0);
    const auto b = rng::gen_pd_log_spectrum(s, 3, 10.0).scaled(0.05);
    const auto r = check_main_spectral_ah(a, b, 0.5, 2.0);
    EXPECT_FALSE(r.violated()) << r.witness;
  }
}

TEST(PowerChain, HoldsUnderPremise) {
  const auto r = check_power_chain(diag(0.5, 0.8), diag(1.0, 0.9), 2.0);
  EXPECT_TRUE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
}

TEST(Equivalence, AllTrueWhenBBelowA) {
  const auto a = PositiveDefinite(m2(3, 1, 1, 2));
  const auto b = a.scaled(0.5);
  const auto st = equivalence_statements(a, b);
  for (bool v : st) EXPECT_TRUE(v);
  EXPECT_FALSE(check_equivalence_five(a, b).violated());
}

TEST(Equivalence, AllFalseWhenIncomparable) {
  const auto st = equivalence_statements(diag(2, 1), diag(1, 2));
  for (bool v : st) EXPECT_FALSE(v);
  const auto r = check_equivalence_five(diag(2, 1), diag(1, 2));
  EXPECT_FALSE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
}

TEST(Contraction, ConverseFailsForSwap) {
  const Hermitian s(m2(0, 1, 1, 0));
  const PositiveDefinite x(m2(2, 0.5, 0.5, 1));
  EXPECT_TRUE(loewner_le(s, Hermitian::identity(2), 1e-12));
  const auto sxs = congruence(x.hermitian(), s.matrix());
  EXPECT_NEAR(loewner_margin(sxs, x.hermitian()), -1.0, 1e-12);
  // The forward statement is vacuous here.
  EXPECT_FALSE(check_contraction(s, x).premise_held);
}

TEST(Contraction, ForwardDirection) {
  const Hermitian s(m2(0.5, 0.1, 0.1, -0.3));
  const PositiveDefinite x(m2(2, 0.5, 0.5, 1));
  const auto r = check_contraction(s, x);
  EXPECT_TRUE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
}

TEST(SpectralBounds, LowerBoundAlwaysAndUpperWhenBracketPositive) {
  const auto a = diag(0.1, 0.2);
  const auto b = PositiveDefinite(m2(2, 0.3, 0.3, 1));
  const auto bounds = spectral_bounds(a, b, 0.5);
  EXPECT_GT(min_eigenvalue(bounds.bracket), 0.0);
  const auto r = check_bounds_spectral(a, b, 0.5);
  EXPECT_TRUE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
}

TEST(LogSum, PremiseAndConclusion) {
  const auto r = check_log_sum_condition(diag(2, 0.25), diag(0.4, 3));
  EXPECT_TRUE(r.premise_held);
  EXPECT_TRUE(r.conclusion_held);
}

TEST(SufficientConditions, DiagonalExample) {
  const auto c = sufficient_conditions(diag(0.5, 0.5), diag(0.9, 0.9), 0.5);
  EXPECT_TRUE(c.both_below_identity);
  EXPECT_TRUE(c.log_sum_nonpositive);
  EXPECT_TRUE(c.spectral_condition);
  EXPECT_TRUE(c.mean_below_identity);
}

TEST(DLeDelta, EqualForCommuting) {
  const auto r = check_d_le_delta(diag(1, 3), diag(2, 0.5));
  EXPECT_TRUE(r.conclusion_held);
  EXPECT_NEAR(r.margin, 0.0, 1e-12);
}

TEST(Majorization, LinearAndLogScale) {
  EXPECT_TRUE(weak_majorize({2, 2}, {3, 1}, false).majorized());
  EXPECT_FALSE(weak_majorize({3, 1}, {2, 2}, false).majorized());
  EXPECT_TRUE(weak_majorize({1, 1}, {3, 1}, false).weakly_majorized);
  EXPECT_FALSE(weak_majorize({1, 1}, {3, 1}, false).totals_equal);
  EXPECT_TRUE(weak_majorize({2, 2}, {4, 1}, true).majorized());
  EXPECT_THROW(weak_majorize({1, 2}, {1}, false), Error);
  try {
    weak_majorize({1, -1}, {1, 1}, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_positive_entry);
  }
}

TEST(LogMajorization, RandomPairs) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    rng::Stream s(13, rng::hash_name("logmaj-test"), 4, trial);
    const auto a = rng::gen_random_pd(s, 4);
    const auto b = rng::gen_random_pd(s, 4);
    EXPECT_FALSE(check_logmaj_mean(a, b, 0.3).violated());
  }
}

TEST(Dispatch, ArityAndRouting) {
  CaseInputs in{{m2(2, 0, 0, 1), m2(1, 0, 0, 1)}, {}, {}};
  EXPECT_TRUE(check(InequalityCase::equivalence_five, in).premise_held);
  EXPECT_THROW(check(InequalityCase::furuta, in), Error);
  in.scalars = {2.0};
  EXPECT_TRUE(check(InequalityCase::furuta, in).premise_held);
}
