#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "levy/levy.hpp"
#include "support/oracles.hpp"

namespace levy {
namespace {

using test::log_phi;

const Alphabet kAB(1, 2);

LetterSource constant_source(Letter a) {
  return [a]() -> std::optional<Letter> { return a; };
}

TEST(Empirical, ConstantLetterLogQ) {
  const auto r = levy_empirical(constant_source(1), 100000, Estimator::logq);
  EXPECT_NEAR(r.value, log_phi(1.0), 1e-4);
  EXPECT_EQ(r.method, Method::empirical_logq);
  ASSERT_TRUE(r.heuristic_error.has_value());
  EXPECT_FALSE(r.error_bound.has_value());
}

TEST(Empirical, ConstantLetterBirkhoff) {
  const auto r = levy_empirical(constant_source(3), 5000, Estimator::birkhoff);
  EXPECT_NEAR(r.value, log_phi(3.0), 1e-12);
  EXPECT_EQ(r.method, Method::empirical_birkhoff);
}

TEST(Empirical, PeriodicDifferenceForm) {
  const double want = levy_quadratic(QuadPeriod(Word{1, 2})).value;
  EXPECT_NEAR(levy_empirical_periodic(Word{1, 2}, 1000).value, want, 1e-10);
  EXPECT_NEAR(levy_empirical_periodic(Word{1, 2}, 1000, Word{7, 3}).value, want, 1e-10);
  EXPECT_NEAR(levy_empirical_periodic(Word{1}, 1000).value, log_phi(1.0), 1e-10);
}

TEST(Empirical, PeriodicRandomWordsMatchQuadratic) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 30; ++iter) {
    const Word period = test::random_word(rng, 1, 8, 6);
    const Word pre = test::random_word(rng, 0, 4, 6);
    EXPECT_NEAR(levy_empirical_periodic(period, 1000, pre).value,
                levy_quadratic(QuadPeriod(period, pre)).value, 1e-10)
        << format_word(period);
  }
}

TEST(Empirical, GoldenSturmianEstimatorsAgree) {
  const SlopeCF golden = SlopeCF::golden();
  const std::size_t n = 100000;
  const Word letters = sturmian_prefix(golden, kAB, n + kDefaultTailDepth);
  const double logq = levy_empirical(word_source(letters), n, Estimator::logq).value;
  const double birk = levy_empirical(word_source(letters), n, Estimator::birkhoff).value;
  EXPECT_NEAR(logq, birk, 1e-3);
  const auto exact = f_irrational(golden, kAB, 25);
  ASSERT_LT(*exact.error_bound, 1e-4);
  EXPECT_NEAR(logq, exact.value, 1e-3);
  EXPECT_NEAR(birk, exact.value, 1e-3);
}

TEST(Empirical, TruncatedStream) {
  for (Estimator e : {Estimator::logq, Estimator::birkhoff}) {
    try {
      levy_empirical(word_source(Word{1, 2, 1}), 10, e);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::truncated_stream);
    }
  }
  // Birkhoff needs tail_depth - 1 letters past n.
  EXPECT_THROW(levy_empirical(word_source(Word(std::vector<Letter>(10, 1))), 10,
                              Estimator::birkhoff, 4),
               Error);
  EXPECT_NO_THROW(levy_empirical(word_source(Word(std::vector<Letter>(13, 1))), 10,
                                 Estimator::birkhoff, 4));
}

TEST(Xi, OscillatesBetweenPredictedPoints) {
  const auto osc = xi_oscillation(kAB, 20);
  ASSERT_EQ(osc.samples.size(), 20u);
  const auto& s = osc.samples;
  EXPECT_GT(std::fabs(s[19].u - s[18].u), 1e-2);
  EXPECT_LT(std::fabs(s[19].u - s[17].u), 1e-2);
  EXPECT_LT(std::fabs(s[18].u - s[16].u), 1e-2);
  const double la = log_phi(1.0), lb = log_phi(2.0);
  EXPECT_NEAR(osc.predicted_even, (2 * la + lb) / 3, 1e-15);
  EXPECT_NEAR(osc.predicted_odd, (la + 2 * lb) / 3, 1e-15);
  EXPECT_NEAR(osc.predicted_gap(), (lb - la) / 3, 1e-15);
  EXPECT_NEAR(osc.gap(), osc.predicted_gap(), 1e-2);
  EXPECT_TRUE(osc.oscillates());
  for (unsigned m = 1; m <= 20; ++m) {
    EXPECT_EQ(s[m - 1].m, m);
  }
  EXPECT_THROW(xi_oscillation(kAB, 3), Error);
}

TEST(Xi, SamplesMatchDirectLogQ) {
  const auto osc = xi_oscillation(Alphabet(2, 5), 10);
  const Word w = xi_word(Alphabet(2, 5), 1u << 10);
  for (unsigned m : {4u, 7u, 10u}) {
    const std::size_t n = std::size_t{1} << m;
    EXPECT_NEAR(osc.samples[m - 1].u, log_big(continuant(w.prefix(n))) / n, 1e-12);
  }
}

TEST(Morphic, IdentityReducesToSturmianEstimate) {
  const SlopeCF golden = SlopeCF::golden();
  const std::size_t n = 20000;
  const double plain =
      levy_empirical(word_source(sturmian_prefix(golden, kAB, n)), n, Estimator::logq).value;
  EXPECT_NEAR(morphic_levy(Morphism::identity(kAB), golden, n).value, plain, 1e-15);
}

TEST(Morphic, SelfConsistentAndSlopeOnly) {
  const Morphism phi(kAB, Word{1, 2}, Word{3});
  const SlopeCF golden = SlopeCF::golden();
  const double e1 = morphic_levy(phi, golden, 10000).value;
  const double e2 = morphic_levy(phi, golden, 20000).value;
  EXPECT_LT(std::fabs(e1 - e2), 1e-2);
  const double e_theta = morphic_levy(phi, golden, 10000, Intercept::slope).value;
  EXPECT_LT(std::fabs(e1 - e_theta), 1e-2);
}

}  // namespace
}  // namespace levy
