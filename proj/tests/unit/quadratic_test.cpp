#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <random>

#include "levy/levy.hpp"
#include "support/oracles.hpp"

namespace levy {
namespace {

using test::log_phi;

TEST(LevyQuadratic, SingleLetterPeriods) {
  for (Letter a = 1; a <= 20; ++a) {
    const auto r = levy_quadratic(QuadPeriod(Word{a}));
    EXPECT_NEAR(r.value, log_phi(static_cast<double>(a)), 1e-15);
    EXPECT_EQ(r.method, Method::quadratic_exact);
    EXPECT_FALSE(r.error_bound.has_value());
  }
  EXPECT_NEAR(levy_quadratic(QuadPeriod(Word{1})).value, 0.4812118250596034, 1e-15);
}

TEST(LevyQuadratic, TwoLetterPeriod) {
  for (auto [a, b] : {std::pair<Letter, Letter>{1, 2}, {1, 3}, {2, 3}, {3, 7}}) {
    const double ab = static_cast<double>(a * b);
    const double want = std::log((std::sqrt(ab) + std::sqrt(ab + 4.0)) / 2.0);
    EXPECT_NEAR(levy_quadratic(QuadPeriod(Word{a, b})).value, want, 1e-15);
  }
}

TEST(LevyQuadratic, PreperiodDoesNotMatter) {
  const double base = levy_quadratic(QuadPeriod(Word{1, 2})).value;
  EXPECT_NEAR(levy_quadratic(QuadPeriod(Word{1, 2}, Word{2})).value, base, 1e-12);
  EXPECT_NEAR(levy_quadratic(QuadPeriod(Word{1, 2}, Word{2, 2, 1})).value, base, 1e-12);
  EXPECT_THROW(QuadPeriod(Word{}), Error);
}

TEST(LevyQuadratic, HugeTraceAgreesWithHighPrecision) {
  using test::Dec100;
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 50; ++iter) {
    const Word w = test::random_word(rng, 1, 200, 9);
    const BigInt t = trace(w);
    const Dec100 td(t.get_str());
    const Dec100 disc = td * td + (w.size() % 2 == 0 ? -4 : 4);
    const Dec100 want =
        boost::multiprecision::log((td + boost::multiprecision::sqrt(disc)) / 2) / w.size();
    EXPECT_NEAR(levy_quadratic(QuadPeriod(w)).value, want.convert_to<double>(), 1e-15);
  }
}

TEST(TracePoly, LucasNumbersAndIdentity) {
  const std::vector<double> lucas = {2, 1, 3, 4, 7, 11, 18, 29, 47};
  for (std::size_t n = 0; n < lucas.size(); ++n) EXPECT_EQ(trace_poly(n, 1.0), lucas[n]);
  EXPECT_EQ(trace_poly(0, 3.7), 2.0);
  EXPECT_EQ(trace_poly(5, 1.0), trace_poly(3, 1.0) * trace_poly(2, 1.0) - trace_poly(1, 1.0));
  EXPECT_THROW(trace_poly(3, 0.0), Error);
  EXPECT_THROW(trace_poly(3, -1.0), Error);
  EXPECT_THROW(trace_poly_closed(3, 0.0), Error);
}

TEST(TracePoly, RecursionMatchesClosedForm) {
  for (std::size_t n = 0; n <= 200; ++n) {
    for (double x = 1.0; x <= 5.0; x += 0.25) {
      const double r = trace_poly(n, x);
      EXPECT_NEAR(trace_poly_closed(n, x), r, 1e-9 * std::fabs(r)) << n << " " << x;
    }
  }
}

TEST(TracePoly, PowerTraceIdentityExact) {
  // Tr(X^{q+q'}) = Tr(X^q) Tr(X^{q'}) - (-1)^{q'} Tr(X^{q-q'}).
  for (Letter x = 1; x <= 5; ++x) {
    const Mat2 m = Mat2::partial_quotient(x);
    std::vector<BigInt> tr;
    for (std::size_t n = 0; n <= 60; ++n) tr.push_back(pow(m, n).trace());
    for (std::size_t q = 1; q <= 30; ++q) {
      for (std::size_t qp = 1; qp <= q; ++qp) {
        const BigInt rhs = tr[q] * tr[qp] - (qp % 2 == 0 ? 1 : -1) * tr[q - qp];
        EXPECT_EQ(tr[q + qp], rhs) << x << " " << q << " " << qp;
      }
    }
  }
}

TEST(TracePoly, GapInequality) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(1.0, 5.0);
  std::uniform_int_distribution<std::size_t> qd(1, 25);
  for (int iter = 0; iter < 200; ++iter) {
    double x = u(rng), y = u(rng);
    if (x < y) std::swap(x, y);
    if (x - y < 1e-3) x = y + 1e-3;
    std::size_t q = qd(rng), qp = qd(rng);
    if (q < qp) std::swap(q, qp);
    const long double lhs = (static_cast<long double>(trace_poly(q + qp, x)) - trace_poly(q + qp, y)) /
                            (static_cast<long double>(trace_poly(q, x)) - trace_poly(q, y));
    EXPECT_LT(lhs, trace_poly(q, x) + trace_poly(qp, y) + 1.0) << x << " " << y << " " << q;
  }
}

TEST(MuMean, Examples) {
  const MuMean single = mu_mean(Word{3});
  EXPECT_NEAR(single.value, 3.0, 1e-13);
  EXPECT_EQ(*single.root_found, 3.0);
  const MuMean pair = mu_mean(Word{1, 2});
  EXPECT_NEAR(pair.value, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(*pair.root_found, std::sqrt(2.0), 1e-12);
  EXPECT_THROW(mu_mean(Word{}), Error);
  EXPECT_FALSE(mu_mean(Word(std::vector<Letter>(31, 2))).root_found.has_value());
}

TEST(MuMean, RoutesAgreeOnRandomPeriods) {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 100; ++iter) {
    const Word w = test::random_word(rng, 1, 12, 9);
    const MuMean mu = mu_mean(w);
    ASSERT_TRUE(mu.root_found.has_value());
    EXPECT_NEAR(*mu.root_found, mu.value, 1e-12) << format_word(w);
    EXPECT_NEAR(std::log(golden_map(mu.value)), levy_quadratic(QuadPeriod(w)).value, 1e-12);
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    EXPECT_GE(mu.value, static_cast<double>(*lo) - 1e-12);
    EXPECT_LE(mu.value, static_cast<double>(*hi) + 1e-12);
  }
}

TEST(Method, Names) {
  EXPECT_EQ(to_string(Method::quadratic_exact), "quadratic-exact");
  EXPECT_EQ(to_string(Method::irrational_slope_bounded), "irrational-slope-bounded");
  EXPECT_EQ(to_string(Method::empirical_birkhoff), "empirical-birkhoff");
}

}  // namespace
}  // namespace levy
