#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "levy/levy.hpp"
#include "support/oracles.hpp"

namespace levy {
namespace {

const Alphabet kAB(1, 2);

Word letters(const std::string& s, const Alphabet& alphabet = kAB) {
  std::vector<Letter> out;
  for (char c : s) out.push_back(c == 'a' ? alphabet.a : alphabet.b);
  return Word(std::move(out));
}

TEST(Alphabet, Validates) {
  EXPECT_THROW(Alphabet(2, 2), Error);
  EXPECT_THROW(Alphabet(3, 2), Error);
  EXPECT_THROW(Alphabet(0, 2), Error);
  EXPECT_DOUBLE_EQ(Alphabet(2, 5).c(), 2.5);
}

TEST(Christoffel, SmallTable) {
  EXPECT_EQ(christoffel(Fraction(0, 1), kAB), letters("a"));
  EXPECT_EQ(christoffel(Fraction(1, 1), kAB), letters("b"));
  EXPECT_EQ(christoffel(Fraction(1, 2), kAB), letters("ab"));
  EXPECT_EQ(christoffel(Fraction(1, 3), kAB), letters("aab"));
  EXPECT_EQ(christoffel(Fraction(2, 5), kAB), letters("aabab"));
  EXPECT_EQ(christoffel(Fraction(1, 4), kAB), letters("aaab"));
  EXPECT_EQ(christoffel(Fraction(2, 7), kAB), letters("aaabaab"));
}

TEST(Christoffel, StandardFactorizationExamples) {
  const auto f12 = standard_factorization(Fraction(1, 2), kAB);
  EXPECT_EQ(f12.first, letters("a"));
  EXPECT_EQ(f12.second, letters("b"));
  const auto f13 = standard_factorization(Fraction(1, 3), kAB);
  EXPECT_EQ(f13.first, letters("a"));
  EXPECT_EQ(f13.second, letters("ab"));
  const auto f25 = standard_factorization(Fraction(2, 5), kAB);
  EXPECT_EQ(f25.first, letters("aab"));
  EXPECT_EQ(f25.second, letters("ab"));
  try {
    standard_factorization(Fraction(0, 1), kAB);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_factorizable);
  }
}

TEST(Christoffel, FactorizationAndMatrixAgreeForAllSmallSlopes) {
  for (const Alphabet& alphabet : {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 5)}) {
    for (const Fraction& pq : farey_sequence(40)) {
      const Word w = christoffel(pq, alphabet);
      ASSERT_EQ(w.size(), static_cast<std::size_t>(pq.q()));
      EXPECT_EQ(w.count(alphabet.b), static_cast<std::size_t>(pq.p()));
      EXPECT_EQ(christoffel_matrix(pq, alphabet), cf_matrix(w)) << pq.to_string();
      if (pq.q() >= 2) {
        const auto [u, v] = standard_factorization(pq, alphabet);
        EXPECT_EQ(u + v, w) << pq.to_string();
      }
    }
  }
}

TEST(Christoffel, MechanicalPrefixAndParentSlopes) {
  for (const Fraction& pq : farey_sequence(60)) {
    const auto q = static_cast<std::size_t>(pq.q());
    EXPECT_EQ(christoffel(pq, kAB), mechanical_lower(pq, Fraction(0, 1), q, kAB)) << pq.to_string();
    if (q < 2) continue;
    const auto [lo, hi] = stern_brocot_parents(pq);
    EXPECT_LT(lo, pq);
    EXPECT_LT(pq, hi);
    EXPECT_EQ(std::abs(lo.cross(hi)), 1);
    const auto [u, v] = standard_factorization(pq, kAB);
    EXPECT_EQ(u, christoffel(lo, kAB));
    EXPECT_EQ(v, christoffel(hi, kAB));
  }
}

TEST(Christoffel, MatrixForDeepSlopes) {
  for (const Fraction& pq : {Fraction(1, 500), Fraction(499, 500), Fraction(377, 987),
                             Fraction(1000, 1001)}) {
    EXPECT_EQ(christoffel_matrix(pq, kAB), cf_matrix(christoffel(pq, kAB))) << pq.to_string();
  }
}

TEST(Mechanical, RationalMatchesIntegerFloors) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const Fraction theta = test::random_fraction(rng, 200);
    const Fraction rho = test::random_fraction(rng, 50);
    const std::size_t n = 1 + rng() % 300;
    EXPECT_EQ(mechanical_lower(theta, rho, n, kAB),
              test::rational_mechanical_oracle(theta, rho, n, kAB, false));
    EXPECT_EQ(mechanical_upper(theta, rho, n, kAB),
              test::rational_mechanical_oracle(theta, rho, n, kAB, true));
  }
  EXPECT_THROW(mechanical_lower(Fraction(1, 2), Fraction(1, 1), 5, kAB), Error);
}

TEST(Mechanical, IrrationalMatchesDecimalFloors) {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 60; ++iter) {
    const SlopeCF slope = iter == 0 ? SlopeCF::golden() : test::random_slope(rng);
    const Fraction rho = iter % 3 == 0 ? Fraction(0, 1) : test::random_fraction(rng, 30);
    const std::size_t n = 1 + rng() % 1500;
    const test::Dec100 theta = test::slope_value(slope);
    const test::Dec100 r = test::Dec100(rho.p()) / rho.q();
    EXPECT_EQ(mechanical_lower(slope, rho, n, kAB),
              test::mechanical_oracle(theta, r, n, kAB, false));
    EXPECT_EQ(mechanical_upper(slope, rho, n, kAB),
              test::mechanical_oracle(theta, r, n, kAB, true));
  }
}

TEST(Mechanical, FiniteSlopeAgreesWithFractionRoute) {
  const SlopeCF s({1, 2, 3});
  const Fraction f = s.convergent(3);
  EXPECT_EQ(mechanical_lower(s, Fraction(1, 3), 100, kAB),
            mechanical_lower(f, Fraction(1, 3), 100, kAB));
  EXPECT_EQ(mechanical_upper(s, Fraction(0, 1), 100, kAB),
            mechanical_upper(f, Fraction(0, 1), 100, kAB));
}

TEST(Mechanical, UnresolvableBoundaryReportsIndex) {
  // 3 theta + rho lies within 4e-8 of 2 for the golden slope, closer than any
  // of the five refinements can separate.
  const Fraction rho(427051, 500000);
  try {
    mechanical_lower(SlopeCF::golden(), rho, 3, kAB);
    FAIL();
  } catch (const PrecisionError& e) {
    EXPECT_EQ(e.index(), 3u);
    EXPECT_EQ(e.code(), ErrorCode::precision);
  }
}

TEST(StandardWords, GoldenSequence) {
  const auto m = standard_words(SlopeCF::golden(), kAB, 5);
  ASSERT_EQ(m.size(), 7u);
  EXPECT_EQ(m[0], letters("b"));
  EXPECT_EQ(m[1], letters("a"));
  EXPECT_EQ(m[2], letters("ab"));
  EXPECT_EQ(m[3], letters("aba"));
  EXPECT_EQ(m[4], letters("abaab"));
}

TEST(StandardWords, LengthsAreConvergentDenominators) {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 50; ++iter) {
    const SlopeCF s = test::random_slope(rng);
    const auto m = standard_words(s, kAB, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      EXPECT_EQ(m[n + 1].size(), static_cast<std::size_t>(s.convergent(n).q()));
    }
  }
  try {
    standard_words(SlopeCF({1, 1}), kAB, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::insufficient_digits);
  }
}

TEST(StandardWords, CommuteUpToLastTwoLetters) {
  std::mt19937_64 rng(36);
  for (int iter = 0; iter < 6; ++iter) {
    const SlopeCF s = iter == 0 ? SlopeCF::golden() : test::random_slope(rng, 2);
    const auto m = standard_words(s, kAB, 15);
    for (std::size_t k = 1; k <= 15; ++k) {
      const Word& mk = m[k + 1];
      const Word& mk1 = m[k];
      EXPECT_EQ((mk + mk1).drop_back(2), (mk1 + mk).drop_back(2)) << k;
    }
  }
}

TEST(StandardWords, PalindromeBody) {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 5; ++iter) {
    const SlopeCF s = test::random_slope(rng, 3);
    const auto m = standard_words(s, kAB, 12);
    for (std::size_t k = 1; k <= 12; ++k) {
      const Word& mk = m[k + 1];
      const Word tail = mk.suffix(2);
      ASSERT_TRUE(tail == letters("ab") || tail == letters("ba")) << k;
      const Word body = mk.drop_back(2);
      EXPECT_TRUE(std::equal(body.begin(), body.end(), std::make_reverse_iterator(body.end()))) << k;
      EXPECT_EQ(christoffel(s.convergent(k), kAB), Word{kAB.a} + body + Word{kAB.b}) << k;
    }
  }
}

TEST(StandardWords, ShortFactorsLiveInTheSquare) {
  std::mt19937_64 rng(38);
  for (int iter = 0; iter < 6; ++iter) {
    const SlopeCF s = iter == 0 ? SlopeCF::golden() : test::random_slope(rng, 3);
    const auto m = standard_words(s, kAB, 6);
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto len = static_cast<std::size_t>(s.convergent(k).q()) - 1;
      if (len == 0) continue;
      const Word host = (m[k + 1] + m[k + 1]).drop_back(2);
      const auto all = factor_set(sturmian_prefix(s, kAB, sturmian_factor_window(s, len)), len);
      for (const Word& f : all) EXPECT_TRUE(host.find(f).has_value()) << k << " " << format_word(f);
    }
  }
}

TEST(SturmianFactors, IndependentOfIntercept) {
  std::mt19937_64 rng(39);
  for (int iter = 0; iter < 4; ++iter) {
    const SlopeCF s = iter == 0 ? SlopeCF::golden() : test::random_slope(rng, 3);
    const std::size_t n_max = 40;
    const std::size_t len = 4 * sturmian_factor_window(s, n_max);
    const Word zero = sturmian_prefix(s, kAB, len);
    const Word theta = standard_prefix(s, kAB, len);
    const Word third = mechanical_lower(s, Fraction(1, 3), std::min<std::size_t>(len, 3000), kAB);
    for (std::size_t n = 1; n <= n_max; ++n) {
      EXPECT_EQ(factor_set(zero, n), factor_set(theta, n)) << n;
      if (n <= 20) {
        EXPECT_EQ(factor_set(zero, n), factor_set(third, n)) << n;
      }
    }
  }
}

TEST(SturmianPrefix, GoldenExample) {
  // First convergent with q > 5 is 3/8, w_{3/8} = aabaabab.
  EXPECT_EQ(christoffel(Fraction(3, 8), kAB), letters("aabaabab"));
  EXPECT_EQ(sturmian_prefix(SlopeCF::golden(), kAB, 4), letters("aaba"));
  EXPECT_THROW(sturmian_prefix(SlopeCF::golden(), kAB, 0), Error);
}

TEST(SturmianPrefix, MatchesMechanicalWordAndStandardPrefix) {
  std::mt19937_64 rng(34);
  for (int iter = 0; iter < 40; ++iter) {
    const SlopeCF s = iter == 0 ? SlopeCF::golden() : test::random_slope(rng);
    const std::size_t n = 2 + rng() % 2000;
    const Word prefix = sturmian_prefix(s, kAB, n);
    EXPECT_EQ(prefix, mechanical_lower(s, Fraction(0, 1), n, kAB));
    // s_{theta,0} = a s_{theta,theta}.
    EXPECT_EQ(prefix, Word{kAB.a} + standard_prefix(s, kAB, n - 1));
  }
}

TEST(SturmianPrefix, ExhaustedDigits) {
  try {
    sturmian_prefix(SlopeCF({1}), kAB, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::insufficient_digits);
  }
}

TEST(Xi, DoublingBlocks) {
  const Word w = xi_word(kAB, 16);
  EXPECT_EQ(w, letters("abaabbbbaaaaaaaa"));
  auto src = xi_source(kAB);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(*src(), w[i]);
  EXPECT_EQ(*src(), kAB.b);  // position 17 starts a b block
  EXPECT_THROW(xi_word(kAB, 0), Error);
}

TEST(Morphism, ApplyAndValidate) {
  const Morphism phi(kAB, Word{1, 2}, Word{3});
  EXPECT_EQ(apply_morphism(phi, letters("aab")), (Word{1, 2, 1, 2, 3}));
  EXPECT_EQ(phi.h(), 2u);
  // K(1,2) = 3 = K(3).
  EXPECT_NEAR(phi.c_phi(), 1.0, 1e-15);
  EXPECT_NEAR(Morphism(kAB, Word{1, 2}, Word{2}).c_phi(), 1.5, 1e-15);
  EXPECT_NEAR(Morphism(kAB, Word{2}, Word{1, 1, 1}).c_phi(), 1.5, 1e-15);
  EXPECT_THROW(Morphism(kAB, Word{1}, Word{1, 1}), Error);
  EXPECT_THROW(Morphism(kAB, Word{}, Word{1}), Error);
  try {
    phi.image(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_word);
  }
  const Morphism id = Morphism::identity(kAB);
  const Word w = letters("abaab");
  EXPECT_EQ(apply_morphism(id, w), w);
}

TEST(WordIO, RoundTrip) {
  std::mt19937_64 rng(35);
  std::vector<Word> words;
  for (int i = 0; i < 20; ++i) words.push_back(test::random_word(rng, 1, 30, 1000));
  std::ostringstream out;
  write_words(out, words);
  std::istringstream in("\n" + out.str() + "\n  \n");
  EXPECT_EQ(read_words(in), words);
  EXPECT_EQ(parse_word(" 1, 2 ,3 "), (Word{1, 2, 3}));
  EXPECT_EQ(format_word(Word{4, 5}), "4,5");
  for (const char* bad : {"1,,2", "1,x", "1.5", "1,2,"}) {
    try {
      parse_word(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parse) << bad;
    }
  }
  EXPECT_THROW(parse_word("1,0"), Error);
}

}  // namespace
}  // namespace levy
