#pragma once

// Empirical Levy estimates from letter streams, the xi_{a,b} oscillation
// and morphic images of Sturmian words.

#include <cstddef>
#include <vector>

#include "levy/continuants.hpp"
#include "levy/fraction.hpp"
#include "levy/quadratic.hpp"
#include "levy/words.hpp"

namespace levy {

enum class Estimator { logq, birkhoff };

inline constexpr std::size_t kDefaultTailDepth = 40;

/// logq: log Q_n / n. birkhoff: (1/n) sum_{i=1}^{n} log [s_i; s_{i+1}, ...]
/// with each tail truncated to `tail_depth` letters, which needs
/// n + tail_depth - 1 letters. Throws Error(truncated_stream) when the
/// source runs dry. The heuristic error is the O(1/n) boundary term.
LevyResult levy_empirical(LetterSource source, std::size_t n, Estimator estimator,
                          std::size_t tail_depth = kDefaultTailDepth);

/// (log Q_{n+s} - log Q_n) / s for an eventually periodic expansion with
/// period length s.
LevyResult levy_empirical_periodic(const Word& period, std::size_t n, const Word& preperiod = {});

struct XiSample {
  unsigned m;
  double u;  // log Q_{2^m} / 2^m
};

struct XiOscillation {
  std::vector<XiSample> samples;  // m = 1..m_max
  double even_point;              // mean of the last two even-m samples
  double odd_point;               // mean of the last two odd-m samples
  double predicted_even;          // (2 L_a + L_b) / 3
  double predicted_odd;           // (L_a + 2 L_b) / 3
  double noise_floor;             // largest last same-parity difference

  double gap() const noexcept;
  double predicted_gap() const noexcept;
  /// Final even/odd gap exceeds three times the noise floor.
  bool oscillates() const noexcept;
};

/// Requires m_max >= 4.
XiOscillation xi_oscillation(const Alphabet& alphabet, unsigned m_max);

enum class Intercept {
  zero,   // s_{theta,0}
  slope,  // s_{theta,theta}
};

/// log Q_n / n for [0; phi(s)] where s is the Sturmian word of the given
/// slope and intercept.
LevyResult morphic_levy(const Morphism& phi, const SlopeCF& slope, std::size_t n,
                        Intercept intercept = Intercept::zero);

}  // namespace levy
