#pragma once

// The slope function f(theta): Levy constant of the mechanical continued
// fraction [0; s_{theta,0}] over a two-letter alphabet.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "levy/continuants.hpp"
#include "levy/fraction.hpp"
#include "levy/quadratic.hpp"
#include "levy/words.hpp"

namespace levy {

struct SlopePoint {
  Fraction fraction;
  double f_value;
  double x_value;  // x_{p/q}, the mean of w_{p/q}
  BigInt trace;    // T(w_{p/q})
};

/// Largest denominator slope_point accepts; the trace has about q log2(b) bits.
inline constexpr std::int64_t kMaxSlopeDenominator = std::int64_t{1} << 26;

/// f and x at a rational slope, from the exact trace of w_{p/q}. Throws
/// Error(domain) when q exceeds kMaxSlopeDenominator.
SlopePoint slope_point(const Fraction& pq, const Alphabet& alphabet);

/// slope_point as a LevyResult tagged rational-slope.
LevyResult f_rational(const Fraction& pq, const Alphabet& alphabet);

/// G = [b; a,b,a,b,...] - [a; b,a,b,a,...]. Computed once per alphabet.
double tail_gap(const Alphabet& alphabet);

/// f(p_k/q_k) with the rigorous bound 5G/q_k on |f(theta) - f(p_k/q_k)|.
LevyResult f_irrational(const SlopeCF& slope, const Alphabet& alphabet, std::size_t k);

struct Inversion {
  Fraction lower;   // f(lower) <= target
  Fraction upper;   // target <= f(upper)
  Fraction slope;   // mediant of lower and upper, or the exact hit
  double f_lower;
  double f_upper;
  double f_slope;
  double width;     // f_upper - f_lower, zero on an exact hit
  std::vector<std::uint64_t> cf_digits;  // digits of slope, from the descent path
  std::size_t steps;
  bool exact_hit;
};

inline constexpr std::size_t kInvertMaxSteps = 1'000'000;

/// Stern-Brocot descent for a slope with f(slope) ~ target. Stops once the
/// enclosure [f(lower), f(upper)] is narrower than tol.
///
/// Throws OutOfRangeError when target lies outside [f(0), f(1)] and
/// Error(no_convergence) after max_steps mediants.
Inversion invert_f(double target, const Alphabet& alphabet, double tol,
                   std::size_t max_steps = kInvertMaxSteps);

struct RnTerm {
  std::size_t n;
  Fraction r;
  BigInt trace;
  double x_value;
};

/// r_n = (p' + n p)/(q' + n q) for n = 0..n_max with exact traces.
/// Throws Error(invalid_pair) unless |p'q - pq'| = 1, and Error(domain) if
/// the trace recurrence ever fails.
std::vector<RnTerm> rn_family(const Fraction& pq, const Fraction& neighbor,
                              const Alphabet& alphabet, std::size_t n_max);

}  // namespace levy
