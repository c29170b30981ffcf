#pragma once

// Levy constants of eventually periodic continued fractions, the trace
// polynomials T_n(x) = Tr([[x,1],[1,0]]^n) and the mean mu of a period.

#include <cstddef>
#include <optional>
#include <string_view>

#include "levy/continuants.hpp"

namespace levy {

enum class Method {
  quadratic_exact,
  rational_slope,
  irrational_slope_bounded,
  empirical_logq,
  empirical_birkhoff,
};

std::string_view to_string(Method method) noexcept;

/// A Levy value in nats per partial quotient.
///
/// `error_bound` is rigorous when present; nullopt means exact up to
/// floating-point rounding. Empirical methods leave it empty and report a
/// non-rigorous `heuristic_error` instead.
struct LevyResult {
  double value = 0.0;
  std::optional<double> error_bound;
  Method method = Method::quadratic_exact;
  std::optional<double> heuristic_error;
};

/// [a_0; preperiod, period, period, ...] with a nonempty period. Holds the
/// exact trace of the period matrix.
class QuadPeriod {
 public:
  explicit QuadPeriod(Word period, Word preperiod = {});

  const Word& period() const noexcept { return period_; }
  const Word& preperiod() const noexcept { return preperiod_; }
  const BigInt& trace() const noexcept { return trace_; }
  std::size_t length() const noexcept { return period_.size(); }

 private:
  Word period_;
  Word preperiod_;
  BigInt trace_;
};

/// log((t + sqrt(t^2 - (-1)^s 4)) / 2) for an exact trace t.
double log_quadratic_root(const BigInt& t, std::size_t s);

/// (1/s) log_quadratic_root(t, s).
double levy_from_trace(const BigInt& t, std::size_t s);

LevyResult levy_quadratic(const QuadPeriod& qp);

/// phi(x) = (x + sqrt(x^2 + 4)) / 2.
double golden_map(double x) noexcept;

/// T_n(x) by T_0 = 2, T_1 = x, T_{n+1} = x T_n + T_{n-1}. Requires x > 0.
double trace_poly(std::size_t n, double x);

/// T_n(x) = phi(x)^n + (-1/phi(x))^n.
double trace_poly_closed(std::size_t n, double x);

/// Longest period for which mu_mean also runs the root-finding route.
inline constexpr std::size_t kMuRootMaxLength = 30;

/// The unique positive mu with T_s(mu) = T(w).
struct MuMean {
  double value;                      // closed form r - 1/r, r = exp(L)
  std::optional<double> root_found;  // bisection + Newton on T_s, |w| <= 30
};

MuMean mu_mean(const Word& w);

}  // namespace levy
