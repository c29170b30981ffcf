#include "levy/quadratic.hpp"

#include <algorithm>
#include <cmath>

#include "levy/error.hpp"

namespace levy {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::quadratic_exact: return "quadratic-exact";
    case Method::rational_slope: return "rational-slope";
    case Method::irrational_slope_bounded: return "irrational-slope-bounded";
    case Method::empirical_logq: return "empirical-logq";
    case Method::empirical_birkhoff: return "empirical-birkhoff";
  }
  return "unknown";
}

QuadPeriod::QuadPeriod(Word period, Word preperiod)
    : period_(std::move(period)), preperiod_(std::move(preperiod)) {
  if (period_.empty()) throw Error(ErrorCode::domain, "period must be nonempty");
  trace_ = levy::trace(period_);
  BigInt disc = trace_ * trace_;
  if (period_.size() % 2 == 0) {
    disc -= 4;
  } else {
    disc += 4;
  }
  if (sgn(disc) <= 0 || mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
    throw Error(ErrorCode::domain, "degenerate period trace");
  }
}

double log_quadratic_root(const BigInt& t, std::size_t s) {
  if (sgn(t) <= 0) throw Error(ErrorCode::domain, "trace must be positive");
  if (mpz_sizeinbase(t.get_mpz_t(), 2) <= 63) {
    const auto x = static_cast<long double>(mpz_get_si(t.get_mpz_t()));
    const long double disc = s % 2 == 0 ? (x - 2.0L) * (x + 2.0L) : x * x + 4.0L;
    return static_cast<double>(std::log((x + std::sqrt(disc)) / 2.0L));
  }
  // The root is t (1 + O(t^-2)); the correction is below 2^-126.
  return log_big(t);
}

double levy_from_trace(const BigInt& t, std::size_t s) {
  if (s == 0) throw Error(ErrorCode::domain, "period length must be positive");
  return log_quadratic_root(t, s) / static_cast<double>(s);
}

LevyResult levy_quadratic(const QuadPeriod& qp) {
  return LevyResult{levy_from_trace(qp.trace(), qp.length()), std::nullopt,
                    Method::quadratic_exact, std::nullopt};
}

double golden_map(double x) noexcept { return (x + std::sqrt(x * x + 4.0)) / 2.0; }

double trace_poly(std::size_t n, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::domain, "trace polynomial needs x > 0");
  double prev = 2.0;
  double cur = x;
  if (n == 0) return prev;
  for (std::size_t i = 1; i < n; ++i) {
    const double next = x * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double trace_poly_closed(std::size_t n, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::domain, "trace polynomial needs x > 0");
  const double r = golden_map(x);
  const double nd = static_cast<double>(n);
  return std::pow(r, nd) + std::pow(-1.0 / r, nd);
}

namespace {

struct PolyValue {
  double value;
  double derivative;
};

PolyValue trace_poly_with_derivative(std::size_t n, double x) {
  double prev = 2.0, cur = x;
  double dprev = 0.0, dcur = 1.0;
  if (n == 0) return {2.0, 0.0};
  for (std::size_t i = 1; i < n; ++i) {
    const double next = x * cur + prev;
    const double dnext = cur + x * dcur + dprev;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return {cur, dcur};
}

double solve_trace_poly(std::size_t n, double target, double lo, double hi) {
  // T_n is increasing on x > 0 and T_n(lo) <= target <= T_n(hi).
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (trace_poly(n, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const auto [value, derivative] = trace_poly_with_derivative(n, x);
    if (derivative <= 0.0) break;
    const double next = x - (value - target) / derivative;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

}  // namespace

MuMean mu_mean(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::domain, "mu_mean needs a nonempty word");
  const BigInt t = trace(w);
  const double r = std::exp(levy_from_trace(t, w.size()));
  MuMean out{r - 1.0 / r, std::nullopt};
  if (w.size() <= kMuRootMaxLength) {
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    const auto lo_d = static_cast<double>(*lo);
    const auto hi_d = static_cast<double>(*hi);
    out.root_found = lo_d == hi_d ? lo_d : solve_trace_poly(w.size(), t.get_d(), lo_d, hi_d);
  }
  return out;
}

}  // namespace levy
