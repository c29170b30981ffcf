#include "levy/slope.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>

#include "levy/error.hpp"

namespace levy {
namespace {

bool within_rounding(double x, double y, double ulps = 4.0) {
  return std::fabs(x - y) <= ulps * DBL_EPSILON * std::max(std::fabs(x), std::fabs(y));
}

// Endpoints also accept a target echoed with 15 significant digits.
constexpr double kEndpointUlps = 16.0;

std::string format_real(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

double f_of(const Mat2& m, const Fraction& pq) {
  return levy_from_trace(m.trace(), static_cast<std::size_t>(pq.q()));
}

// Continued-fraction digits of the Stern-Brocot node reached by the run
// lengths L^{r_0} R^{r_1} ... from the root 1/1.
std::vector<std::uint64_t> digits_from_runs(std::vector<std::uint64_t> runs) {
  runs.back() += 1;
  return runs;
}

}  // namespace

SlopePoint slope_point(const Fraction& pq, const Alphabet& alphabet) {
  if (pq.q() > kMaxSlopeDenominator) {
    throw Error(ErrorCode::domain, "denominator " + std::to_string(pq.q()) + " is too large");
  }
  const Mat2 m = christoffel_matrix(pq, alphabet);
  BigInt t = m.trace();
  const double f = levy_from_trace(t, static_cast<std::size_t>(pq.q()));
  return SlopePoint{pq, f, 2.0 * std::sinh(f), std::move(t)};
}

LevyResult f_rational(const Fraction& pq, const Alphabet& alphabet) {
  return LevyResult{slope_point(pq, alphabet).f_value, std::nullopt, Method::rational_slope,
                    std::nullopt};
}

double tail_gap(const Alphabet& alphabet) {
  static std::mutex mutex;
  static std::map<std::pair<Letter, Letter>, double> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::pair{alphabet.a, alphabet.b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // [b; a, b, ...] = (ab + sqrt(ab(ab+4))) / (2a) and
  // [a; b, a, ...] = (ab + sqrt(ab(ab+4))) / (2b).
  const auto a = static_cast<long double>(alphabet.a);
  const auto b = static_cast<long double>(alphabet.b);
  const long double ab = a * b;
  const long double num = ab + std::sqrt(ab * (ab + 4.0L));
  const auto g = static_cast<double>(num / (2.0L * a) - num / (2.0L * b));
  cache.emplace(key, g);
  return g;
}

LevyResult f_irrational(const SlopeCF& slope, const Alphabet& alphabet, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::domain, "convergent depth must be >= 1");
  const Fraction c = slope.convergent(k);
  const double bound = 5.0 * tail_gap(alphabet) / static_cast<double>(c.q());
  return LevyResult{slope_point(c, alphabet).f_value, bound, Method::irrational_slope_bounded,
                    std::nullopt};
}

Inversion invert_f(double target, const Alphabet& alphabet, double tol, std::size_t max_steps) {
  if (!(tol > 0.0)) throw Error(ErrorCode::domain, "tolerance must be positive");
  Fraction lo(0, 1);
  Fraction hi(1, 1);
  Mat2 m_lo = Mat2::partial_quotient(alphabet.a);
  Mat2 m_hi = Mat2::partial_quotient(alphabet.b);
  double f_lo = f_of(m_lo, lo);
  double f_hi = f_of(m_hi, hi);

  if (within_rounding(target, f_lo, kEndpointUlps)) {
    return Inversion{lo, lo, lo, f_lo, f_lo, f_lo, 0.0, {}, 0, true};
  }
  if (within_rounding(target, f_hi, kEndpointUlps)) {
    return Inversion{hi, hi, hi, f_hi, f_hi, f_hi, 0.0, {1}, 0, true};
  }
  if (!(target > f_lo && target < f_hi)) {
    throw OutOfRangeError(f_lo, f_hi, "target " + format_real(target) +
                                          " outside the attainable interval");
  }

  // The bracket (0/1, 1/1) is the left child of the root; record that move.
  std::vector<std::uint64_t> runs{1};
  bool last_left = true;
  for (std::size_t steps = 0;; ++steps) {
    const Fraction mid = lo.mediant(hi);
    Mat2 m_mid = m_lo * m_hi;
    const double f_mid = f_of(m_mid, mid);
    if (within_rounding(f_mid, target)) {
      return Inversion{mid, mid, mid, f_mid, f_mid, f_mid, 0.0, digits_from_runs(runs), steps + 1,
                       true};
    }
    if (f_hi - f_lo < tol) {
      return Inversion{lo, hi, mid, f_lo, f_hi, f_mid, f_hi - f_lo, digits_from_runs(runs), steps,
                       false};
    }
    if (steps >= max_steps) {
      throw Error(ErrorCode::no_convergence,
                  "no enclosure below tolerance after " + std::to_string(max_steps) + " steps");
    }
    const bool go_left = !(f_mid < target);
    if (go_left) {
      hi = mid;
      m_hi = std::move(m_mid);
      f_hi = f_mid;
    } else {
      lo = mid;
      m_lo = std::move(m_mid);
      f_lo = f_mid;
    }
    if (go_left == last_left) {
      ++runs.back();
    } else {
      runs.push_back(1);
      last_left = go_left;
    }
  }
}

std::vector<RnTerm> rn_family(const Fraction& pq, const Fraction& neighbor,
                              const Alphabet& alphabet, std::size_t n_max) {
  if (n_max < 2) throw Error(ErrorCode::domain, "n_max must be >= 2");
  if (!pq.is_farey_neighbor(neighbor)) {
    throw Error(ErrorCode::invalid_pair,
                pq.to_string() + " and " + neighbor.to_string() + " are not Farey neighbors");
  }
  const BigInt t_pq = slope_point(pq, alphabet).trace;
  const int sign = pq.q() % 2 == 1 ? 1 : -1;  // (-1)^{q+1}

  std::vector<RnTerm> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto ni = static_cast<std::int64_t>(n);
    const Fraction r(neighbor.p() + ni * pq.p(), neighbor.q() + ni * pq.q());
    SlopePoint sp = slope_point(r, alphabet);
    if (n >= 2) {
      const BigInt expected = t_pq * out[n - 1].trace + sign * out[n - 2].trace;
      if (expected != sp.trace) {
        throw Error(ErrorCode::domain, "trace recurrence fails at n = " + std::to_string(n));
      }
    }
    out.push_back(RnTerm{n, r, std::move(sp.trace), sp.x_value});
  }
  return out;
}

}  // namespace levy
