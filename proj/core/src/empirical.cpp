#include "levy/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levy/error.hpp"

namespace levy {
namespace {

double boundary_term(Letter max_letter, std::size_t n) {
  return std::log(static_cast<double>(max_letter) + 2.0) / static_cast<double>(n);
}

Letter require_letter(LetterSource& source, std::size_t needed, std::size_t got) {
  auto letter = source();
  if (!letter) {
    throw Error(ErrorCode::truncated_stream, "letter stream ended after " + std::to_string(got) +
                                                 " letters, " + std::to_string(needed) +
                                                 " needed");
  }
  return *letter;
}

LevyResult estimate_logq(LetterSource source, std::size_t n) {
  Letter max_letter = 1;
  std::size_t got = 0;
  LetterSource tracked = [&]() -> std::optional<Letter> {
    const Letter letter = require_letter(source, n, got);
    max_letter = std::max(max_letter, letter);
    ++got;
    return letter;
  };
  LogQStream stream(std::move(tracked));
  LogStreamEntry last{};
  for (std::size_t i = 0; i < n; ++i) last = stream.require_next();
  return LevyResult{last.log_q / static_cast<double>(n), std::nullopt, Method::empirical_logq,
                    boundary_term(max_letter, n)};
}

LevyResult estimate_birkhoff(LetterSource source, std::size_t n, std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::domain, "tail depth must be >= 1");
  const std::size_t needed = n + depth - 1;
  // Each letter is stored twice so every window is contiguous.
  std::vector<Letter> ring(2 * depth);
  Letter max_letter = 1;
  std::size_t got = 0;
  auto pull = [&] {
    const Letter letter = require_letter(source, needed, got);
    max_letter = std::max(max_letter, letter);
    const std::size_t slot = got % depth;
    ring[slot] = letter;
    ring[slot + depth] = letter;
    ++got;
  };
  for (std::size_t i = 0; i + 1 < depth; ++i) pull();
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    pull();
    const std::size_t start = i % depth;
    sum += std::log(tail_value(std::span<const Letter>(ring.data() + start, depth)));
  }
  const double truncation = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(depth, 1000)) + 2);
  return LevyResult{sum.value() / static_cast<double>(n), std::nullopt,
                    Method::empirical_birkhoff, boundary_term(max_letter, n) + truncation};
}

}  // namespace

LevyResult levy_empirical(LetterSource source, std::size_t n, Estimator estimator,
                          std::size_t tail_depth) {
  if (n == 0) throw Error(ErrorCode::domain, "sample size must be >= 1");
  if (estimator == Estimator::logq) return estimate_logq(std::move(source), n);
  return estimate_birkhoff(std::move(source), n, tail_depth);
}

LevyResult levy_empirical_periodic(const Word& period, std::size_t n, const Word& preperiod) {
  if (period.empty()) throw Error(ErrorCode::domain, "period must be nonempty");
  if (n == 0) throw Error(ErrorCode::domain, "sample size must be >= 1");
  const std::size_t s = period.size();
  LogQStream stream(periodic_source(period, preperiod));
  std::vector<double> log_ratios;
  log_ratios.reserve(n + s);
  for (std::size_t i = 0; i < n + s; ++i) log_ratios.push_back(std::log(stream.require_next().ratio));

  auto window = [&](std::size_t end) {
    CompensatedSum sum;
    for (std::size_t i = end - s; i < end; ++i) sum += log_ratios[i];
    return sum.value() / static_cast<double>(s);
  };
  const double value = window(n + s);
  std::optional<double> heuristic;
  if (n >= s) heuristic = std::fabs(value - window(n));
  return LevyResult{value, std::nullopt, Method::empirical_logq, heuristic};
}

double XiOscillation::gap() const noexcept { return std::fabs(even_point - odd_point); }

double XiOscillation::predicted_gap() const noexcept {
  return std::fabs(predicted_even - predicted_odd);
}

bool XiOscillation::oscillates() const noexcept { return gap() > 3.0 * noise_floor; }

XiOscillation xi_oscillation(const Alphabet& alphabet, unsigned m_max) {
  if (m_max < 4) throw Error(ErrorCode::domain, "m_max must be >= 4");
  if (m_max > 40) throw Error(ErrorCode::domain, "m_max must be <= 40");
  XiOscillation out{};
  LogQStream stream(xi_source(alphabet));
  std::size_t next_mark = 2;
  for (unsigned m = 1; m <= m_max; ++m) {
    LogStreamEntry entry{};
    while (stream.index() < next_mark) entry = stream.require_next();
    out.samples.push_back({m, entry.log_q / static_cast<double>(next_mark)});
    next_mark *= 2;
  }
  const auto u = [&](unsigned m) { return out.samples[m - 1].u; };
  const unsigned last_even = m_max % 2 == 0 ? m_max : m_max - 1;
  const unsigned last_odd = m_max % 2 == 1 ? m_max : m_max - 1;
  out.even_point = (u(last_even) + u(last_even - 2)) / 2.0;
  out.odd_point = (u(last_odd) + u(last_odd - 2)) / 2.0;
  out.noise_floor = std::max(std::fabs(u(last_even) - u(last_even - 2)),
                             std::fabs(u(last_odd) - u(last_odd - 2)));

  const double l_a = log_quadratic_root(BigInt(alphabet.a), 1);
  const double l_b = log_quadratic_root(BigInt(alphabet.b), 1);
  out.predicted_even = (2.0 * l_a + l_b) / 3.0;
  out.predicted_odd = (l_a + 2.0 * l_b) / 3.0;
  return out;
}

LevyResult morphic_levy(const Morphism& phi, const SlopeCF& slope, std::size_t n,
                        Intercept intercept) {
  if (n == 0) throw Error(ErrorCode::domain, "sample size must be >= 1");
  const Alphabet& source = phi.source();
  const Word s = intercept == Intercept::zero ? sturmian_prefix(slope, source, n)
                                              : standard_prefix(slope, source, n);
  const Word image = apply_morphism(phi, s).prefix(n);
  return levy_empirical(word_source(image), n, Estimator::logq);
}

}  // namespace levy
