#include "levy/fraction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "int128.hpp"
#include "levy/error.hpp"

namespace levy {
namespace {

using detail::i128;

std::int64_t checked_narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::domain, "fraction component overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// Inverse of x modulo m, for coprime x, m with m >= 2.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  i128 old_r = x % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 quotient = old_r / r;
    std::tie(old_r, r) = std::pair<i128, i128>{r, old_r - quotient * r};
    std::tie(old_s, s) = std::pair<i128, i128>{s, old_s - quotient * s};
  }
  i128 inv = old_s % m;
  if (inv < 0) inv += m;
  return static_cast<std::int64_t>(inv);
}

}  // namespace

Fraction::Fraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q_ <= 0) throw Error(ErrorCode::domain, "fraction denominator must be positive");
  if (p_ < 0 || p_ > q_) {
    throw Error(ErrorCode::domain,
                "fraction " + std::to_string(p) + "/" + std::to_string(q) + " outside [0,1]");
  }
  const std::int64_t g = std::gcd(p_, q_);
  p_ /= g;
  q_ /= g;
}

Fraction Fraction::mediant(const Fraction& other) const {
  return Fraction(checked_narrow(static_cast<i128>(p_) + other.p_),
                  checked_narrow(static_cast<i128>(q_) + other.q_));
}

std::int64_t Fraction::cross(const Fraction& other) const {
  return checked_narrow(static_cast<i128>(p_) * other.q_ - static_cast<i128>(other.p_) * q_);
}

bool Fraction::is_farey_neighbor(const Fraction& other) const noexcept {
  const i128 c = static_cast<i128>(p_) * other.q_ - static_cast<i128>(other.p_) * q_;
  return c == 1 || c == -1;
}

std::string Fraction::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) noexcept {
  return static_cast<i128>(x.p_) * y.q_ <=> static_cast<i128>(y.p_) * x.q_;
}

SternBrocotParents stern_brocot_parents(const Fraction& pq) {
  if (pq.q() < 2) {
    throw Error(ErrorCode::no_parents, pq.to_string() + " is a root of the Farey tree");
  }
  // Lower parent l/m satisfies p m - l q = 1 with 0 < m < q.
  const std::int64_t m = mod_inverse(pq.p(), pq.q());
  const std::int64_t l = checked_narrow((static_cast<i128>(pq.p()) * m - 1) / pq.q());
  return {Fraction(l, m), Fraction(pq.p() - l, pq.q() - m)};
}

std::vector<std::uint64_t> cf_digits(const Fraction& pq) {
  std::vector<std::uint64_t> digits;
  std::int64_t num = pq.p();
  std::int64_t den = pq.q();
  // Integer part of p/q <= 1 is dropped; 1/1 = [0; 1].
  if (num == den) return {1};
  while (num != 0) {
    digits.push_back(static_cast<std::uint64_t>(den / num));
    const std::int64_t r = den % num;
    den = num;
    num = r;
  }
  return digits;
}

std::vector<Fraction> farey_sequence(std::int64_t q_max) {
  if (q_max < 1) throw Error(ErrorCode::domain, "Farey order must be >= 1");
  std::vector<Fraction> out;
  // Standard next-term recurrence of F_n.
  std::int64_t a = 0, b = 1, c = 1, d = q_max;
  out.emplace_back(a, b);
  while (c <= q_max) {
    const std::int64_t k = (q_max + b) / d;
    std::tie(a, b, c, d) = std::tuple{c, d, k * c - a, k * d - b};
    out.emplace_back(a, b);
  }
  return out;
}

SlopeCF::SlopeCF(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  auto positive = [](std::uint64_t d) { return d >= 1; };
  if (!std::all_of(prefix_.begin(), prefix_.end(), positive) ||
      !std::all_of(period_.begin(), period_.end(), positive)) {
    throw Error(ErrorCode::domain, "slope digits must be >= 1");
  }
  if (prefix_.empty() && period_.empty()) {
    throw Error(ErrorCode::domain, "slope needs at least one digit");
  }
}

SlopeCF SlopeCF::golden() { return SlopeCF({}, {1}); }

std::uint64_t SlopeCF::digit(std::size_t i) const {
  if (i == 0) throw Error(ErrorCode::domain, "slope digits are indexed from 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  if (period_.empty()) return 0;
  return period_[(i - 1 - prefix_.size()) % period_.size()];
}

std::size_t SlopeCF::max_index() const noexcept {
  return period_.empty() ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

Fraction SlopeCF::convergent(std::size_t k) const {
  if (k > max_index()) {
    throw Error(ErrorCode::insufficient_digits,
                "convergent " + std::to_string(k) + " needs more slope digits");
  }
  i128 p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const i128 c = static_cast<i128>(digit(i)) + (i == 1 ? 1 : 0);
    const i128 p_next = c * p + p_prev;
    const i128 q_next = c * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    checked_narrow(q);
  }
  return Fraction(checked_narrow(p), checked_narrow(q));
}

std::vector<Fraction> SlopeCF::convergents(std::size_t k_max) const {
  std::vector<Fraction> out;
  out.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) out.push_back(convergent(k));
  return out;
}

std::size_t SlopeCF::first_index_with_denominator_above(std::int64_t bound) const {
  for (std::size_t k = 0;; ++k) {
    if (convergent(k).q() > bound) return k;
  }
}

double SlopeCF::value() const {
  if (is_finite()) return convergent(max_index()).value();
  // q_k >= 2^40 puts the convergent within 2^-80 of theta.
  std::size_t k = 1;
  while (convergent(k).q() < (std::int64_t{1} << 40)) ++k;
  return convergent(k).value();
}

}  // namespace levy
