#pragma once

// Rational slopes in [0,1], Stern-Brocot navigation, and irrational slopes
// given by continued-fraction digits.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace levy {

/// Reduced p/q with 0 <= p/q <= 1. Construction reduces eagerly.
class Fraction {
 public:
  Fraction(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  double value() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// (p + p') / (q + q').
  Fraction mediant(const Fraction& other) const;

  /// p q' - p' q.
  std::int64_t cross(const Fraction& other) const;

  /// |p q' - p' q| == 1.
  bool is_farey_neighbor(const Fraction& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) noexcept;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

struct SternBrocotParents {
  Fraction lower;
  Fraction upper;
};

/// The Farey neighbors of p/q in F_q whose mediant is p/q. Requires q >= 2.
SternBrocotParents stern_brocot_parents(const Fraction& pq);

/// Plain continued-fraction digits [0; c_1, ..., c_n] of p/q (Euclid).
/// 0/1 yields an empty list and 1/1 yields {1}.
std::vector<std::uint64_t> cf_digits(const Fraction& pq);

/// All reduced fractions with denominator <= q_max, in increasing order.
std::vector<Fraction> farey_sequence(std::int64_t q_max);

/// Irrational (or, when finite, rational) slope
/// theta = [0; 1 + d_1, d_2, d_3, ...] given by digits d_i >= 1.
/// The digit list is `prefix` followed by `period` repeated forever; an
/// empty period makes the expansion finite.
class SlopeCF {
 public:
  explicit SlopeCF(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period = {});

  /// d_i = 1 for all i, theta = [0; 2, 1, 1, ...] = 1/phi^2.
  static SlopeCF golden();

  bool is_finite() const noexcept { return period_.empty(); }
  const std::vector<std::uint64_t>& prefix() const noexcept { return prefix_; }
  const std::vector<std::uint64_t>& period() const noexcept { return period_; }

  /// d_i for i >= 1, or 0 once a finite expansion is exhausted.
  std::uint64_t digit(std::size_t i) const;

  /// Largest k for which convergent(k) is defined (SIZE_MAX when infinite).
  std::size_t max_index() const noexcept;

  /// Principal convergent p_k/q_k of theta, k >= 0 (p_0/q_0 = 0/1).
  /// Throws insufficient_digits beyond max_index().
  Fraction convergent(std::size_t k) const;

  /// Convergents p_0/q_0 .. p_{k_max}/q_{k_max}.
  std::vector<Fraction> convergents(std::size_t k_max) const;

  /// Smallest k with q_k > bound.
  std::size_t first_index_with_denominator_above(std::int64_t bound) const;

  /// Double-precision value from a deep convergent.
  double value() const;

 private:
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> period_;
};

}  // namespace levy
