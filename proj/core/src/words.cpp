#include "levy/words.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "int128.hpp"
#include "levy/error.hpp"

namespace levy {
namespace {

using detail::i128;

constexpr int kMaxRefinements = 5;

void check_intercept(const Fraction& rho) {
  if (rho.p() == rho.q()) throw Error(ErrorCode::domain, "intercept must lie in [0,1)");
}

/// Walks m*P/Q + r/t for m = 0, 1, 2, ... with the value kept as
/// floor + rem/D, D = Q t.
class FloorWalker {
 public:
  FloorWalker(std::int64_t num, std::int64_t den, const Fraction& rho)
      : step_(static_cast<i128>(num) * rho.q()),
        den_(static_cast<i128>(den) * rho.q()),
        rem_(static_cast<i128>(rho.p()) * den) {}

  void advance() {
    rem_ += step_;
    if (rem_ >= den_) {
      rem_ -= den_;
      ++floor_;
    }
  }

  i128 floor() const noexcept { return floor_; }
  i128 rem() const noexcept { return rem_; }
  i128 den() const noexcept { return den_; }

 private:
  i128 step_;
  i128 den_;
  i128 rem_;
  i128 floor_ = 0;
};

struct FloorValue {
  i128 floor;
  bool is_integer;
};

FloorValue floor_direct(std::int64_t num, std::int64_t den, const Fraction& rho, std::size_t m) {
  const i128 d = static_cast<i128>(den) * rho.q();
  const i128 n = static_cast<i128>(m) * num * rho.q() + static_cast<i128>(rho.p()) * den;
  return {n / d, n % d == 0};
}

template <typename Letters>
Word word_from_steps(std::size_t n, const Alphabet& alphabet, Letters&& level) {
  std::vector<Letter> letters;
  letters.reserve(n);
  i128 previous = level(0);
  for (std::size_t m = 1; m <= n; ++m) {
    const i128 current = level(m);
    const i128 step = current - previous;
    if (step != 0 && step != 1) {
      throw Error(ErrorCode::domain, "mechanical step outside {0,1}");
    }
    letters.push_back(alphabet.letter(step == 1));
    previous = current;
  }
  return Word(std::move(letters));
}

Word mechanical_rational(const Fraction& theta, const Fraction& rho, std::size_t n,
                         const Alphabet& alphabet, bool upper) {
  check_intercept(rho);
  FloorWalker walker(theta.p(), theta.q(), rho);
  std::size_t position = 0;
  return word_from_steps(n, alphabet, [&](std::size_t m) -> i128 {
    while (position < m) {
      walker.advance();
      ++position;
    }
    return walker.floor() + (upper && walker.rem() != 0 ? 1 : 0);
  });
}

// Exact floor (or ceiling) of m*theta + rho for irrational theta, using the
// convergent at `index` and refining when the approximation sits too close
// to an integer boundary.
class IrrationalLevels {
 public:
  IrrationalLevels(const SlopeCF& theta, const Fraction& rho, std::size_t n, bool upper)
      : theta_(theta), rho_(rho), upper_(upper) {
    const long double bound = 2.0L * static_cast<long double>(n) * static_cast<long double>(n);
    const auto capped = bound > 9.0e18L ? std::int64_t{9'000'000'000'000'000'000}
                                        : static_cast<std::int64_t>(bound);
    if (theta.is_finite()) {
      // A finite expansion is its own last convergent.
      index_ = theta.max_index();
      base_ = theta.convergent(index_);
      exact_ = true;
    } else {
      index_ = theta.first_index_with_denominator_above(capped);
      base_ = theta.convergent(index_);
    }
    const long double scale = static_cast<long double>(base_.q()) *
                              static_cast<long double>(base_.q()) *
                              static_cast<long double>(rho.q()) *
                              static_cast<long double>(n + 1);
    if (scale > 1.0e36L) {
      throw Error(ErrorCode::domain, "slope convergents too large for exact floor evaluation");
    }
    walker_.emplace(base_.p(), base_.q(), rho);
  }

  i128 operator()(std::size_t m) {
    while (position_ < m) {
      walker_->advance();
      ++position_;
    }
    if (m == 0 || exact_) return level(walker_->floor(), walker_->rem() == 0);

    const i128 q = base_.q();
    const i128 t = rho_.q();
    const i128 rem = walker_->rem();
    const i128 slack = static_cast<i128>(m) * t;
    if (rem * q > slack && (walker_->den() - rem) * q > slack) {
      return level(walker_->floor(), false);
    }
    return refine(m);
  }

 private:
  i128 level(i128 floor, bool is_integer) const {
    return floor + (upper_ && !is_integer ? 1 : 0);
  }

  i128 refine(std::size_t m) const {
    for (int j = 1; j <= kMaxRefinements; ++j) {
      if (index_ + static_cast<std::size_t>(j) > theta_.max_index()) break;
      const Fraction c = theta_.convergent(index_ + static_cast<std::size_t>(j));
      const FloorValue v = floor_direct(c.p(), c.q(), rho_, m);
      const bool last_exact = theta_.is_finite() &&
                              index_ + static_cast<std::size_t>(j) == theta_.max_index();
      if (last_exact) return level(v.floor, v.is_integer);
      const i128 q = c.q();
      const i128 d = q * rho_.q();
      const i128 n = static_cast<i128>(m) * c.p() * rho_.q() + static_cast<i128>(rho_.p()) * c.q();
      const i128 rem = n % d;
      const i128 slack = static_cast<i128>(m) * rho_.q();
      if (rem * q > slack && (d - rem) * q > slack) return level(v.floor, false);
    }
    throw PrecisionError(m, "floor boundary unresolved at index " + std::to_string(m) +
                                " after " + std::to_string(kMaxRefinements) + " refinements");
  }

  const SlopeCF& theta_;
  Fraction rho_;
  bool upper_;
  bool exact_ = false;
  std::size_t index_ = 0;
  Fraction base_{0, 1};
  std::optional<FloorWalker> walker_;
  std::size_t position_ = 0;
};

Word mechanical_irrational(const SlopeCF& theta, const Fraction& rho, std::size_t n,
                           const Alphabet& alphabet, bool upper) {
  check_intercept(rho);
  IrrationalLevels levels(theta, rho, n, upper);
  return word_from_steps(n, alphabet, levels);
}

}  // namespace

Alphabet::Alphabet(Letter a_, Letter b_) : a(a_), b(b_) {
  if (a < 1 || b <= a) {
    throw Error(ErrorCode::domain, "alphabet requires 1 <= a < b, got a=" + std::to_string(a) +
                                       " b=" + std::to_string(b));
  }
}

Word mechanical_lower(const Fraction& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet) {
  return mechanical_rational(theta, rho, n, alphabet, false);
}

Word mechanical_lower(const SlopeCF& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet) {
  return mechanical_irrational(theta, rho, n, alphabet, false);
}

Word mechanical_upper(const Fraction& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet) {
  return mechanical_rational(theta, rho, n, alphabet, true);
}

Word mechanical_upper(const SlopeCF& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet) {
  return mechanical_irrational(theta, rho, n, alphabet, true);
}

Word christoffel(const Fraction& pq, const Alphabet& alphabet) {
  return mechanical_lower(pq, Fraction(0, 1), static_cast<std::size_t>(pq.q()), alphabet);
}

Mat2 christoffel_matrix(const Fraction& pq, const Alphabet& alphabet) {
  Mat2 m_lo = Mat2::partial_quotient(alphabet.a);
  Mat2 m_hi = Mat2::partial_quotient(alphabet.b);
  if (pq.p() == 0) return m_lo;
  if (pq.p() == pq.q()) return m_hi;
  // From the bracket (0/1, 1/1) the path to [0; c_1, ..., c_n] is
  // L^{c_1 - 2} R^{c_2} L^{c_3} ... with the last run shortened by one.
  std::vector<std::uint64_t> runs = cf_digits(pq);
  runs.front() -= 1;
  runs.back() -= 1;
  bool left = true;
  for (std::uint64_t run : runs) {
    if (run > 0) {
      if (left) {
        m_hi = pow(m_lo, run) * m_hi;
      } else {
        m_lo = m_lo * pow(m_hi, run);
      }
    }
    left = !left;
  }
  return m_lo * m_hi;
}

std::pair<Word, Word> standard_factorization(const Fraction& pq, const Alphabet& alphabet) {
  if (pq.q() < 2) {
    throw Error(ErrorCode::not_factorizable,
                "Christoffel word of " + pq.to_string() + " has a single letter");
  }
  const auto parents = stern_brocot_parents(pq);
  return {christoffel(parents.lower, alphabet), christoffel(parents.upper, alphabet)};
}

std::vector<Word> standard_words(const SlopeCF& slope, const Alphabet& alphabet,
                                 std::size_t k_max) {
  std::vector<Word> out;
  out.reserve(k_max + 2);
  out.push_back(Word{alphabet.b});
  out.push_back(Word{alphabet.a});
  for (std::size_t n = 1; n <= k_max; ++n) {
    const std::uint64_t d = slope.digit(n);
    if (d == 0) {
      throw Error(ErrorCode::insufficient_digits,
                  "standard word M_" + std::to_string(n) + " needs more slope digits");
    }
    out.push_back(out[n].power(d) + out[n - 1]);
  }
  return out;
}

Word sturmian_prefix(const SlopeCF& slope, const Alphabet& alphabet, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::domain, "prefix length must be >= 1");
  const auto bound = static_cast<std::int64_t>(n + 1);
  std::size_t k = 0;
  for (;; ++k) {
    if (k > slope.max_index()) {
      throw Error(ErrorCode::insufficient_digits,
                  "slope digits exhausted before a convergent denominator exceeded " +
                      std::to_string(n + 1));
    }
    if (slope.convergent(k).q() > bound) break;
  }
  return mechanical_lower(slope.convergent(k), Fraction(0, 1), n, alphabet);
}

Word standard_prefix(const SlopeCF& slope, const Alphabet& alphabet, std::size_t n) {
  Word older{alphabet.b};
  Word current{alphabet.a};
  for (std::size_t k = 1; current.size() < n; ++k) {
    const std::uint64_t d = slope.digit(k);
    if (d == 0) {
      throw Error(ErrorCode::insufficient_digits,
                  "slope digits exhausted before M_k reached length " + std::to_string(n));
    }
    Word next = current.power(d) + older;
    older = std::move(current);
    current = std::move(next);
  }
  return current.prefix(n);
}

namespace {

Letter xi_letter(const Alphabet& alphabet, std::size_t position) {
  if (position == 1) return alphabet.a;
  const auto block = static_cast<unsigned>(std::bit_width(position - 1) - 1);
  return block % 2 == 0 ? alphabet.b : alphabet.a;
}

}  // namespace

Word xi_word(const Alphabet& alphabet, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::domain, "prefix length must be >= 1");
  std::vector<Letter> letters(n);
  for (std::size_t i = 1; i <= n; ++i) letters[i - 1] = xi_letter(alphabet, i);
  return Word(std::move(letters));
}

LetterSource xi_source(const Alphabet& alphabet) {
  return [alphabet, position = std::size_t{0}]() mutable -> std::optional<Letter> {
    return xi_letter(alphabet, ++position);
  };
}

}  // namespace levy
