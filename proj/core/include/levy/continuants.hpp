#pragma once

// Exact continuant and trace algebra over words of partial quotients, plus
// log-space denominator streams for long words.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace levy {

using BigInt = mpz_class;
using Letter = std::int64_t;

/// A finite sequence of positive partial quotients. The empty word is valid
/// and maps to the identity matrix.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  /// Letters [pos, pos + len).
  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len, len); }

  /// Word with the last `k` letters removed (M^-, M^-- for k = 1, 2).
  Word drop_back(std::size_t k) const;

  /// Appends letters without revalidation of the existing ones.
  void append(const Word& other);
  void push_back(Letter letter);

  /// Number of occurrences of `letter`.
  std::size_t count(Letter letter) const;

  /// Offset of the first occurrence of `needle`, if any.
  std::optional<std::size_t> find(const Word& needle) const;

  Word power(std::size_t k) const;

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// 2x2 integer matrix; products of [[a,1],[1,0]] have non-negative entries.
struct Mat2 {
  BigInt e11{1};
  BigInt e12{0};
  BigInt e21{0};
  BigInt e22{1};

  static Mat2 identity() { return {}; }
  static Mat2 partial_quotient(Letter a);

  BigInt det() const { return e11 * e22 - e12 * e21; }
  BigInt trace() const { return e11 + e22; }

  /// Right-multiplies in place by [[a,1],[1,0]].
  void push_letter(Letter a);

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.e11 == y.e11 && x.e12 == y.e12 && x.e21 == y.e21 && x.e22 == y.e22;
  }
};

Mat2 pow(Mat2 base, std::size_t exponent);

/// Left-to-right product of the partial-quotient matrices of `w`.
Mat2 cf_matrix(const Word& w);

/// K(w): denominator of [0; w]. K(empty) = 1.
BigInt continuant(const Word& w);

/// Trace of cf_matrix(w). T(empty) = 2.
BigInt trace(const Word& w);

/// Natural log of a positive big integer from its leading 64 bits and bit
/// length. Relative error below 1e-15.
double log_big(const BigInt& n);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double value) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Pull-style letter generator. Returns nullopt when exhausted.
using LetterSource = std::function<std::optional<Letter>()>;

/// Yields the letters of `w` once, then nullopt.
LetterSource word_source(Word w);
/// Cycles `period` forever after `preperiod`.
LetterSource periodic_source(Word period, Word preperiod = {});

struct LogStreamEntry {
  std::size_t index = 0;  // n
  double log_q = 0.0;     // log Q_n
  double ratio = 0.0;     // Q_n / Q_{n-1}
};

/// Single-consumer stream of (n, log Q_n, Q_n/Q_{n-1}) driven by the ratio
/// recurrence r_n = a_n + 1/r_{n-1}.
class LogQStream {
 public:
  explicit LogQStream(LetterSource source);

  /// Next entry, or nullopt once the source is exhausted.
  std::optional<LogStreamEntry> next();

  /// Next entry; throws truncated_stream if the source is exhausted.
  LogStreamEntry require_next();

  std::size_t index() const noexcept { return index_; }

 private:
  LetterSource source_;
  std::size_t index_ = 0;
  double ratio_ = 0.0;
  CompensatedSum log_q_;
};

/// Materializes the first `n_max` entries of a LogQStream.
std::vector<LogStreamEntry> log_q_stream(LetterSource source, std::size_t n_max);

/// Value of the finite continued fraction [w_1; w_2, ..., w_D].
double tail_value(const Word& w);
double tail_value(std::span<const Letter> letters);

}  // namespace levy
