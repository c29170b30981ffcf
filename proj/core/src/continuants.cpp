#include "levy/continuants.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "levy/error.hpp"

namespace levy {
namespace {

void check_letter(Letter letter) {
  if (letter <= 0) {
    throw Error(ErrorCode::invalid_word,
                "partial quotient must be positive, got " + std::to_string(letter));
  }
}

static_assert(GMP_LIMB_BITS == 64, "log_big assumes 64-bit limbs");

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::for_each(letters_.begin(), letters_.end(), check_letter);
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw Error(ErrorCode::domain, "substring out of bounds");
  }
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

Word Word::drop_back(std::size_t k) const {
  return prefix(size() >= k ? size() - k : 0);
}

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

void Word::push_back(Letter letter) {
  check_letter(letter);
  letters_.push_back(letter);
}

std::size_t Word::count(Letter letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::optional<std::size_t> Word::find(const Word& needle) const {
  auto it = std::search(letters_.begin(), letters_.end(),
                        needle.letters_.begin(), needle.letters_.end());
  if (it == letters_.end() && !needle.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

Word Word::power(std::size_t k) const {
  Word out;
  out.letters_.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i) out.append(*this);
  return out;
}

Mat2 Mat2::partial_quotient(Letter a) {
  check_letter(a);
  return Mat2{BigInt(static_cast<long>(a)), BigInt(1), BigInt(1), BigInt(0)};
}

void Mat2::push_letter(Letter a) {
  check_letter(a);
  // [[e11,e12],[e21,e22]] * [[a,1],[1,0]] = [[a e11 + e12, e11], [a e21 + e22, e21]]
  const auto ua = static_cast<unsigned long>(a);
  mpz_addmul_ui(e12.get_mpz_t(), e11.get_mpz_t(), ua);
  mpz_addmul_ui(e22.get_mpz_t(), e21.get_mpz_t(), ua);
  std::swap(e11, e12);
  std::swap(e21, e22);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
              x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

Mat2 pow(Mat2 base, std::size_t exponent) {
  Mat2 result;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

// Balanced product tree; short runs are folded in letter by letter.
Mat2 product(const Word& w, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 64) {
    Mat2 m;
    for (std::size_t i = lo; i < hi; ++i) m.push_letter(w[i]);
    return m;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return product(w, lo, mid) * product(w, mid, hi);
}

}  // namespace

Mat2 cf_matrix(const Word& w) { return product(w, 0, w.size()); }

BigInt continuant(const Word& w) { return cf_matrix(w).e11; }

BigInt trace(const Word& w) { return cf_matrix(w).trace(); }

double log_big(const BigInt& n) {
  if (sgn(n) <= 0) throw Error(ErrorCode::domain, "log_big requires a positive argument");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 64) {
    const auto v = static_cast<long double>(mpz_getlimbn(n.get_mpz_t(), 0));
    return static_cast<double>(std::log(v));
  }
  const std::size_t shift = bits - 64;
  BigInt top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), shift);
  const auto mantissa = static_cast<long double>(mpz_getlimbn(top.get_mpz_t(), 0));
  constexpr long double ln2 = 0.693147180559945309417232121458176568L;
  return static_cast<double>(std::log(mantissa) + static_cast<long double>(shift) * ln2);
}

CompensatedSum& CompensatedSum::operator+=(double value) noexcept {
  const double t = sum_ + value;
  if (std::fabs(sum_) >= std::fabs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
  return *this;
}

LetterSource word_source(Word w) {
  return [w = std::move(w), pos = std::size_t{0}]() mutable -> std::optional<Letter> {
    if (pos >= w.size()) return std::nullopt;
    return w[pos++];
  };
}

LetterSource periodic_source(Word period, Word preperiod) {
  if (period.empty()) throw Error(ErrorCode::domain, "period must be nonempty");
  return [period = std::move(period), preperiod = std::move(preperiod),
          pos = std::size_t{0}]() mutable -> std::optional<Letter> {
    const std::size_t i = pos++;
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  };
}

LogQStream::LogQStream(LetterSource source) : source_(std::move(source)) {}

std::optional<LogStreamEntry> LogQStream::next() {
  const auto letter = source_();
  if (!letter) return std::nullopt;
  check_letter(*letter);
  const auto a = static_cast<double>(*letter);
  ratio_ = index_ == 0 ? a : a + 1.0 / ratio_;
  ++index_;
  log_q_ += std::log(ratio_);
  return LogStreamEntry{index_, log_q_.value(), ratio_};
}

LogStreamEntry LogQStream::require_next() {
  auto entry = next();
  if (!entry) {
    throw Error(ErrorCode::truncated_stream,
                "letter source exhausted after " + std::to_string(index_) + " letters");
  }
  return *entry;
}

std::vector<LogStreamEntry> log_q_stream(LetterSource source, std::size_t n_max) {
  LogQStream stream(std::move(source));
  std::vector<LogStreamEntry> out;
  out.reserve(n_max);
  for (std::size_t i = 0; i < n_max; ++i) out.push_back(stream.require_next());
  return out;
}

double tail_value(std::span<const Letter> letters) {
  if (letters.empty()) throw Error(ErrorCode::domain, "tail_value requires a nonempty word");
  double v = static_cast<double>(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) {
    check_letter(letters[i]);
    v = static_cast<double>(letters[i]) + 1.0 / v;
  }
  return v;
}

double tail_value(const Word& w) { return tail_value(w.letters()); }

}  // namespace levy
