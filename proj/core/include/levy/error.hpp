#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levy {

enum class ErrorCode {
  invalid_word,
  domain,
  precision,
  truncated_stream,
  no_parents,
  not_factorizable,
  insufficient_digits,
  not_a_factor,
  out_of_range,
  no_convergence,
  invalid_pair,
  parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` distinguishes the cases so
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the mechanical-word generator when a floor boundary cannot be
/// resolved after the maximum number of convergent refinements.
class PrecisionError : public Error {
 public:
  PrecisionError(std::size_t index, const std::string& what)
      : Error(ErrorCode::precision, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Raised by inversion when the target lies outside [f(0), f(1)].
class OutOfRangeError : public Error {
 public:
  OutOfRangeError(double lower, double upper, const std::string& what)
      : Error(ErrorCode::out_of_range, what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace levy
