#include "levy/error.hpp"

namespace levy {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_word: return "invalid-word";
    case ErrorCode::domain: return "domain";
    case ErrorCode::precision: return "precision";
    case ErrorCode::truncated_stream: return "truncated-stream";
    case ErrorCode::no_parents: return "no-parents";
    case ErrorCode::not_factorizable: return "not-factorizable";
    case ErrorCode::insufficient_digits: return "insufficient-digits";
    case ErrorCode::not_a_factor: return "not-a-factor";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::invalid_pair: return "invalid-pair";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

}  // namespace levy
