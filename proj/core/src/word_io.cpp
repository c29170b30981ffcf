#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "levy/error.hpp"
#include "levy/words.hpp"

namespace levy {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text.empty()) return Word{};
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                               : comma - start));
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::parse, "cannot parse letter '" + std::string(token) + "'");
    }
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(letters));
}

std::vector<Word> read_words(std::istream& in) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_word(line));
  }
  return out;
}

void write_words(std::ostream& out, std::span<const Word> words) {
  for (const Word& w : words) out << format_word(w) << '\n';
}

}  // namespace levy
