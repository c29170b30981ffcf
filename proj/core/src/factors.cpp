#include <algorithm>
#include <cmath>
#include <string>

#include "levy/error.hpp"
#include "levy/words.hpp"

namespace levy {
namespace {

// Smallest j with q_j >= n + 1.
std::size_t covering_index(const SlopeCF& slope, std::size_t n) {
  return slope.first_index_with_denominator_above(static_cast<std::int64_t>(n));
}

}  // namespace

std::set<Word> factor_set(const Word& w, std::size_t n) {
  if (n > w.size()) {
    throw Error(ErrorCode::domain, "factor length " + std::to_string(n) +
                                       " exceeds word length " + std::to_string(w.size()));
  }
  std::set<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

std::size_t complexity(const Word& w, std::size_t n) { return factor_set(w, n).size(); }

std::size_t sturmian_factor_window(const SlopeCF& slope, std::size_t n) {
  // Every length-n factor lies in M_j M_j^{--} (q_j >= n + 1), which occurs
  // inside M_{j+1} M_j, a prefix of M_{j+2}; s_{theta,0} = a s_{theta,theta}.
  const std::size_t j = covering_index(slope, n);
  return static_cast<std::size_t>(slope.convergent(j + 2).q()) + 1;
}

bool is_sturmian_factor(const Word& m, const SlopeCF& slope, const Alphabet& alphabet) {
  if (m.empty()) return true;
  const std::size_t j = covering_index(slope, m.size());
  const Word host = standard_prefix(slope, alphabet,
                                    static_cast<std::size_t>(slope.convergent(j + 2).q()));
  return host.find(m).has_value();
}

FactorDecomposition classify_factor(const Word& m, const SlopeCF& slope,
                                    const Alphabet& alphabet) {
  if (m.empty()) throw Error(ErrorCode::domain, "cannot classify the empty word");
  if (!is_sturmian_factor(m, slope, alphabet)) {
    throw Error(ErrorCode::not_a_factor, format_word(m) + " is not a factor of the Sturmian word");
  }
  std::size_t k = 0;
  while (static_cast<std::size_t>(slope.convergent(k + 1).q()) <= m.size()) ++k;

  const auto words = standard_words(slope, alphabet, k + 1);
  const Word& m_prev = words[k];      // M_{k-1}
  const Word& m_k = words[k + 1];     // M_k
  const Word& m_next = words[k + 2];  // M_{k+1}

  const Word periodic = m_k.power(slope.digit(k + 1) + 1) + m_prev;
  if (auto offset = periodic.find(m)) {
    return {k, PeriodicEmbedding{*offset}};
  }

  const std::size_t min_v = m_k.size() - 1;
  const std::size_t max_v = std::min(m.size(), m_next.size());
  for (std::size_t v_len = max_v + 1; v_len-- > min_v;) {
    const std::size_t u_len = m.size() - v_len;
    if (u_len <= m_next.size() && m.prefix(u_len) == m_next.suffix(u_len) &&
        m.suffix(v_len) == m_next.prefix(v_len)) {
      return {k, BorderSplit{m.prefix(u_len), m.suffix(v_len)}};
    }
  }
  throw Error(ErrorCode::domain, "factor " + format_word(m) + " admits no decomposition");
}

Morphism::Morphism(Alphabet source, Word image_a, Word image_b)
    : source_(source), image_a_(std::move(image_a)), image_b_(std::move(image_b)) {
  if (image_a_.empty() || image_b_.empty()) {
    throw Error(ErrorCode::domain, "morphism images must be nonempty");
  }
  if (image_a_ + image_b_ == image_b_ + image_a_) {
    throw Error(ErrorCode::domain, "morphism must satisfy phi(ab) != phi(ba)");
  }
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  return Morphism(alphabet, Word{alphabet.a}, Word{alphabet.b});
}

std::size_t Morphism::h() const noexcept { return std::max(image_a_.size(), image_b_.size()); }

double Morphism::c_phi() const {
  const double diff = log_big(continuant(image_a_)) - log_big(continuant(image_b_));
  return std::exp(std::fabs(diff));
}

const Word& Morphism::image(Letter letter) const {
  if (letter == source_.a) return image_a_;
  if (letter == source_.b) return image_b_;
  throw Error(ErrorCode::invalid_word,
              "letter " + std::to_string(letter) + " is not in the morphism's source alphabet");
}

Word apply_morphism(const Morphism& phi, const Word& w) {
  Word out;
  for (Letter letter : w) out.append(phi.image(letter));
  return out;
}

}  // namespace levy
