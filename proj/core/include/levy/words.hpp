#pragma once

// Generation of mechanical, Christoffel, standard and xi words over a
// two-letter alphabet of positive integers, factor sets, and morphisms.

#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "levy/continuants.hpp"
#include "levy/fraction.hpp"

namespace levy {

/// Ordered pair of letters 1 <= a < b.
struct Alphabet {
  Alphabet(Letter a, Letter b);

  Letter a;
  Letter b;

  /// max{b/a, a/b}.
  double c() const noexcept { return static_cast<double>(b) / static_cast<double>(a); }
  Letter letter(bool is_b) const noexcept { return is_b ? b : a; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// First n letters of the lower mechanical word s_{theta,rho}.
/// `rho` must lie in [0, 1).
Word mechanical_lower(const Fraction& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet);

/// Irrational-slope variant. The floor values come from convergents with
/// q_k > 2 n^2; a fractional part within m/q_k^2 of an integer triggers a
/// refinement to the next convergent (at most five), after which a
/// PrecisionError naming the index is thrown.
Word mechanical_lower(const SlopeCF& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet);

/// Upper mechanical word s'_{theta,rho} (ceilings instead of floors).
Word mechanical_upper(const Fraction& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet);
Word mechanical_upper(const SlopeCF& theta, const Fraction& rho, std::size_t n,
                      const Alphabet& alphabet);

/// Lower Christoffel word w_{p/q}: the length-q prefix of s_{p/q,0}.
Word christoffel(const Fraction& pq, const Alphabet& alphabet);

/// cf_matrix(christoffel(pq)), built by descending the Stern-Brocot tree and
/// multiplying parent matrices (w_mediant = w_lower w_upper).
Mat2 christoffel_matrix(const Fraction& pq, const Alphabet& alphabet);

/// (w_lower, w_upper) for the Stern-Brocot parents of p/q. Requires q >= 2.
std::pair<Word, Word> standard_factorization(const Fraction& pq, const Alphabet& alphabet);

/// M_{-1} = b, M_0 = a, M_n = M_{n-1}^{d_n} M_{n-2}. Element i of the result
/// is M_{i-1}, so the vector has k_max + 2 entries.
std::vector<Word> standard_words(const SlopeCF& slope, const Alphabet& alphabet,
                                 std::size_t k_max);

/// First n letters of s_{theta,0}, taken from the Christoffel word of the
/// first convergent with q_k > n + 1.
Word sturmian_prefix(const SlopeCF& slope, const Alphabet& alphabet, std::size_t n);

/// First n letters of s_{theta,theta} = lim M_k.
Word standard_prefix(const SlopeCF& slope, const Alphabet& alphabet, std::size_t n);

/// Prefix of xi_{a,b}: letter 1 is a, letters 2^m+1 .. 2^{m+1} are b for
/// even m and a for odd m.
Word xi_word(const Alphabet& alphabet, std::size_t n);

/// Letter source over the infinite xi_{a,b} word.
LetterSource xi_source(const Alphabet& alphabet);

/// Distinct length-n factors of w.
std::set<Word> factor_set(const Word& w, std::size_t n);

/// |factor_set(w, n)|.
std::size_t complexity(const Word& w, std::size_t n);

/// Prefix length of s_{theta,0} that contains every length-n factor of the
/// infinite word: q_{j+2} + 1 for the first j with q_j >= n + 1.
std::size_t sturmian_factor_window(const SlopeCF& slope, std::size_t n);

/// Whether `m` is a factor of the Sturmian word of the given slope.
bool is_sturmian_factor(const Word& m, const SlopeCF& slope, const Alphabet& alphabet);

/// Factor decomposition of a Sturmian factor M with q_k <= |M| <= q_{k+1}-1.
struct PeriodicEmbedding {
  std::size_t offset;  // first occurrence in M_k^j M_{k-1}
};
struct BorderSplit {
  Word suffix_u;  // suffix of M_{k+1}
  Word prefix_v;  // prefix of M_{k+1}, |V| >= q_k - 1
};
struct FactorDecomposition {
  std::size_t k;
  std::variant<PeriodicEmbedding, BorderSplit> tag;

  bool is_periodic() const noexcept { return tag.index() == 0; }
};

/// Case (a) is reported whenever M embeds in the periodic word
/// M_k ... M_k M_{k-1}; otherwise the (U, V) split with the longest V.
/// Throws not_a_factor if M does not occur in the Sturmian word.
FactorDecomposition classify_factor(const Word& m, const SlopeCF& slope,
                                    const Alphabet& alphabet);

/// Letter substitution a -> image_a, b -> image_b from a two-letter source
/// alphabet into words over the positive integers.
class Morphism {
 public:
  Morphism(Alphabet source, Word image_a, Word image_b);

  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& source() const noexcept { return source_; }
  const Word& image_a() const noexcept { return image_a_; }
  const Word& image_b() const noexcept { return image_b_; }

  /// max{|phi(a)|, |phi(b)|}.
  std::size_t h() const noexcept;
  /// max{K(phi(a))/K(phi(b)), K(phi(b))/K(phi(a))}.
  double c_phi() const;

  const Word& image(Letter letter) const;

 private:
  Alphabet source_;
  Word image_a_;
  Word image_b_;
};

Word apply_morphism(const Morphism& phi, const Word& w);

/// Comma-separated positive integers, e.g. "1,2,3".
std::string format_word(const Word& w);
Word parse_word(std::string_view text);

/// One word per line; blank lines are skipped.
std::vector<Word> read_words(std::istream& in);
void write_words(std::ostream& out, std::span<const Word> words);

}  // namespace levy
