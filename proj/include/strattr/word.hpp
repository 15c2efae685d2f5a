#ifndef STRATTR_WORD_HPP
#define STRATTR_WORD_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace strattr {

/// Finite ordered alphabet. The order is the order in which symbols are
/// declared; rank 0 is the smallest letter.
class Alphabet {
 public:
  /// Throws std::domain_error if `symbols` is empty or has duplicates.
  explicit Alphabet(std::string_view symbols);

  /// Sorted distinct characters of `text` (by char value).
  static Alphabet infer(std::string_view text);

  /// The first `sigma` lowercase letters, "ab...".
  static Alphabet first_letters(std::size_t sigma);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::string_view symbols() const noexcept { return symbols_; }
  char symbol(std::size_t rank) const { return symbols_.at(rank); }
  int rank(char c) const noexcept { return rank_[static_cast<unsigned char>(c)]; }
  bool contains(char c) const noexcept { return rank(c) >= 0; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> rank_{};
};

/// A 1-based (start, length) placement of a factor inside a host word.
struct Occurrence {
  std::size_t start = 1;
  std::size_t length = 1;

  std::size_t end() const noexcept { return start + length - 1; }
  bool contains(std::size_t position) const noexcept {
    return start <= position && position <= end();
  }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Finite word over an Alphabet. Positions are 1-based: at(1) .. at(size()).
///
/// Equality compares the symbol sequence only; ordering (lex_less) uses the
/// ranks of the left operand's alphabet.
class Word {
 public:
  /// Empty word over the one-letter alphabet "a".
  Word();
  /// Infers the alphabet from `text`; throws std::domain_error on empty text.
  explicit Word(std::string_view text);
  /// Throws std::domain_error if a symbol of `text` is not in `alphabet`.
  Word(std::string_view text, Alphabet alphabet);
  Word(std::string_view text, std::shared_ptr<const Alphabet> alphabet);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }
  const std::string& str() const noexcept { return text_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }

  /// 1-based access; throws std::out_of_range.
  char at(std::size_t position) const;
  /// w[i, j], 1-based inclusive; i = j + 1 yields the empty word.
  Word factor(std::size_t i, std::size_t j) const;
  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;
  Word reversed() const;
  /// Rotation starting at 0-based offset `shift`: w[shift+1..n] w[1..shift].
  Word rotation(std::size_t shift) const;
  Word power(std::size_t exponent) const;
  Word operator+(const Word& other) const;
  Word operator+(char symbol) const;

  /// Alphabet ranks of the symbols, in text order.
  std::vector<int> codes() const;
  /// Number of distinct symbols that actually occur.
  std::size_t distinct_symbols() const;

  friend bool operator==(const Word& a, const Word& b) { return a.text_ == b.text_; }

 private:
  std::string text_;
  std::shared_ptr<const Alphabet> alphabet_;
};

/// Lexicographic comparison under the alphabet order of `a`.
bool lex_less(const Word& a, const Word& b);

bool is_palindrome(const Word& w);

/// eta: the largest l < |w| with w[1, l] a palindrome (0 for the empty prefix).
/// Throws std::out_of_range on the empty word.
std::size_t longest_palindromic_proper_prefix(const Word& w);

/// Length of the longest palindromic suffix (|w| when w is itself a palindrome).
std::size_t longest_palindromic_suffix(const Word& w);

/// All |w| rotations, starting from w itself; duplicates retained.
std::vector<Word> conjugates(const Word& w);
bool are_conjugate(const Word& u, const Word& v);

/// Least rotation. Throws std::domain_error if w is not primitive.
Word lyndon_conjugate(const Word& w);
/// 0-based shift of the lexicographically least rotation (first one on ties).
std::size_t least_rotation_shift(const Word& w);

bool is_primitive(const Word& w);
std::size_t smallest_period(const Word& w);
/// p need not divide |w|; every p >= |w| is a period.
bool has_period(const Word& w, std::size_t p);
/// All periods p in [1, |w|], ascending.
std::vector<std::size_t> periods(const Word& w);

/// F_k: number of distinct length-k factors. Throws std::out_of_range unless
/// 1 <= k <= |w|.
std::size_t distinct_factor_count(const Word& w, std::size_t k);
/// Whole profile: result[k] = F_k for 0 <= k <= |w| (result[0] = 1).
std::vector<std::size_t> factor_complexity(const Word& w);

/// Longest factor with at least two (possibly overlapping) occurrences; 0 if
/// every letter is distinct. Throws std::out_of_range on the empty word.
std::size_t longest_repeated_factor_length(const Word& w);

/// Prefix-function (border lengths) over integer codes.
std::vector<std::size_t> prefix_function(const std::vector<int>& codes);

}  // namespace strattr

#endif  // STRATTR_WORD_HPP
