#ifndef STRATTR_GENERATORS_HPP
#define STRATTR_GENERATORS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strattr/errors.hpp"
#include "strattr/word.hpp"

namespace strattr {

// ---------------------------------------------------------------------------
// Thue-Morse

/// t_n = phi^n(a) with phi(a) = ab, phi(b) = ba; |t_n| = 2^n.
Word thue_morse(std::size_t n, std::size_t length_cap = kDefaultLengthCap);

// ---------------------------------------------------------------------------
// Standard Sturmian words

/// q_0 >= 0 and q_i > 0 for i >= 1.
struct DirectiveSequence {
  std::vector<std::size_t> q;

  /// Throws std::domain_error if some q_i (i >= 1) is zero.
  void validate() const;
};

/// s_0 = b, s_1 = a, s_{n+1} = s_n^{q_{n-1}} s_{n-1}: returns s_0 .. s_{m+2}
/// for a directive q_0 .. q_m.
std::vector<Word> standard_sequence(const DirectiveSequence& d,
                                    std::size_t length_cap = kDefaultLengthCap);

/// The last word s_{m+2} of standard_sequence (s_1 = "a" for the empty directive).
Word standard_sturmian(const DirectiveSequence& d, std::size_t length_cap = kDefaultLengthCap);

/// Every directive whose standard word has length in [2, max_length], ordered
/// by word length and then by directive. Distinct directives give distinct
/// words.
std::vector<DirectiveSequence> standard_directives(std::size_t max_length);

/// Words with two coprime periods p, q and length p + q - 2.
bool is_per(const Word& v);

/// Membership in Stand = {a, b} ∪ PER·{ab, ba}, cross-checked against BWT
/// clustering. Throws std::domain_error on more than two letters.
bool is_standard(const Word& w);

/// pi(w) = Q x y P = P y x Q with Q, P palindromes, x != y; Q is the longer one.
struct PerDecomposition {
  Word q;
  char x = 'a';
  char y = 'b';
  Word p;
};

/// Throws std::domain_error when w is not standard or pi(w) has no such
/// factorization (|w| < 4, or pi(w) over a single letter).
PerDecomposition per_decomposition(const Word& w);

// ---------------------------------------------------------------------------
// Palindromic closure and epistandard words

/// Shortest palindrome having w as a prefix.
Word palindromic_right_closure(const Word& w);

/// Result of iterating the palindromic closure over a directive word.
struct PalTrace {
  Word word;
  /// Letter -> the last position at which it was written as a directive letter.
  std::map<char, std::size_t> insertion_positions;
  /// (letter, position) for each directive step, in order.
  std::vector<std::pair<char, std::size_t>> steps;
};

/// Pal(v): Pal(ε) = ε, Pal(wx) = (Pal(w) x)^(+). Throws std::domain_error on
/// an empty directive.
PalTrace pal_closure(const Word& directive, std::size_t length_cap = kDefaultLengthCap);

enum class EpistandardFamily { type_i, type_ii, type_iii };

/// Parameters of the three circularly balanced epistandard families, over
/// letters a_1 .. a_k (letters[0] .. letters[k-1]).
struct EpistandardSpec {
  EpistandardFamily family = EpistandardFamily::type_i;
  std::size_t k = 3;
  std::size_t m = 1;    ///< type i: exponent of a_1, m >= 1
  std::size_t ell = 0;  ///< type ii: 0 <= ell <= k - 4
  std::string letters;  ///< empty means the first k lowercase letters

  /// Throws std::domain_error on out-of-range parameters.
  void validate() const;
  std::string resolved_letters() const;
};

/// The directive word fed to Pal for this family.
Word epistandard_directive(const EpistandardSpec& spec);
/// Letter appended after the closure (a_2 for types i and ii), or '\0'.
char epistandard_appended_letter(const EpistandardSpec& spec);
Word epistandard(const EpistandardSpec& spec, std::size_t length_cap = kDefaultLengthCap);

std::string to_string(EpistandardFamily family);
/// Accepts "i", "ii", "iii" (optionally prefixed by "type-").
EpistandardFamily parse_epistandard_family(std::string_view text);

// ---------------------------------------------------------------------------
// de Bruijn words

/// Lexicographically least de Bruijn sequence over the first sigma letters:
/// concatenation of the Lyndon words whose length divides k.
Word de_bruijn_circular(std::size_t sigma, std::size_t k,
                        std::size_t length_cap = kDefaultLengthCap);
/// Circular word followed by its own (k-1)-prefix; length sigma^k + k - 1.
Word de_bruijn_linear(std::size_t sigma, std::size_t k,
                      std::size_t length_cap = kDefaultLengthCap);

}  // namespace strattr

#endif  // STRATTR_GENERATORS_HPP
