#ifndef STRATTR_COMPRESSORS_HPP
#define STRATTR_COMPRESSORS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/errors.hpp"
#include "strattr/word.hpp"

namespace strattr {

// ---------------------------------------------------------------------------
// Burrows-Wheeler transform

inline constexpr char kDefaultSentinel = '$';

/// Maximal equal-letter run [start, end] (1-based, inclusive) of a string.
struct Run {
  std::size_t start = 1;
  std::size_t end = 1;
  char symbol = 0;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> equal_letter_runs(std::string_view s);

/// bwt(w$) together with its runs and the text position behind each row.
struct BwtOutput {
  std::string transformed;
  char sentinel = kDefaultSentinel;
  std::vector<Run> runs;
  /// text_position_of[r] is the 1-based position in w of the symbol written
  /// at output index r + 1; nullopt for the sentinel row.
  std::vector<std::optional<std::size_t>> text_position_of;
  std::shared_ptr<const Alphabet> alphabet;
};

/// Last column of the sorted rotation multiset of w.
Word bwt_conjugates(const Word& w);

/// BWT of w·sentinel by suffix sorting, the sentinel being smaller than every
/// letter. Throws std::domain_error if w contains the sentinel.
BwtOutput bwt_sentinel(const Word& w, char sentinel = kDefaultSentinel);

/// LF-mapping inversion of bwt_sentinel.
Word invert_bwt(const BwtOutput& bwt);

enum class RunEndpoint { first, last };

/// One text position per run of bwt(w$): the symbol at the first (or last)
/// index of the run. The sentinel's own run contributes nothing.
Attractor attractor_from_bwt(const Word& w, RunEndpoint endpoint = RunEndpoint::first,
                             char sentinel = kDefaultSentinel);

/// True iff bwt_conjugates(w) = b^p a^q with gcd(p, q) = 1 (gcd(0, q) = q).
/// Throws std::domain_error if w uses more than two letters.
bool is_clustered_sturmian(const Word& w);

/// Run-end positions {n_1, n_1 + n_2, ...} of w = c_1^{n_1} ... c_k^{n_k}.
/// Throws std::domain_error if some letter heads two different runs.
Attractor attractor_from_rle(const Word& w);

// ---------------------------------------------------------------------------
// LZ factorization

enum class LzVariant {
  /// Copy sources lie inside the previous phrases p_1 .. p_{i-1}.
  previous_phrases,
  /// Copy sources only need to start before the phrase (may overlap it).
  self_referential,
};

struct LzPhrase {
  enum class Kind { literal, copy };

  Kind kind = Kind::literal;
  std::size_t position = 1;      ///< 1-based start of the phrase in w
  std::size_t length = 1;
  std::size_t source_start = 0;  ///< 1-based start of the leftmost source (copies)
  char symbol = 0;               ///< the letter (literals)

  std::size_t end() const noexcept { return position + length - 1; }
  friend bool operator==(const LzPhrase&, const LzPhrase&) = default;
};

struct LzParse {
  std::vector<LzPhrase> phrases;
  std::size_t text_length = 0;
  LzVariant variant = LzVariant::previous_phrases;

  std::size_t size() const noexcept { return phrases.size(); }
};

/// Greedy left-to-right parse: each phrase is the leftmost occurrence of a
/// letter or the longest prefix of the remaining suffix that occurs in the
/// allowed source region.
LzParse lz_parse(const Word& w, LzVariant variant = LzVariant::previous_phrases);
Word lz_decode(const LzParse& parse, const std::shared_ptr<const Alphabet>& alphabet);

/// Last position of every phrase.
Attractor attractor_from_lz(const Word& w, LzVariant variant = LzVariant::previous_phrases);

// ---------------------------------------------------------------------------
// Collage systems

namespace collage {

struct Terminal {
  char symbol = 'a';
};
/// X -> left right
struct Concat {
  std::size_t left = 0;
  std::size_t right = 0;
};
/// X -> base^exponent, exponent >= 2
struct Power {
  std::size_t base = 0;
  std::size_t exponent = 2;
};
/// X -> source[from, to], 1-based inclusive positions of source's expansion
struct Slice {
  std::size_t source = 0;
  std::size_t from = 1;
  std::size_t to = 1;
};

}  // namespace collage

struct CollageRule {
  std::string name;
  std::variant<collage::Terminal, collage::Concat, collage::Power, collage::Slice> body;
};

/// Grammar over the four rule kinds. Nonterminals are rule indices; rules may
/// reference each other in any order as long as the system is acyclic.
class CollageSystem {
 public:
  CollageSystem() = default;
  /// Throws std::domain_error when the rules are cyclic or malformed.
  CollageSystem(std::vector<CollageRule> rules, std::size_t axiom);

  std::size_t add_terminal(std::string name, char symbol);
  std::size_t add_concat(std::string name, std::size_t left, std::size_t right);
  std::size_t add_power(std::string name, std::size_t base, std::size_t exponent);
  std::size_t add_slice(std::string name, std::size_t source, std::size_t from, std::size_t to);
  void set_axiom(std::size_t axiom);

  std::size_t axiom() const noexcept { return axiom_; }
  const std::vector<CollageRule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  /// Expansion length of nonterminal `x` (saturates at SIZE_MAX).
  std::size_t expansion_length(std::size_t x) const { return lengths_.at(x); }

 private:
  std::size_t append(CollageRule rule);
  void revalidate();

  std::vector<CollageRule> rules_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> topo_order_;
  std::size_t axiom_ = 0;
};

/// Expansion of the axiom. Throws std::domain_error on an empty system.
Word collage_expand(const CollageSystem& g, std::size_t length_cap = kDefaultLengthCap);
std::size_t collage_size(const CollageSystem& g);

/// {A_0 -> a, B_0 -> b} ∪ {A_i -> A_{i-1} B_{i-1}, B_i -> B_{i-1} A_{i-1}}_{i<n}
/// ∪ {A_n -> A_{n-1} B_{n-1}} with axiom A_n; 2n + 1 rules. Requires n >= 1.
CollageSystem thue_morse_collage(std::size_t n);

/// One position per rule reachable from the axiom, taken at the leftmost
/// occurrence of its nonterminal in the derivation tree: the letter itself
/// for terminals, the first symbol after the split for concatenations and
/// powers. Slice rules are not supported (std::domain_error).
Attractor attractor_from_collage(const CollageSystem& g,
                                 std::size_t length_cap = kDefaultLengthCap);

}  // namespace strattr

#endif  // STRATTR_COMPRESSORS_HPP
