#ifndef STRATTR_FAMILIES_HPP
#define STRATTR_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/generators.hpp"
#include "strattr/word.hpp"

namespace strattr {

// ---------------------------------------------------------------------------
// Standard Sturmian words

enum class SturmianChoice { gamma1, gamma2, fallback };

std::string to_string(SturmianChoice choice);

struct SturmianAttractorResult {
  std::size_t eta = 0;  ///< longest palindromic proper prefix of pi(w)
  Attractor gamma1;     ///< {eta + 1, eta + 2}
  /// {|w| - eta - 3, |w| - eta - 2}; nullopt when that falls off the word.
  std::optional<Attractor> gamma2;
  bool gamma1_valid = false;
  bool gamma2_valid = false;
  /// pi(w) is a power of one letter (w = a^k b or b^k a, k >= 2), so it has
  /// no factorization QxyP = PyxQ with x != y.
  bool degenerate = false;
  SturmianChoice predicted = SturmianChoice::gamma1;  ///< the set tried first
  SturmianChoice chosen = SturmianChoice::gamma1;
  Attractor attractor;  ///< the chosen set
};

/// Tries first the set singled out by the PER decomposition pi(w) = QxyP
/// (gamma2 when x is the second-to-last letter of w, else gamma1), then the
/// other one. When neither verifies and pi(w) is unary the
/// two last positions are used instead and the result is flagged degenerate.
/// Throws std::domain_error if w is not standard or |w| < 2, and
/// theorem_violation if no candidate verifies.
SturmianAttractorResult sturmian_attractor(const Word& w);

// ---------------------------------------------------------------------------
// Thue-Morse words

struct TmAttractor {
  std::size_t n = 0;
  Attractor positions;  ///< {2^(n-1) + 1} ∪ {3 * 2^(i-2) : 2 <= i <= n}
};

/// Throws std::domain_error for n < 3.
TmAttractor thue_morse_attractor(std::size_t n);

/// gamma ∪ {p}. Throws std::domain_error if p is already present or falls
/// outside the host word.
Attractor attractor_add(const Attractor& gamma, std::size_t p);
/// gamma with `from` replaced by `to`. MOVE(x, x) is the identity.
Attractor attractor_move(const Attractor& gamma, std::size_t from, std::size_t to);

/// Gamma_{n+1} from Gamma_n: ADD(2^n + 1) then MOVE(2^(n-1) + 1, 3 * 2^(n-1)),
/// over the host t_{n+1}. Throws std::domain_error for n < 3.
Attractor tm_recurrence_step(const Attractor& gamma_n, std::size_t n);

/// The set {3 * 2^(n+1-i) : 2 <= i <= n+1} = {3, 6, ..., 3 * 2^(n-1)}.
std::vector<std::size_t> tm_crossing_set(std::size_t n);

/// True iff every factor of t_n has an occurrence in t_{n+1} containing a
/// position of `positions` (tm_crossing_set(n) by default).
bool tm_crossing_lemma_check(std::size_t n,
                             const std::optional<std::vector<std::size_t>>& positions = {});

struct TmGammaReport {
  std::size_t n = 0;
  bool exact = false;                   ///< value is gamma*(t_n)
  std::size_t value = 0;                ///< gamma* or a lower bound
  std::size_t lower_bound = 0;          ///< factor-complexity bound
  std::size_t rejected_below = 0;       ///< (exhaustive only) subsets of size value - 1
  std::optional<Attractor> minimum;     ///< a minimum attractor when exact
  bool at_least_three() const noexcept { return value >= 3; }
};

/// n <= 4: exhaustive subset search; n = 5: branch and bound; larger n:
/// factor-complexity lower bound only. Throws std::domain_error for n <= 2.
TmGammaReport tm_gamma_lower(std::size_t n, std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------------------
// Epistandard words

struct EpistandardAttractorResult {
  Word word;
  /// Last directive position of each letter, plus |t| for an appended letter.
  Attractor candidate;
  bool candidate_valid = false;
  bool from_minimizer = false;
  Attractor attractor;
};

/// Word Pal(directive)·appended ('\0' for none) and its size-sigma attractor.
/// Falls back to exact minimization when the candidate fails; throws
/// theorem_violation if the result does not have exactly sigma positions.
EpistandardAttractorResult epistandard_attractor(const Word& directive, char appended,
                                                 std::uint64_t node_budget = kDefaultNodeBudget);
EpistandardAttractorResult epistandard_attractor(const EpistandardSpec& spec,
                                                 std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------------------
// de Bruijn words

struct DeBruijnBounds {
  std::size_t sigma = 2;
  std::size_t k = 1;
  std::size_t n = 0;  ///< sigma^k
  Word word;          ///< linear form, length n + k - 1
  std::size_t lz_count = 0;
  double epsilon = 0;            ///< 2 (1 + log log(sigma n)) / log n, base sigma
  double lower = 0;              ///< n / log n = n / k
  std::optional<double> upper;   ///< n / ((1 - epsilon) log n) + 1, when epsilon < 1
  std::optional<MinimizeResult> exact;

  bool lz_above_lower() const noexcept { return static_cast<double>(lz_count) >= lower; }
};

DeBruijnBounds de_bruijn_bounds(std::size_t sigma, std::size_t k, bool compute_exact = false,
                                std::uint64_t node_budget = kDefaultNodeBudget);

/// Largest distance between consecutive positions (0 for fewer than two).
std::size_t max_gap(const Attractor& gamma);

}  // namespace strattr

#endif  // STRATTR_FAMILIES_HPP
