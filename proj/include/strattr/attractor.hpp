#ifndef STRATTR_ATTRACTOR_HPP
#define STRATTR_ATTRACTOR_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "strattr/word.hpp"

namespace strattr {

/// A set of 1-based positions of a host word of length host_length().
/// Positions are kept sorted and distinct.
class Attractor {
 public:
  Attractor() = default;
  /// Sorts `positions`; throws std::domain_error on duplicates or on a
  /// position outside [1, host_length].
  Attractor(std::vector<std::size_t> positions, std::size_t host_length);
  Attractor(std::initializer_list<std::size_t> positions, std::size_t host_length);

  /// Every position 1..n.
  static Attractor full(std::size_t host_length);

  const std::vector<std::size_t>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  std::size_t host_length() const noexcept { return host_length_; }
  bool contains(std::size_t position) const;

  /// Same positions over a longer host. Throws std::domain_error if some
  /// position would fall outside.
  Attractor with_host_length(std::size_t host_length) const;

  auto begin() const noexcept { return positions_.begin(); }
  auto end() const noexcept { return positions_.end(); }

  friend bool operator==(const Attractor&, const Attractor&) = default;

 private:
  std::vector<std::size_t> positions_;
  std::size_t host_length_ = 0;
};

/// Certificate for a negative answer: a factor none of whose occurrences
/// contains an attractor position, with its complete occurrence list.
struct Witness {
  Word factor;
  std::vector<Occurrence> occurrences;
};

struct Verdict {
  std::optional<Witness> witness;  ///< set iff the set is not an attractor

  bool valid() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return valid(); }
};

/// Suffix-array based check. On failure the witness is a shortest uncovered
/// factor (lexicographically least among those). Throws std::domain_error if
/// the host length of `gamma` differs from |w|.
Verdict verify_attractor(const Word& w, const Attractor& gamma);
bool is_attractor(const Word& w, const Attractor& gamma);

/// One position set per distinct factor f: S_f = { j : some occurrence of f
/// contains j }. Gamma is an attractor iff it meets every constraint.
struct HittingSetInstance {
  std::size_t universe = 0;  ///< positions 1..universe
  std::vector<std::vector<std::size_t>> constraints;
};

/// Reduced instance: duplicate and superset constraints removed, sorted by
/// (size, lexicographic contents).
HittingSetInstance coverage_sets(const Word& w);
/// The same constraints before superset elimination (one per suffix-tree
/// edge, i.e. per class of factors sharing an occurrence set).
HittingSetInstance coverage_sets_unreduced(const Word& w);

/// Node budget used when none is given (overridable per call).
inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

struct MinimizeOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Known lower bound on the optimum; search stops as soon as it is met.
  std::size_t lower_bound = 0;
};

struct MinimizeResult {
  Attractor attractor;
  bool optimal = false;     ///< minimality proven within budget
  bool lex_least = false;   ///< lexicographically least among optimal sets
  std::uint64_t nodes = 0;  ///< search nodes expanded
};

/// Exact minimum hitting set by branch and bound. With optimal = true the
/// result is a smallest attractor and, when lex_least is also set, the
/// lexicographically least one. When the budget runs out the best attractor
/// found so far is returned with optimal = false.
MinimizeResult minimal_attractor(const Word& w, const MinimizeOptions& options = {});

/// gamma*(w). Throws strattr::resource_error if optimality is not proven.
std::size_t gamma_star(const Word& w, std::uint64_t node_budget = kDefaultNodeBudget);

/// Solves an arbitrary hitting-set instance (positions 1..universe).
MinimizeResult solve_hitting_set(const HittingSetInstance& instance,
                                 const MinimizeOptions& options = {});

/// Exhaustive subset enumeration in increasing size, for small words.
struct ExhaustiveResult {
  std::size_t gamma_star = 0;
  Attractor first;                   ///< lexicographically least minimum set
  std::size_t rejected_below = 0;    ///< subsets of size gamma_star - 1 rejected
  std::size_t minimum_count = 0;     ///< number of minimum attractors
};

/// Throws std::domain_error for |w| > 24.
ExhaustiveResult exhaustive_minimum(const Word& w);

}  // namespace strattr

#endif  // STRATTR_ATTRACTOR_HPP
