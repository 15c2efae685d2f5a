#ifndef STRATTR_BOUNDS_HPP
#define STRATTR_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "strattr/attractor.hpp"
#include "strattr/word.hpp"

namespace strattr {

class CollageSystem;

/// Number of distinct letters occurring in w (every letter must be hit).
std::size_t lower_bound_alphabet(const Word& w);

struct FactorComplexityBound {
  std::size_t value = 0;  ///< max(sigma, max_k ceil(F_k / k))
  std::size_t k = 1;      ///< smallest k attaining the factor-count maximum
};

/// An attractor of size g yields at most g·k distinct length-k factors.
FactorComplexityBound factor_complexity_bound(const Word& w);
std::size_t lower_bound_factor_complexity(const Word& w);

/// ceil((|w| - r) / (r + 1)) with r the longest repeated factor length.
std::size_t lower_bound_repeated(const Word& w);

struct BoundsReport {
  std::size_t lb_alphabet = 0;
  std::size_t lb_factor_complexity = 0;
  std::size_t lb_factor_complexity_k = 1;
  std::size_t lb_repeated = 0;
  std::size_t longest_repeated = 0;
  std::size_t bwt_runs = 0;  ///< r, runs of bwt(w$) including the sentinel's
  std::size_t ub_bwt = 0;    ///< |attractor_from_bwt(w)|
  std::size_t ub_lz = 0;     ///< number of LZ phrases
  std::optional<std::size_t> ub_collage;
  std::optional<std::size_t> exact;
  bool exact_optimal = false;
  std::uint64_t nodes = 0;

  std::size_t best_lower() const noexcept;
  std::size_t best_upper() const noexcept;
  /// max(lower bounds) <= exact <= min(upper bounds), when exact is known.
  bool consistent() const noexcept;
};

struct BoundsOptions {
  bool compute_exact = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
  const CollageSystem* collage = nullptr;  ///< a system known to generate w
};

BoundsReport compute_bounds(const Word& w, const BoundsOptions& options = {});

// ---------------------------------------------------------------------------
// Executable forms of the gamma* inequalities. `conclusive` is false when an
// exact computation ran out of budget; `holds` is only meaningful otherwise.

struct ConcatenationReport {
  std::size_t gamma_u = 0, gamma_v = 0, gamma_uv = 0;
  bool conclusive = false;
  bool holds = false;  ///< gamma*(uv) <= gamma*(u) + gamma*(v) + 1
  bool tight = false;  ///< equality
};
ConcatenationReport check_concatenation_bound(const Word& u, const Word& v,
                                              std::uint64_t node_budget = kDefaultNodeBudget);

struct PowerReport {
  std::size_t exponent = 1;
  std::size_t gamma_u = 0, gamma_power = 0;
  bool conclusive = false;
  bool holds = false;        ///< gamma*(u) <= gamma*(u^m) <= gamma*(u) + 1
  bool lower_tight = false;  ///< gamma*(u^m) == gamma*(u)
  bool upper_tight = false;  ///< gamma*(u^m) == gamma*(u) + 1
};
/// Throws std::domain_error if m == 0.
PowerReport check_power_bounds(const Word& u, std::size_t m,
                               std::uint64_t node_budget = kDefaultNodeBudget);

struct ConjugateReport {
  std::size_t gamma_u = 0, gamma_v = 0;
  bool conclusive = false;
  bool holds = false;  ///< |gamma*(u) - gamma*(v)| <= 1
  std::size_t difference = 0;
};
/// Throws std::domain_error if u and v are not conjugate.
ConjugateReport check_conjugate_bound(const Word& u, const Word& v,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace strattr

#endif  // STRATTR_BOUNDS_HPP
