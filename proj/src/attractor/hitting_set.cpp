#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "bitset.hpp"
#include "strattr/attractor.hpp"
#include "strattr/bounds.hpp"
#include "strattr/errors.hpp"

namespace strattr {

namespace {

using detail::Bitset;
using Unhit = std::vector<std::uint32_t>;

// Minimum hitting set: branch on the positions of the unhit constraint with
// the fewest admissible positions; prune with a greedy packing of pairwise
// disjoint constraints. A second, lexicographically ordered search then picks
// the least optimal set.
class BranchAndBound {
 public:
  BranchAndBound(const HittingSetInstance& instance, std::uint64_t budget, std::size_t lower_bound)
      : n_(instance.universe), budget_(budget), excluded_(n_), scratch_(n_), prefix_(n_) {
    for (const auto& c : instance.constraints) {
      if (c.empty()) throw std::domain_error("hitting-set constraint with no position");
      Bitset b(n_);
      for (std::size_t p : c) {
        if (p < 1 || p > n_) throw std::domain_error("hitting-set position out of range");
        b.set(p - 1);
      }
      sets_.push_back(std::move(b));
    }
    global_lb_ = std::max<std::size_t>(lower_bound, sets_.empty() ? 0 : 1);
  }

  MinimizeResult run() {
    Unhit all(sets_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);

    best_ = greedy(all);
    if (best_.size() > global_lb_) {
      stop_ = false;
      minimize(all);
    }
    MinimizeResult result;
    result.optimal = !exhausted_;
    if (result.optimal) {
      chosen_.clear();
      std::vector<std::size_t> phase_one = best_;
      if (lex_first(all, 0, best_.size())) {
        result.lex_least = true;
      } else {
        best_ = std::move(phase_one);
      }
    }
    std::vector<std::size_t> positions;
    for (std::size_t p : best_) positions.push_back(p + 1);
    result.attractor = Attractor(std::move(positions), n_);
    result.nodes = nodes_;
    return result;
  }

 private:
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  Unhit without_hit(const Unhit& unhit, std::size_t p) const {
    Unhit out;
    out.reserve(unhit.size());
    for (auto u : unhit) {
      if (!sets_[u].test(p)) out.push_back(u);
    }
    return out;
  }

  std::vector<std::size_t> greedy(const Unhit& all) const {
    std::vector<std::size_t> picked;
    Unhit unhit = all;
    while (!unhit.empty()) {
      std::vector<std::size_t> hits(n_, 0);
      for (auto u : unhit) sets_[u].for_each_without(excluded_, [&](std::size_t p) { ++hits[p]; });
      const auto best = std::max_element(hits.begin(), hits.end());
      const std::size_t p = static_cast<std::size_t>(best - hits.begin());
      picked.push_back(p);
      unhit = without_hit(unhit, p);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  // Number of pairwise disjoint admissible sets found greedily; each needs its
  // own position.
  std::size_t packing_bound(const Unhit& unhit, const Bitset& mask) {
    scratch_.clear();
    std::size_t count = 0;
    for (auto u : unhit) {
      if (!sets_[u].intersects_without(mask, scratch_)) {
        ++count;
        scratch_.or_without(sets_[u], mask);
      }
    }
    return count;
  }

  void minimize(const Unhit& unhit) {
    if (stop_ || !tick()) return;
    if (unhit.empty()) {
      if (chosen_.size() < best_.size()) {
        best_ = chosen_;
        std::sort(best_.begin(), best_.end());
        if (best_.size() <= global_lb_) stop_ = true;
      }
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    std::size_t pick = 0, pick_count = std::numeric_limits<std::size_t>::max();
    for (auto u : unhit) {
      const std::size_t c = sets_[u].count_without(excluded_);
      if (c == 0) return;
      if (c < pick_count) {
        pick_count = c;
        pick = u;
      }
    }
    if (chosen_.size() + packing_bound(unhit, excluded_) >= best_.size()) return;

    // Try positions that hit the most open constraints first.
    std::vector<std::pair<std::size_t, std::size_t>> branch;  // (-hits, position)
    sets_[pick].for_each_without(excluded_, [&](std::size_t p) {
      std::size_t hits = 0;
      for (auto u : unhit) hits += sets_[u].test(p) ? 1 : 0;
      branch.emplace_back(std::numeric_limits<std::size_t>::max() - hits, p);
    });
    std::sort(branch.begin(), branch.end());

    std::size_t tried = 0;
    for (const auto& [_, p] : branch) {
      chosen_.push_back(p);
      minimize(without_hit(unhit, p));
      chosen_.pop_back();
      excluded_.set(p);
      ++tried;
      if (stop_ || exhausted_) break;
    }
    for (std::size_t i = 0; i < tried; ++i) excluded_.reset(branch[i].second);
  }

  bool lex_first(const Unhit& unhit, std::size_t start, std::size_t k) {
    if (!tick()) return false;
    if (unhit.empty()) {
      best_ = chosen_;
      return true;
    }
    if (chosen_.size() >= k) return false;

    // The next chosen position must not exceed the smallest maximum of an
    // open constraint, or that constraint stays unhit forever.
    std::size_t limit = n_;
    for (auto u : unhit) limit = std::min(limit, sets_[u].highest());
    if (limit < start) return false;

    prefix_.clear();
    for (std::size_t p = 0; p < start; ++p) prefix_.set(p);
    if (chosen_.size() + packing_bound(unhit, prefix_) > k) return false;

    for (std::size_t q = start; q <= limit; ++q) {
      bool useful = false;
      for (auto u : unhit) {
        if (sets_[u].test(q)) {
          useful = true;
          break;
        }
      }
      if (!useful) continue;
      chosen_.push_back(q);
      if (lex_first(without_hit(unhit, q), q + 1, k)) return true;
      chosen_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  std::size_t n_;
  std::vector<Bitset> sets_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool stop_ = false;
  std::size_t global_lb_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  Bitset excluded_;
  Bitset scratch_;
  Bitset prefix_;
};

}  // namespace

MinimizeResult solve_hitting_set(const HittingSetInstance& instance,
                                 const MinimizeOptions& options) {
  return BranchAndBound(instance, options.node_budget, options.lower_bound).run();
}

MinimizeResult minimal_attractor(const Word& w, const MinimizeOptions& options) {
  MinimizeOptions opts = options;
  if (!w.empty()) {
    opts.lower_bound = std::max({opts.lower_bound, lower_bound_factor_complexity(w),
                                 lower_bound_repeated(w)});
  }
  return solve_hitting_set(coverage_sets(w), opts);
}

std::size_t gamma_star(const Word& w, std::uint64_t node_budget) {
  const MinimizeResult r = minimal_attractor(w, {.node_budget = node_budget});
  if (!r.optimal) {
    throw resource_error("gamma* of a word of length " + std::to_string(w.size()) +
                         " not settled within " + std::to_string(node_budget) + " nodes");
  }
  return r.attractor.size();
}

ExhaustiveResult exhaustive_minimum(const Word& w) {
  const std::size_t n = w.size();
  if (n > 24) throw std::domain_error("exhaustive search is limited to words of length <= 24");
  ExhaustiveResult result;
  if (n == 0) {
    result.first = Attractor({}, 0);
    result.minimum_count = 1;
    return result;
  }
  std::vector<std::uint32_t> masks;
  for (const auto& c : coverage_sets(w).constraints) {
    std::uint32_t m = 0;
    for (std::size_t p : c) m |= std::uint32_t{1} << (p - 1);
    masks.push_back(m);
  }
  auto hits_all = [&](std::uint32_t s) {
    return std::all_of(masks.begin(), masks.end(), [s](std::uint32_t m) { return (m & s) != 0; });
  };
  auto to_positions = [](std::uint32_t s) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < 32; ++b) {
      if (s >> b & 1U) out.push_back(b + 1);
    }
    return out;
  };

  std::size_t previous_rejected = 1;  // the empty set
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t found = 0, rejected = 0;
    std::vector<std::size_t> least;
    // Gosper's hack over all k-subsets of n bits.
    std::uint32_t s = (std::uint32_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (hits_all(s)) {
        std::vector<std::size_t> pos = to_positions(s);
        if (found == 0 || pos < least) least = std::move(pos);
        ++found;
      } else {
        ++rejected;
      }
      const std::uint32_t c = s & (~s + 1);
      const std::uint64_t r = std::uint64_t{s} + c;
      if (r >= limit) break;
      s = static_cast<std::uint32_t>((((r ^ s) >> 2) / c) | r);
    }
    if (found > 0) {
      result.gamma_star = k;
      result.first = Attractor(std::move(least), n);
      result.minimum_count = found;
      result.rejected_below = previous_rejected;
      return result;
    }
    previous_rejected = rejected;
  }
  throw std::logic_error("full position set must be an attractor");
}

}  // namespace strattr
