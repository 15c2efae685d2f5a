#include <algorithm>
#include <vector>

#include "bitset.hpp"
#include "factor_classes.hpp"
#include "strattr/attractor.hpp"
#include "strattr/suffix_array.hpp"

namespace strattr {

HittingSetInstance coverage_sets_unreduced(const Word& w) {
  const std::size_t n = w.size();
  HittingSetInstance instance;
  instance.universe = n;
  if (n == 0) return instance;

  const SuffixIndex idx = build_suffix_index(w);
  const std::vector<std::size_t> zeros(n, 0);
  detail::for_each_factor_class(
      idx, zeros,
      [&](std::size_t lo, std::size_t hi, std::size_t parent_depth, std::size_t, std::size_t) {
        // Only the shortest length of the class matters: its occurrence
        // intervals are contained in those of every longer length.
        const std::size_t len = parent_depth + 1;
        std::vector<std::size_t> starts;
        for (std::size_t r = lo; r <= hi; ++r) starts.push_back(idx.sa[r] + 1);
        std::sort(starts.begin(), starts.end());
        std::vector<std::size_t> set;
        std::size_t covered_to = 0;  // last position already emitted
        for (std::size_t s : starts) {
          for (std::size_t p = std::max(s, covered_to + 1); p <= s + len - 1; ++p) set.push_back(p);
          covered_to = std::max(covered_to, s + len - 1);
        }
        instance.constraints.push_back(std::move(set));
      });
  return instance;
}

HittingSetInstance coverage_sets(const Word& w) {
  HittingSetInstance raw = coverage_sets_unreduced(w);
  auto& cs = raw.constraints;
  std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  HittingSetInstance reduced;
  reduced.universe = raw.universe;
  std::vector<detail::Bitset> kept;
  for (auto& c : cs) {
    detail::Bitset bits(raw.universe);
    for (std::size_t p : c) bits.set(p - 1);
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const detail::Bitset& k) { return k.is_subset_of(bits); });
    if (dominated) continue;
    kept.push_back(std::move(bits));
    reduced.constraints.push_back(std::move(c));
  }
  return reduced;
}

}  // namespace strattr
