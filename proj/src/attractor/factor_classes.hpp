#ifndef STRATTR_SRC_FACTOR_CLASSES_HPP
#define STRATTR_SRC_FACTOR_CLASSES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "strattr/suffix_array.hpp"

namespace strattr::detail {

// Distinct factors of a word fall into classes sharing one occurrence set: the
// suffix-tree edges. A class is the SA interval [lo, hi] together with the
// factor lengths (parent_depth, depth]. The visitor receives each non-empty
// class along with min(key[sa[r]]) over the interval.
//
// Bottom-up LCP-interval traversal, O(n).
template <typename Visitor>
void for_each_factor_class(const SuffixIndex& idx, std::span<const std::size_t> key,
                           Visitor&& visit) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = idx.sa.size();
  if (n == 0) return;

  struct Frame {
    std::size_t depth;
    std::size_t lb;
    std::size_t min_key;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, kInf});

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t r = i - 1;
    const std::size_t start = idx.sa[r];
    const std::size_t leaf_depth = n - start;
    const std::size_t leaf_key = key[start];
    const std::size_t left = idx.lcp[r];
    const std::size_t right = r + 1 < n ? idx.lcp[r + 1] : 0;
    const std::size_t leaf_parent = std::max(left, right);
    if (leaf_parent < leaf_depth) visit(r, r, leaf_parent, leaf_depth, leaf_key);

    stack.back().min_key = std::min(stack.back().min_key, leaf_key);
    const std::size_t h = i < n ? idx.lcp[i] : 0;
    std::size_t lb = r;
    std::size_t carried = leaf_key;
    while (stack.back().depth > h) {
      const Frame f = stack.back();
      stack.pop_back();
      const std::size_t parent = std::max(h, stack.back().depth);
      visit(f.lb, r, parent, f.depth, f.min_key);
      lb = f.lb;
      carried = f.min_key;
      if (stack.back().depth >= h) stack.back().min_key = std::min(stack.back().min_key, f.min_key);
    }
    if (stack.back().depth < h) stack.push_back({h, lb, carried});
  }
}

}  // namespace strattr::detail

#endif  // STRATTR_SRC_FACTOR_CLASSES_HPP
