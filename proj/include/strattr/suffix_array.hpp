#ifndef STRATTR_SUFFIX_ARRAY_HPP
#define STRATTR_SUFFIX_ARRAY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "strattr/word.hpp"

namespace strattr {

/// Sorts the rotations of `codes` by prefix doubling. Returns 0-based start
/// indices; equal rotations (non-primitive input) keep ascending index order.
std::vector<std::size_t> sort_cyclic_shifts(std::span<const int> codes);

/// Suffix array and LCP array of a word, 0-based internally.
///
/// sa[r] is the start (0-based) of the r-th smallest suffix, where a proper
/// prefix sorts before its extensions. lcp[r] = lcp(sa[r-1], sa[r]) for r >= 1
/// and lcp[0] = 0.
struct SuffixIndex {
  std::vector<std::size_t> sa;
  std::vector<std::size_t> rank;
  std::vector<std::size_t> lcp;
};

SuffixIndex build_suffix_index(const Word& w);

/// Kasai et al. LCP construction over codes.
std::vector<std::size_t> kasai_lcp(std::span<const int> codes, std::span<const std::size_t> sa,
                                   std::span<const std::size_t> rank);

}  // namespace strattr

#endif  // STRATTR_SUFFIX_ARRAY_HPP
