#include "strattr/suffix_array.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace strattr {

std::vector<std::size_t> sort_cyclic_shifts(std::span<const int> codes) {
  const std::size_t n = codes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (n == 0) return order;

  std::vector<long long> cls(n), next(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = codes[i];

  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cls[a] < cls[b]; });
  // Dense class ids after the first pass.
  auto renumber = [&](auto key_of) {
    next[order[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      next[order[r]] = next[order[r - 1]] + (key_of(order[r - 1]) != key_of(order[r]) ? 1 : 0);
    }
    std::swap(cls, next);
  };
  renumber([&](std::size_t i) { return cls[i]; });

  for (std::size_t len = 1; len < n; len <<= 1) {
    auto key = [&](std::size_t i) { return std::pair{cls[i], cls[(i + len) % n]}; };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    renumber(key);
    if (cls[order[n - 1]] == static_cast<long long>(n - 1)) break;
  }
  // Equal rotations share a class; break ties by start index.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cls[a] != cls[b] ? cls[a] < cls[b] : a < b;
  });
  return order;
}

std::vector<std::size_t> kasai_lcp(std::span<const int> codes, std::span<const std::size_t> sa,
                                   std::span<const std::size_t> rank) {
  const std::size_t n = codes.size();
  std::vector<std::size_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && codes[i + h] == codes[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

SuffixIndex build_suffix_index(const Word& w) {
  const std::size_t n = w.size();
  SuffixIndex idx;
  // Suffixes of w in lex order = rotations of w·$ with $ smallest, minus the $ row.
  std::vector<int> codes = w.codes();
  std::vector<int> with_sentinel(n + 1);
  for (std::size_t i = 0; i < n; ++i) with_sentinel[i] = codes[i] + 1;
  with_sentinel[n] = 0;
  std::vector<std::size_t> order = sort_cyclic_shifts(with_sentinel);
  idx.sa.assign(order.begin() + 1, order.end());
  idx.rank.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) idx.rank[idx.sa[r]] = r;
  idx.lcp = kasai_lcp(codes, idx.sa, idx.rank);
  return idx;
}

}  // namespace strattr
