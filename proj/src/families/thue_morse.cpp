#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "../attractor/factor_classes.hpp"
#include "strattr/bounds.hpp"
#include "strattr/families.hpp"
#include "strattr/suffix_array.hpp"

namespace strattr {

TmAttractor thue_morse_attractor(std::size_t n) {
  if (n < 3) throw std::domain_error("the Thue-Morse attractor needs n >= 3");
  if (n >= 63) throw resource_error("Thue-Morse index too large");
  std::vector<std::size_t> pos{(std::size_t{1} << (n - 1)) + 1};
  for (std::size_t i = 2; i <= n; ++i) pos.push_back(3 * (std::size_t{1} << (i - 2)));
  return {n, Attractor(std::move(pos), std::size_t{1} << n)};
}

Attractor attractor_add(const Attractor& gamma, std::size_t p) {
  if (gamma.contains(p)) throw std::domain_error("ADD(" + std::to_string(p) + "): already present");
  if (p < 1 || p > gamma.host_length()) {
    throw std::domain_error("ADD(" + std::to_string(p) + "): outside the word");
  }
  std::vector<std::size_t> pos = gamma.positions();
  pos.push_back(p);
  return Attractor(std::move(pos), gamma.host_length());
}

Attractor attractor_move(const Attractor& gamma, std::size_t from, std::size_t to) {
  const std::string op = "MOVE(" + std::to_string(from) + ", " + std::to_string(to) + ")";
  if (!gamma.contains(from)) throw std::domain_error(op + ": source not in the set");
  if (from == to) return gamma;
  if (gamma.contains(to)) throw std::domain_error(op + ": target already present");
  if (to < 1 || to > gamma.host_length()) throw std::domain_error(op + ": outside the word");
  std::vector<std::size_t> pos;
  for (std::size_t p : gamma) pos.push_back(p == from ? to : p);
  return Attractor(std::move(pos), gamma.host_length());
}

Attractor tm_recurrence_step(const Attractor& gamma_n, std::size_t n) {
  if (n < 3) throw std::domain_error("the ADD/MOVE step needs n >= 3");
  if (n >= 62) throw resource_error("Thue-Morse index too large");
  const std::size_t half = std::size_t{1} << (n - 1);
  const Attractor grown = attractor_add(gamma_n.with_host_length(4 * half), 2 * half + 1);
  return attractor_move(grown, half + 1, 3 * half);
}

std::vector<std::size_t> tm_crossing_set(std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 2; i <= n + 1; ++i) s.push_back(3 * (std::size_t{1} << (n + 1 - i)));
  std::sort(s.begin(), s.end());
  return s;
}

bool tm_crossing_lemma_check(std::size_t n, const std::optional<std::vector<std::size_t>>& positions) {
  if (n < 1) throw std::domain_error("crossing check needs n >= 1");
  const Word big = thue_morse(n + 1);
  const std::size_t small_len = std::size_t{1} << n;
  std::vector<std::size_t> set = positions ? *positions : tm_crossing_set(n);
  std::sort(set.begin(), set.end());
  for (std::size_t p : set) {
    if (p < 1 || p > big.size()) throw std::domain_error("crossing position outside t_{n+1}");
  }

  // key[j]: distance from 0-based start j to the next set position.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> key(big.size(), kInf);
  std::size_t next = kInf;
  auto it = set.rbegin();
  for (std::size_t j = big.size(); j-- > 0;) {
    while (it != set.rend() && *it >= j + 1) next = *it++;
    if (next != kInf) key[j] = next - (j + 1);
  }

  const SuffixIndex idx = build_suffix_index(big);
  bool ok = true;
  detail::for_each_factor_class(
      idx, key, [&](std::size_t lo, std::size_t hi, std::size_t parent, std::size_t depth,
                    std::size_t min_key) {
        if (!ok) return;
        std::size_t first = kInf;
        for (std::size_t r = lo; r <= hi; ++r) first = std::min(first, idx.sa[r]);
        // Lengths in this class that are also factors of t_n.
        if (first >= small_len) return;
        const std::size_t longest = std::min(depth, small_len - first);
        if (longest <= parent) return;
        if (min_key == kInf || min_key > parent) ok = false;
      });
  return ok;
}

TmGammaReport tm_gamma_lower(std::size_t n, std::uint64_t node_budget) {
  if (n <= 2) throw std::domain_error("the Thue-Morse lower bound needs n > 2");
  const Word t = thue_morse(n);
  TmGammaReport r;
  r.n = n;
  r.lower_bound = lower_bound_factor_complexity(t);
  if (n <= 4) {
    const ExhaustiveResult e = exhaustive_minimum(t);
    r.exact = true;
    r.value = e.gamma_star;
    r.rejected_below = e.rejected_below;
    r.minimum = e.first;
  } else if (n == 5) {
    const MinimizeResult m = minimal_attractor(t, {.node_budget = node_budget});
    r.exact = m.optimal;
    r.value = m.optimal ? m.attractor.size() : r.lower_bound;
    if (m.optimal) r.minimum = m.attractor;
  } else {
    r.value = r.lower_bound;
  }
  return r;
}

}  // namespace strattr
