#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "factor_classes.hpp"
#include "strattr/attractor.hpp"
#include "strattr/suffix_array.hpp"

namespace strattr {

Attractor::Attractor(std::vector<std::size_t> positions, std::size_t host_length)
    : positions_(std::move(positions)), host_length_(host_length) {
  std::sort(positions_.begin(), positions_.end());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const std::size_t p = positions_[i];
    if (p < 1 || p > host_length_) {
      throw std::domain_error("attractor position " + std::to_string(p) + " outside [1, " +
                              std::to_string(host_length_) + "]");
    }
    if (i > 0 && positions_[i - 1] == p) {
      throw std::domain_error("duplicate attractor position " + std::to_string(p));
    }
  }
}

Attractor::Attractor(std::initializer_list<std::size_t> positions, std::size_t host_length)
    : Attractor(std::vector<std::size_t>(positions), host_length) {}

Attractor Attractor::full(std::size_t host_length) {
  std::vector<std::size_t> all(host_length);
  for (std::size_t i = 0; i < host_length; ++i) all[i] = i + 1;
  return Attractor(std::move(all), host_length);
}

bool Attractor::contains(std::size_t position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

Attractor Attractor::with_host_length(std::size_t host_length) const {
  return Attractor(positions_, host_length);
}

Verdict verify_attractor(const Word& w, const Attractor& gamma) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = w.size();
  if (gamma.host_length() != n) {
    throw std::domain_error("attractor host length " + std::to_string(gamma.host_length()) +
                            " does not match word length " + std::to_string(n));
  }
  Verdict verdict;
  if (n == 0) return verdict;

  // dist[s] (0-based s): distance to the nearest attractor position at or
  // after s. The occurrence of length L at s is hit iff dist[s] <= L - 1.
  std::vector<std::size_t> dist(n, kInf);
  {
    std::size_t next = kInf;
    auto it = gamma.positions().rbegin();
    for (std::size_t s = n; s-- > 0;) {
      while (it != gamma.positions().rend() && *it - 1 >= s) {
        next = *it - 1;
        ++it;
      }
      dist[s] = next == kInf ? kInf : next - s;
    }
  }

  const SuffixIndex idx = build_suffix_index(w);
  std::size_t best_len = kInf, best_lo = 0, best_hi = 0;
  detail::for_each_factor_class(
      idx, dist,
      [&](std::size_t lo, std::size_t hi, std::size_t parent_depth, std::size_t, std::size_t d) {
        // The shortest factor of the class is the hardest to hit.
        if (d != kInf && d <= parent_depth) return;
        const std::size_t len = parent_depth + 1;
        if (len < best_len || (len == best_len && lo < best_lo)) {
          best_len = len;
          best_lo = lo;
          best_hi = hi;
        }
      });
  if (best_len == kInf) return verdict;

  Witness witness;
  witness.factor = w.factor(idx.sa[best_lo] + 1, idx.sa[best_lo] + best_len);
  for (std::size_t r = best_lo; r <= best_hi; ++r) {
    witness.occurrences.push_back({idx.sa[r] + 1, best_len});
  }
  std::sort(witness.occurrences.begin(), witness.occurrences.end(),
            [](const Occurrence& a, const Occurrence& b) { return a.start < b.start; });
  verdict.witness = std::move(witness);
  return verdict;
}

bool is_attractor(const Word& w, const Attractor& gamma) {
  return verify_attractor(w, gamma).valid();
}

}  // namespace strattr
