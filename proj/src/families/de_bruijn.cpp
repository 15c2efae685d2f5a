#include <cmath>
#include <stdexcept>

#include "strattr/compressors.hpp"
#include "strattr/families.hpp"

namespace strattr {

std::size_t max_gap(const Attractor& gamma) {
  std::size_t gap = 0;
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    gap = std::max(gap, gamma.positions()[i] - gamma.positions()[i - 1]);
  }
  return gap;
}

DeBruijnBounds de_bruijn_bounds(std::size_t sigma, std::size_t k, bool compute_exact,
                                std::uint64_t node_budget) {
  DeBruijnBounds b;
  b.sigma = sigma;
  b.k = k;
  b.word = de_bruijn_linear(sigma, k);
  b.n = b.word.size() - (k - 1);
  b.lz_count = lz_parse(b.word).size();

  const double s = static_cast<double>(sigma);
  const auto log_s = [s](double x) { return std::log(x) / std::log(s); };
  const double n = static_cast<double>(b.n);
  const double log_n = static_cast<double>(k);  // log_sigma(sigma^k)
  b.lower = n / log_n;
  // log log(sigma n) is negative for sigma n < sigma; never happens here.
  b.epsilon = 2.0 * (1.0 + log_s(log_s(s * n))) / log_n;
  if (b.epsilon < 1.0) b.upper = n / ((1.0 - b.epsilon) * log_n) + 1.0;
  if (compute_exact) b.exact = minimal_attractor(b.word, {.node_budget = node_budget});
  return b;
}

}  // namespace strattr
