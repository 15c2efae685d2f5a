#include <stdexcept>

#include "strattr/families.hpp"

namespace strattr {

std::string to_string(SturmianChoice choice) {
  switch (choice) {
    case SturmianChoice::gamma1:
      return "gamma1";
    case SturmianChoice::gamma2:
      return "gamma2";
    case SturmianChoice::fallback:
      return "fallback";
  }
  return "?";
}

SturmianAttractorResult sturmian_attractor(const Word& w) {
  if (w.size() < 2) throw std::domain_error("Sturmian attractor needs |w| >= 2");
  if (!is_standard(w)) throw std::domain_error("\"" + w.str() + "\" is not a standard word");

  const std::size_t n = w.size();
  const Word pi = w.prefix(n - 2);
  SturmianAttractorResult r;
  r.eta = pi.empty() ? 0 : longest_palindromic_proper_prefix(pi);
  r.gamma1 = Attractor({r.eta + 1, r.eta + 2}, n);
  r.gamma1_valid = is_attractor(w, r.gamma1);
  if (n >= r.eta + 4) {
    r.gamma2 = Attractor({n - r.eta - 3, n - r.eta - 2}, n);
    r.gamma2_valid = is_attractor(w, *r.gamma2);
  }

  // The proof picks gamma2 when x equals the second-to-last letter of w and
  // gamma1 otherwise; follow that order, then fall back to the other set.
  r.degenerate = !pi.empty() && pi.distinct_symbols() == 1;
  bool prefer_gamma2 = false;
  if (!r.degenerate && n >= 4) prefer_gamma2 = per_decomposition(w).x == w.at(n - 1);
  r.predicted = prefer_gamma2 ? SturmianChoice::gamma2 : SturmianChoice::gamma1;
  const SturmianChoice order[2] = {
      prefer_gamma2 ? SturmianChoice::gamma2 : SturmianChoice::gamma1,
      prefer_gamma2 ? SturmianChoice::gamma1 : SturmianChoice::gamma2};
  for (SturmianChoice c : order) {
    if (c == SturmianChoice::gamma1 && r.gamma1_valid) {
      r.chosen = c;
      r.attractor = r.gamma1;
      return r;
    }
    if (c == SturmianChoice::gamma2 && r.gamma2_valid) {
      r.chosen = c;
      r.attractor = *r.gamma2;
      return r;
    }
  }

  if (r.degenerate) {
    Attractor tail({n - 1, n}, n);
    if (is_attractor(w, tail)) {
      r.chosen = SturmianChoice::fallback;
      r.attractor = std::move(tail);
      return r;
    }
  }
  throw theorem_violation("neither {eta+1, eta+2} nor {|w|-eta-3, |w|-eta-2} is an attractor of \"" +
                          w.str() + "\"");
}

}  // namespace strattr
