#include "strattr/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "strattr/compressors.hpp"
#include "strattr/errors.hpp"

namespace strattr {

std::size_t lower_bound_alphabet(const Word& w) { return w.distinct_symbols(); }

FactorComplexityBound factor_complexity_bound(const Word& w) {
  FactorComplexityBound bound;
  bound.value = lower_bound_alphabet(w);
  if (w.empty()) return bound;
  const std::vector<std::size_t> profile = factor_complexity(w);
  std::size_t best_num = 0, best_den = 1;
  for (std::size_t k = 1; k < profile.size(); ++k) {
    // F_k / k > best_num / best_den
    if (profile[k] * best_den > best_num * k) {
      best_num = profile[k];
      best_den = k;
      bound.k = k;
    }
  }
  bound.value = std::max(bound.value, (best_num + best_den - 1) / best_den);
  return bound;
}

std::size_t lower_bound_factor_complexity(const Word& w) { return factor_complexity_bound(w).value; }

std::size_t lower_bound_repeated(const Word& w) {
  const std::size_t r = longest_repeated_factor_length(w);
  const std::size_t n = w.size();
  const std::size_t num = n - r, den = r + 1;
  return (num + den - 1) / den;
}

std::size_t BoundsReport::best_lower() const noexcept {
  return std::max({lb_alphabet, lb_factor_complexity, lb_repeated});
}

std::size_t BoundsReport::best_upper() const noexcept {
  std::size_t ub = std::min(ub_bwt, ub_lz);
  if (ub_collage) ub = std::min(ub, *ub_collage);
  return ub;
}

bool BoundsReport::consistent() const noexcept {
  if (best_lower() > best_upper()) return false;
  if (!exact || !exact_optimal) return true;
  return best_lower() <= *exact && *exact <= best_upper();
}

BoundsReport compute_bounds(const Word& w, const BoundsOptions& options) {
  if (w.empty()) throw std::out_of_range("bounds of the empty word");
  BoundsReport report;
  report.lb_alphabet = lower_bound_alphabet(w);
  const FactorComplexityBound fc = factor_complexity_bound(w);
  report.lb_factor_complexity = fc.value;
  report.lb_factor_complexity_k = fc.k;
  report.longest_repeated = longest_repeated_factor_length(w);
  report.lb_repeated = lower_bound_repeated(w);
  report.bwt_runs = bwt_sentinel(w).runs.size();
  report.ub_bwt = attractor_from_bwt(w).size();
  report.ub_lz = lz_parse(w).size();
  if (options.collage != nullptr) {
    if (collage_expand(*options.collage) != w) {
      throw std::domain_error("collage system does not generate the word");
    }
    report.ub_collage = attractor_from_collage(*options.collage).size();
  }
  if (options.compute_exact) {
    const MinimizeResult r = minimal_attractor(
        w, {.node_budget = options.node_budget, .lower_bound = report.best_lower()});
    report.exact = r.attractor.size();
    report.exact_optimal = r.optimal;
    report.nodes = r.nodes;
  }
  return report;
}

namespace {

struct Exact {
  std::size_t value = 0;
  bool optimal = false;
};

Exact exact_gamma(const Word& w, std::uint64_t budget) {
  const MinimizeResult r = minimal_attractor(w, {.node_budget = budget});
  return {r.attractor.size(), r.optimal};
}

}  // namespace

ConcatenationReport check_concatenation_bound(const Word& u, const Word& v,
                                              std::uint64_t node_budget) {
  if (u.empty() || v.empty()) throw std::out_of_range("concatenation bound needs non-empty words");
  ConcatenationReport report;
  const Exact gu = exact_gamma(u, node_budget);
  const Exact gv = exact_gamma(v, node_budget);
  const Exact guv = exact_gamma(u + v, node_budget);
  report.gamma_u = gu.value;
  report.gamma_v = gv.value;
  report.gamma_uv = guv.value;
  report.conclusive = gu.optimal && gv.optimal && guv.optimal;
  report.holds = report.gamma_uv <= report.gamma_u + report.gamma_v + 1;
  report.tight = report.gamma_uv == report.gamma_u + report.gamma_v + 1;
  return report;
}

PowerReport check_power_bounds(const Word& u, std::size_t m, std::uint64_t node_budget) {
  if (m == 0) throw std::domain_error("power bound needs an exponent >= 1");
  if (u.empty()) throw std::out_of_range("power bound of the empty word");
  PowerReport report;
  report.exponent = m;
  const Exact gu = exact_gamma(u, node_budget);
  const Exact gp = m == 1 ? gu : exact_gamma(u.power(m), node_budget);
  report.gamma_u = gu.value;
  report.gamma_power = gp.value;
  report.conclusive = gu.optimal && gp.optimal;
  report.holds = gu.value <= gp.value && gp.value <= gu.value + 1;
  report.lower_tight = gp.value == gu.value;
  report.upper_tight = gp.value == gu.value + 1;
  return report;
}

ConjugateReport check_conjugate_bound(const Word& u, const Word& v, std::uint64_t node_budget) {
  if (u.empty()) throw std::out_of_range("conjugate bound of the empty word");
  if (!are_conjugate(u, v)) {
    throw std::domain_error("\"" + u.str() + "\" and \"" + v.str() + "\" are not conjugate");
  }
  ConjugateReport report;
  const Exact gu = exact_gamma(u, node_budget);
  const Exact gv = exact_gamma(v, node_budget);
  report.gamma_u = gu.value;
  report.gamma_v = gv.value;
  report.conclusive = gu.optimal && gv.optimal;
  report.difference = gu.value > gv.value ? gu.value - gv.value : gv.value - gu.value;
  report.holds = report.difference <= 1;
  return report;
}

}  // namespace strattr
