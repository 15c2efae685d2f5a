#include <functional>
#include <optional>
#include <sstream>

#include "strattr/bounds.hpp"
#include "strattr/cli.hpp"
#include "strattr/compressors.hpp"
#include "strattr/families.hpp"
#include "strattr/generators.hpp"

namespace strattr::cli {

namespace {

using Positions = std::vector<std::size_t>;

std::string join(const Positions& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "}";
}

bool verifies(const std::string& w, const Positions& p) {
  const Word word(w);
  return is_attractor(word, Attractor(p, word.size()));
}

// Collects checks; each body returns pass/fail and may append to `detail`.
class Suite {
 public:
  using Body = std::function<bool(std::ostringstream&)>;

  void check(std::string anchor, std::string claim, const Body& body) {
    std::ostringstream detail;
    std::optional<bool> pass;
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail << "exception: " << e.what();
    }
    out_.push_back({std::move(anchor), std::move(claim), pass, detail.str()});
  }

  void report(std::string anchor, std::string claim, const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream detail;
    std::optional<bool> pass;
    try {
      body(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail << "exception: " << e.what();
    }
    out_.push_back({std::move(anchor), std::move(claim), pass, detail.str()});
  }

  std::vector<SuiteCheck> take() { return std::move(out_); }

 private:
  std::vector<SuiteCheck> out_;
};

void example_one(Suite& s, const SuiteOptions& o) {
  const std::string w = "adcbaadcbadc";
  Positions gamma_prime{4, 6, 8, 11};
  if (o.mutate) gamma_prime.pop_back();
  s.check("adcbaadcbadc/gamma", "{1,4,6,8,11} is an attractor of adcbaadcbadc",
          [&](auto&) { return verifies(w, {1, 4, 6, 8, 11}); });
  s.check("adcbaadcbadc/gamma-prime", "{4,6,8,11} is an attractor", [&](auto& d) {
    d << "tested " << join(gamma_prime);
    return verifies(w, gamma_prime);
  });
  s.check("adcbaadcbadc/alternatives", "{3,4,5,11} and {3,4,6,7,11} are attractors",
          [&](auto&) { return verifies(w, {3, 4, 5, 11}) && verifies(w, {3, 4, 6, 7, 11}); });
  s.check("adcbaadcbadc/delta", "{1,2,3,4} is rejected with the factor aa", [&](auto& d) {
    const Verdict v = verify_attractor(Word(w), Attractor({1, 2, 3, 4}, w.size()));
    if (v.valid()) return false;
    d << "witness " << v.witness->factor.str();
    return v.witness->factor.str() == "aa";
  });
  s.check("adcbaadcbadc/gamma-star", "gamma* = 4 = sigma", [&](auto& d) {
    const MinimizeResult m = minimal_attractor(Word(w), {.node_budget = o.node_budget});
    d << "minimum " << join(m.attractor.positions());
    return m.optimal && m.attractor.size() == 4;
  });
}

void propositions(Suite& s, const SuiteOptions& o) {
  const std::uint64_t b = o.node_budget;
  s.check("factor-count", "an attractor of size g allows at most g*k factors of length k",
          [&](auto&) {
            const Word w("adcbaadcbadc");
            for (std::size_t k = 1; k <= w.size(); ++k) {
              if (distinct_factor_count(w, k) > 4 * k) return false;
            }
            return lower_bound_factor_complexity(w) <= 4;
          });
  s.check("longest-repeated", "ceil((n - r) / (r + 1)) <= gamma* on adcbaadcbadc", [&](auto& d) {
    const Word w("adcbaadcbadc");
    d << "r = " << longest_repeated_factor_length(w) << ", bound " << lower_bound_repeated(w);
    return lower_bound_repeated(w) <= gamma_star(w, b);
  });
  s.check("concatenation/tight", "gamma*(baaaba cdcccd) = gamma*(u) + gamma*(v) + 1",
          [&](auto& d) {
            const auto r = check_concatenation_bound(Word("baaaba"), Word("cdcccd"), b);
            d << r.gamma_u << " + " << r.gamma_v << " + 1 vs " << r.gamma_uv;
            return r.conclusive && r.holds && r.tight;
          });
  s.check("power/abbaab", "minima {2,4}, {3,5} only; gamma*(u^2) = gamma*(u) + 1", [&](auto& d) {
    const ExhaustiveResult e = exhaustive_minimum(Word("abbaab"));
    const auto r = check_power_bounds(Word("abbaab"), 2, b);
    d << "minimum count " << e.minimum_count << ", gamma*(u^2) = " << r.gamma_power;
    return e.gamma_star == 2 && e.minimum_count == 2 && verifies("abbaab", {2, 4}) &&
           verifies("abbaab", {3, 5}) && r.conclusive && r.upper_tight;
  });
  s.check("power/ababcbc", "{2,3,5} for u, {3,6,7} for u^2, gamma*(u^2) = gamma*(u)",
          [&](auto& d) {
            const std::string u = "ababcbc", uu = u + u;
            const auto r = check_power_bounds(Word(u), 2, b);
            d << "{2,3,5} on u^2: " << verifies(uu, {2, 3, 5})
              << ", underlined {1,2,7} on u^2: " << verifies(uu, {1, 2, 7});
            return verifies(u, {2, 3, 5}) && verifies(uu, {3, 6, 7}) && !verifies(uu, {2, 3, 5}) &&
                   r.conclusive && r.lower_tight;
          });
  s.check("conjugates/babbaaa", "gamma* 2 for babbaaa ({3,5}), 3 for ababbaa ({2,4,6})",
          [&](auto& d) {
            const auto r = check_conjugate_bound(Word("babbaaa"), Word("ababbaa"), b);
            d << r.gamma_u << " vs " << r.gamma_v;
            return r.conclusive && r.holds && r.gamma_u == 2 && r.gamma_v == 3 &&
                   verifies("babbaaa", {3, 5}) && verifies("ababbaa", {2, 4, 6});
          });
  s.check("conjugates/lyndon", "Lyndon conjugate aaababb has the minimum {3,4,6}", [&](auto&) {
    const Word l = lyndon_conjugate(Word("babbaaa"));
    return l.str() == "aaababb" && verifies(l.str(), {3, 4, 6}) && gamma_star(l, b) == 3;
  });
  // the two bounds below are stated for every word; these are words where they break
  s.report("power/lower-half", "gamma*(u) <= gamma*(u^2), checked on baababba", [&](auto& d) {
    const auto r = check_power_bounds(Word("baababba"), 2, b);
    d << "gamma*(u) = " << r.gamma_u << ", gamma*(u^2) = " << r.gamma_power << ", {6,10} verifies on u^2: " << std::boolalpha
      << verifies("baababbabaababba", {6, 10}) << (r.holds ? " (holds)" : " (fails)");
  });
  s.report("conjugates/bound", "|gamma*(u) - gamma*(v)| <= 1, checked on a ternary pair", [&](auto& d) {
    const auto r = check_conjugate_bound(Word("caabbcabcabacabac"), Word("abacabaccaabbcabc"), b);
    d << "caabbcabcabacabac " << r.gamma_u << ", abacabaccaabbcabc " << r.gamma_v
      << (r.holds ? " (holds)" : " (fails)");
  });
}

void compressors(Suite& s) {
  s.check("bwt/adcbaadcbadc", "one position per BWT run of adcbaadcbadc$ is an attractor",
          [&](auto& d) {
            const Word w("adcbaadcbadc");
            const Attractor g = attractor_from_bwt(w);
            d << "r = " << bwt_sentinel(w).runs.size() << ", attractor " << join(g.positions());
            return is_attractor(w, g) && is_attractor(w, attractor_from_bwt(w, RunEndpoint::last)) &&
                   invert_bwt(bwt_sentinel(w)) == w;
          });
  s.check("lz/adcbaadcbadc", "phrase ends of the LZ parse form an attractor", [&](auto& d) {
    const Word w("adcbaadcbadc");
    const Attractor g = attractor_from_lz(w);
    d << "z = " << lz_parse(w).size() << ", attractor " << join(g.positions());
    return is_attractor(w, g) && g.size() == lz_parse(w).size();
  });
  s.check("lz/aaaa", "aaaa parses as a|a|aa, ends {1,2,4}", [&](auto&) {
    return attractor_from_lz(Word("aaaa")).positions() == Positions{1, 2, 4};
  });
  s.check("rle/aaabbc", "run ends {3,5,6} of aaabbc are a minimum attractor", [&](auto&) {
    const Word w("aaabbc");
    const Attractor g = attractor_from_rle(w);
    return g.positions() == Positions{3, 5, 6} && is_attractor(w, g) && gamma_star(w) == 3;
  });
  s.check("collage/thue-morse", "the collage system expands to t_n with 2n+1 rules, n <= 12",
          [&](auto& d) {
            for (std::size_t n = 1; n <= 12; ++n) {
              const CollageSystem g = thue_morse_collage(n);
              if (collage_expand(g) != thue_morse(n) || collage_size(g) != 2 * n + 1) {
                d << "n = " << n;
                return false;
              }
              if (!is_attractor(thue_morse(n), attractor_from_collage(g))) {
                d << "collage attractor rejected at n = " << n;
                return false;
              }
            }
            return true;
          });
}

void sturmian(Suite& s, const SuiteOptions& o) {
  s.check("sturmian/ababaababaabababa", "eta = 10 and {11,12} is a smallest attractor",
          [&](auto& d) {
            const Word w("ababaababaabababa");
            const auto r = sturmian_attractor(w);
            const PerDecomposition p = per_decomposition(w);
            d << "Q = " << p.q.str() << ", P = " << p.p.str() << ", chosen " << to_string(r.chosen);
            return r.eta == 10 && r.attractor.positions() == Positions{11, 12} &&
                   p.q.str() == "ababaababa" && p.p.str() == "aba" && gamma_star(w) == 2;
          });
  s.check("sturmian/abaababaababa", "eta = 6 and {4,5} is an attractor", [&](auto& d) {
    const Word w("abaababaababa");
    const auto r = sturmian_attractor(w);
    const PerDecomposition p = per_decomposition(w);
    d << "Q = " << p.q.str() << ", P = " << p.p.str() << ", chosen " << to_string(r.chosen);
    return r.eta == 6 && r.attractor.positions() == Positions{4, 5} && p.q.str() == "abaaba" &&
           p.p.str() == "aba";
  });
  s.check("sturmian/clustered", "bwt of both examples is b^p a^q with gcd(p, q) = 1",
          [&](auto&) {
            return is_clustered_sturmian(Word("ababaababaabababa")) &&
                   is_clustered_sturmian(Word("abaababaababa"));
          });
  s.check("sturmian/all-up-to-40", "every standard word 2 <= |w| <= 40: two consecutive positions, gamma* = 2",
          [&](auto& d) {
            std::size_t count = 0, degenerate = 0;
            for (const auto& dir : standard_directives(40)) {
              const Word w = standard_sturmian(dir);
              const auto r = sturmian_attractor(w);
              const auto m = minimal_attractor(w, {.node_budget = o.node_budget});
              if (!is_attractor(w, r.attractor) || !m.optimal || m.attractor.size() != 2 ||
                  r.attractor.positions()[1] != r.attractor.positions()[0] + 1) {
                d << "failed on " << w.str();
                return false;
              }
              ++count;
              if (r.degenerate) ++degenerate;
            }
            d << count << " words, " << degenerate << " of the form a^k b or b^k a outside both sets";
            return true;
          });
}

void thue_morse_checks(Suite& s, const SuiteOptions& o) {
  s.check("thue-morse/listed-sets", "Gamma_3 = {3,5,6}, Gamma_4 = {3,6,9,12}, Gamma_5 = {3,6,12,17,24}",
          [&](auto&) {
            const Positions want[] = {{3, 5, 6}, {3, 6, 9, 12}, {3, 6, 12, 17, 24}};
            for (std::size_t n = 3; n <= 5; ++n) {
              const TmAttractor g = thue_morse_attractor(n);
              if (g.positions.positions() != want[n - 3] || !is_attractor(thue_morse(n), g.positions)) {
                return false;
              }
            }
            return true;
          });
  s.check("thue-morse/verify", "Gamma_n verifies with |Gamma_n| = n for 3 <= n <= 12", [&](auto&) {
    for (std::size_t n = 3; n <= 12; ++n) {
      const TmAttractor g = thue_morse_attractor(n);
      if (g.positions.size() != n || !is_attractor(thue_morse(n), g.positions)) return false;
    }
    return true;
  });
  s.check("thue-morse/add-move", "ADD and MOVE rebuild Gamma_{n+1} from Gamma_n for n <= 11",
          [&](auto&) {
            Attractor g = thue_morse_attractor(3).positions;
            for (std::size_t n = 3; n <= 11; ++n) {
              g = tm_recurrence_step(g, n);
              if (g != thue_morse_attractor(n + 1).positions) return false;
            }
            return true;
          });
  s.check("thue-morse/crossing", "every factor of t_n crosses {3, 6, ..., 3*2^(n-1)} in t_{n+1}, n <= 8",
          [&](auto&) {
            for (std::size_t n = 3; n <= 8; ++n) {
              if (!tm_crossing_lemma_check(n)) return false;
            }
            return true;
          });
  s.check("thue-morse/t3", "gamma*(t_3) = 3, all 28 pairs rejected", [&](auto& d) {
    const TmGammaReport r = tm_gamma_lower(3, o.node_budget);
    d << "rejected " << r.rejected_below;
    return r.exact && r.value == 3 && r.rejected_below == 28;
  });
  s.report("thue-morse/conjecture", "gamma*(t_n) = n, reported for n = 4, 5", [&](auto& d) {
    for (std::size_t n = 4; n <= 5; ++n) {
      const TmGammaReport r = tm_gamma_lower(n, o.node_budget);
      d << (n == 4 ? "" : "; ") << "n = " << n << ": "
        << (r.exact ? "gamma* = " : "gamma* >= ") << r.value;
      if (r.exact) d << (r.value == n ? " (holds)" : " (fails)");
    }
  });
}

void epistandard_checks(Suite& s, const SuiteOptions& o) {
  struct Case {
    const char* anchor;
    const char* directive;
    char appended;
    Positions listed;
    const char* lyndon;
    Positions lyndon_set;
  };
  const Case cases[] = {
      {"epistandard/type-i", "aaaadc", 'b', {4, 5, 10, 20}, "aaaabaaaadaaaacaaaad", {5, 9, 10, 15}},
      {"epistandard/type-ii-k4", "adca", 'b', {2, 4, 8, 15}, "aadacadabadacad", {2, 3, 5, 9}},
      {"epistandard/type-ii-k5-l0", "aeadc", 'b', {2, 4, 7, 14, 28},
       "aaeabaeaaeadaeaaeacaeaaeadae", {5, 9, 10, 12, 19}},
      {"epistandard/type-ii-k5-l1", "aedac", 'b', {2, 4, 8, 15, 30},
       "aaeadaeabaeadaeaaeadaeacaeadae", {9, 17, 18, 20, 24}},
      {"epistandard/type-iii", "cab", '\0', {2, 3, 4}, "acbcacc", {3, 5, 6}},
  };
  for (const Case& c : cases) {
    s.check(c.anchor, std::string("Pal(") + c.directive + ")" + (c.appended ? "b" : "") +
                          ": " + join(c.listed) + " verifies, gamma* = sigma, Lyndon conjugate " +
                          join(c.lyndon_set),
            [&](auto& d) {
              const auto r = epistandard_attractor(Word(c.directive), c.appended, o.node_budget);
              const std::size_t sigma = r.word.distinct_symbols();
              const auto m = minimal_attractor(r.word, {.node_budget = o.node_budget});
              const Word l = lyndon_conjugate(r.word);
              d << "insertion rule " << join(r.candidate.positions())
                << (r.candidate_valid ? " verifies" : " rejected");
              return is_attractor(r.word, Attractor(c.listed, r.word.size())) && r.candidate_valid &&
                     m.optimal && m.attractor.size() == sigma && l.str() == c.lyndon &&
                     is_attractor(l, Attractor(c.lyndon_set, l.size()));
            });
  }
  s.report("epistandard/type-ii-directive", "k = 4, ell = 0 from the family formula", [&](auto& d) {
    EpistandardSpec spec;
    spec.family = EpistandardFamily::type_ii;
    spec.k = 4;
    const auto r = epistandard_attractor(spec, o.node_budget);
    d << "formula directive " << epistandard_directive(spec).str() << " gives " << r.word.str()
      << " with " << join(r.attractor.positions()) << "; the worked example uses adca";
  });
  s.check("clustered/abbbbbacac", "{2,7,8} is an attractor", [&](auto&) {
    return verifies("abbbbbacac", {2, 7, 8});
  });
  s.check("clustered/aacaabaac", "{2,3,6} is an attractor", [&](auto&) {
    return verifies("aacaabaac", {2, 3, 6});
  });
}

void de_bruijn_checks(Suite& s, const SuiteOptions& o) {
  s.check("de-bruijn/sigma-2-k-4", "length 19, gamma* = 4, {4,8,12,16} verifies", [&](auto& d) {
    const DeBruijnBounds b = de_bruijn_bounds(2, 4, true, o.node_budget);
    d << b.word.str() << ", minimum " << join(b.exact->attractor.positions());
    return b.word.size() == 19 && b.exact->optimal && b.exact->attractor.size() == 4 &&
           is_attractor(b.word, Attractor({4, 8, 12, 16}, 19)) &&
           verifies("aaaababbbbabaabbaaa", {4, 8, 12, 16});
  });
  s.check("de-bruijn/lz-lower", "lz phrases >= sigma^k / k for sigma = 2, k <= 8 and sigma = 3, k <= 4",
          [&](auto& d) {
            for (std::size_t sigma = 2; sigma <= 3; ++sigma) {
              for (std::size_t k = sigma == 2 ? 2 : 1; k <= (sigma == 2 ? 8u : 4u); ++k) {
                const DeBruijnBounds b = de_bruijn_bounds(sigma, k);
                if (!b.lz_above_lower()) {
                  d << "sigma " << sigma << ", k " << k;
                  return false;
                }
              }
            }
            return true;
          });
  s.check("de-bruijn/gaps", "minimum attractors have gaps <= k (sigma = 2, k <= 4; sigma = 3, k <= 2)",
          [&](auto& d) {
            for (const auto& [sigma, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}}) {
              const DeBruijnBounds b = de_bruijn_bounds(sigma, k, true, o.node_budget);
              if (!b.exact->optimal || max_gap(b.exact->attractor) > static_cast<std::size_t>(k)) {
                d << "sigma " << sigma << ", k " << k;
                return false;
              }
            }
            return true;
          });
}

}  // namespace

std::vector<SuiteCheck> golden_suite(const SuiteOptions& options) {
  Suite s;
  example_one(s, options);
  propositions(s, options);
  compressors(s);
  sturmian(s, options);
  thue_morse_checks(s, options);
  epistandard_checks(s, options);
  de_bruijn_checks(s, options);
  return s.take();
}

}  // namespace strattr::cli
