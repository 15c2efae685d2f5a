#include "records.hpp"

#include <numeric>
#include <type_traits>
#include <variant>

#include "strattr/bounds.hpp"
#include "strattr/families.hpp"

namespace strattr::cli {

namespace {

json runs_json(const std::vector<Run>& runs) {
  json out = json::array();
  for (const Run& r : runs) {
    out.push_back({{"start", r.start}, {"end", r.end}, {"symbol", std::string(1, r.symbol)}});
  }
  return out;
}

json minimize_json(const MinimizeResult& m) {
  json j = {{"positions", m.attractor.positions()},
            {"size", m.attractor.size()},
            {"optimal", m.optimal},
            {"lex_least", m.lex_least},
            {"nodes", m.nodes}};
  if (m.optimal) j["gamma_star"] = m.attractor.size();
  return j;
}

std::string directive_string(const DirectiveSequence& d) {
  std::string s;
  for (std::size_t i = 0; i < d.q.size(); ++i) s += (i ? "," : "") + std::to_string(d.q[i]);
  return s;
}

json epistandard_json(const EpistandardAttractorResult& r, const Limits& limits, bool exact) {
  json j = {{"word", r.word.str()},
            {"length", r.word.size()},
            {"sigma", r.word.distinct_symbols()},
            {"candidate", r.candidate.positions()},
            {"candidate_valid", r.candidate_valid},
            {"from_minimizer", r.from_minimizer},
            {"attractor", r.attractor.positions()}};
  add_verdict(j, r.word, r.attractor);
  if (is_primitive(r.word)) j["lyndon_conjugate"] = lyndon_conjugate(r.word).str();
  if (exact) j["exact"] = minimize_json(minimal_attractor(r.word, {.node_budget = limits.node_budget}));
  return j;
}

}  // namespace

json witness_json(const Witness& w) {
  json occ = json::array();
  for (const Occurrence& o : w.occurrences) occ.push_back({{"start", o.start}, {"length", o.length}});
  return {{"factor", w.factor.str()}, {"occurrences", occ}};
}

void add_verdict(json& record, const Word& w, const Attractor& gamma) {
  const Verdict v = verify_attractor(w, gamma);
  record["valid"] = v.valid();
  if (!v.valid()) record["witness"] = witness_json(*v.witness);
}

json verify_record(const Word& w, const Attractor& gamma) {
  json r = {{"word", w.str()}, {"length", w.size()}, {"positions", gamma.positions()}};
  add_verdict(r, w, gamma);
  return r;
}

json min_record(const Word& w, const Limits& limits, bool exhaustive) {
  json r = {{"word", w.str()}, {"length", w.size()}};
  if (exhaustive) {
    const ExhaustiveResult e = exhaustive_minimum(w);
    r["method"] = "exhaustive";
    r["positions"] = e.first.positions();
    r["gamma_star"] = e.gamma_star;
    r["optimal"] = true;
    r["rejected_below"] = e.rejected_below;
    r["minimum_count"] = e.minimum_count;
    return r;
  }
  r["method"] = "branch_and_bound";
  r.update(minimize_json(minimal_attractor(w, {.node_budget = limits.node_budget})));
  return r;
}

json bounds_record(const Word& w, const Limits& limits, bool exact) {
  const BoundsReport b =
      compute_bounds(w, {.compute_exact = exact, .node_budget = limits.node_budget});
  json r = {{"word", w.str()}, {"length", w.size()}};
  r["bounds"] = {{"alphabet", b.lb_alphabet},
                 {"factor_complexity", b.lb_factor_complexity},
                 {"factor_complexity_k", b.lb_factor_complexity_k},
                 {"repeated", b.lb_repeated},
                 {"longest_repeated", b.longest_repeated},
                 {"bwt_runs", b.bwt_runs},
                 {"bwt_attractor", b.ub_bwt},
                 {"lz_phrases", b.ub_lz},
                 {"best_lower", b.best_lower()},
                 {"best_upper", b.best_upper()}};
  r["optimal"] = b.exact_optimal;
  if (b.exact) {
    // With the budget exhausted `exact` holds the best size found, not gamma*.
    if (b.exact_optimal) {
      r["gamma_star"] = *b.exact;
    } else {
      r["best_found"] = *b.exact;
    }
    r["nodes"] = b.nodes;
    r["consistent"] = b.consistent();
  }
  return r;
}

json bwt_record(const Word& w, char sentinel, RunEndpoint endpoint) {
  const BwtOutput b = bwt_sentinel(w, sentinel);
  const Word conj = bwt_conjugates(w);
  const Attractor g = attractor_from_bwt(w, endpoint, sentinel);
  json r = {{"word", w.str()},
            {"length", w.size()},
            {"sentinel", std::string(1, sentinel)},
            {"bwt", b.transformed},
            {"runs", runs_json(b.runs)},
            {"r", b.runs.size()},
            {"inverts", invert_bwt(b) == w},
            {"conjugate_bwt", conj.str()},
            {"conjugate_runs", equal_letter_runs(conj.str()).size()},
            {"endpoint", endpoint == RunEndpoint::first ? "first" : "last"},
            {"attractor", g.positions()}};
  if (w.alphabet().size() <= 2) r["clustered_sturmian"] = is_clustered_sturmian(w);
  add_verdict(r, w, g);
  return r;
}

json lz_record(const Word& w, LzVariant variant) {
  const LzParse p = lz_parse(w, variant);
  json phrases = json::array();
  for (const LzPhrase& ph : p.phrases) {
    json j = {{"start", ph.position}, {"length", ph.length}};
    if (ph.kind == LzPhrase::Kind::literal) {
      j["source"] = nullptr;
      j["symbol"] = std::string(1, ph.symbol);
    } else {
      j["source"] = ph.source_start;
    }
    phrases.push_back(std::move(j));
  }
  const Attractor g = attractor_from_lz(w, variant);
  json r = {{"word", w.str()},
            {"length", w.size()},
            {"variant", variant == LzVariant::previous_phrases ? "previous_phrases"
                                                               : "self_referential"},
            {"phrases", phrases},
            {"z", p.size()},
            {"decodes", lz_decode(p, w.alphabet_ptr()) == w},
            {"attractor", g.positions()}};
  add_verdict(r, w, g);
  return r;
}

json collage_tm_record(std::size_t n, const Limits& limits) {
  const CollageSystem g = thue_morse_collage(n);
  json rules = json::array();
  for (std::size_t i = 0; i < g.rules().size(); ++i) {
    const CollageRule& rule = g.rules()[i];
    json j = {{"index", i}, {"name", rule.name}};
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, collage::Terminal>) {
            j["kind"] = "terminal";
            j["symbol"] = std::string(1, body.symbol);
          } else if constexpr (std::is_same_v<T, collage::Concat>) {
            j["kind"] = "concat";
            j["left"] = g.rules()[body.left].name;
            j["right"] = g.rules()[body.right].name;
          } else if constexpr (std::is_same_v<T, collage::Power>) {
            j["kind"] = "power";
            j["base"] = g.rules()[body.base].name;
            j["exponent"] = body.exponent;
          } else {
            j["kind"] = "slice";
            j["source"] = g.rules()[body.source].name;
            j["from"] = body.from;
            j["to"] = body.to;
          }
        },
        rule.body);
    rules.push_back(std::move(j));
  }
  const Word w = collage_expand(g, limits.length_cap);
  const Attractor a = attractor_from_collage(g, limits.length_cap);
  json r = {{"n", n},
            {"rules", rules},
            {"axiom", g.rules()[g.axiom()].name},
            {"size", collage_size(g)},
            {"word", w.str()},
            {"length", w.size()},
            {"matches_thue_morse", w == thue_morse(n, limits.length_cap)},
            {"attractor", a.positions()}};
  add_verdict(r, w, a);
  return r;
}

json sturmian_record(const DirectiveSequence& d, const Limits& limits, bool exact) {
  const Word w = standard_sturmian(d, limits.length_cap);
  const SturmianAttractorResult s = sturmian_attractor(w);
  json r = {{"directive", directive_string(d)}, {"word", w.str()}, {"length", w.size()},
            {"eta", s.eta}};
  if (!s.degenerate && w.size() >= 4) {
    const PerDecomposition per = per_decomposition(w);
    r["per"] = {{"Q", per.q.str()},
                {"x", std::string(1, per.x)},
                {"y", std::string(1, per.y)},
                {"P", per.p.str()}};
  }
  r["gamma1"] = {{"positions", s.gamma1.positions()}, {"valid", s.gamma1_valid}};
  if (s.gamma2) {
    r["gamma2"] = {{"positions", s.gamma2->positions()}, {"valid", s.gamma2_valid}};
  } else {
    r["gamma2"] = nullptr;
  }
  r["degenerate"] = s.degenerate;
  r["predicted"] = to_string(s.predicted);
  r["chosen"] = to_string(s.chosen);
  r["attractor"] = s.attractor.positions();
  r["consecutive"] = s.attractor.positions()[1] == s.attractor.positions()[0] + 1;
  r["bwt_clustered"] = is_clustered_sturmian(w);
  add_verdict(r, w, s.attractor);
  if (exact) r["exact"] = minimize_json(minimal_attractor(w, {.node_budget = limits.node_budget}));
  return r;
}

json tm_record(std::size_t n, const Limits& limits, bool exact) {
  const Word t = thue_morse(n, limits.length_cap);
  const TmAttractor g = thue_morse_attractor(n);
  json r = {{"n", n},
            {"length", t.size()},
            {"attractor", g.positions.positions()},
            {"size", g.positions.size()}};
  if (t.size() <= 64) r["word"] = t.str();
  add_verdict(r, t, g.positions);
  if (n >= 4) {
    r["from_previous"] = tm_recurrence_step(thue_morse_attractor(n - 1).positions, n - 1) == g.positions;
  }
  // t_{n+1} has to be built for the crossing check; keep it desk-sized.
  if (n + 1 <= 16) {
    r["crossing_set"] = tm_crossing_set(n);
    r["crossing_lemma"] = tm_crossing_lemma_check(n);
  }
  if (exact) {
    const TmGammaReport rep = tm_gamma_lower(n, limits.node_budget);
    json j = {{"exact", rep.exact},
              {"value", rep.value},
              {"lower_bound", rep.lower_bound},
              {"at_least_three", rep.at_least_three()}};
    if (rep.exact) {
      j["conjecture_gamma_star_equals_n"] = rep.value == n;
      if (rep.minimum) j["minimum"] = rep.minimum->positions();
      if (rep.rejected_below) j["rejected_below"] = rep.rejected_below;
    }
    r["gamma"] = j;
  }
  return r;
}

json epistandard_spec_record(const EpistandardSpec& spec, const Limits& limits, bool exact) {
  spec.validate();
  const Word directive = epistandard_directive(spec);
  const char appended = epistandard_appended_letter(spec);
  epistandard(spec, limits.length_cap);  // throws past the cap
  json r = {{"family", to_string(spec.family)},
            {"k", spec.k},
            {"letters", spec.resolved_letters()},
            {"directive", directive.str()},
            {"appended", appended ? std::string(1, appended) : std::string()}};
  if (spec.family == EpistandardFamily::type_i) r["m"] = spec.m;
  if (spec.family == EpistandardFamily::type_ii) r["ell"] = spec.ell;
  r.update(epistandard_json(epistandard_attractor(spec, limits.node_budget), limits, exact));
  return r;
}

json epistandard_directive_record(const Word& directive, char appended, const Limits& limits,
                                  bool exact) {
  json r = {{"directive", directive.str()},
            {"appended", appended ? std::string(1, appended) : std::string()}};
  pal_closure(directive, limits.length_cap);  // throws past the cap
  r.update(epistandard_json(epistandard_attractor(directive, appended, limits.node_budget), limits,
                            exact));
  return r;
}

json debruijn_record(std::size_t sigma, std::size_t k, const Limits& limits, bool exact) {
  de_bruijn_linear(sigma, k, limits.length_cap);
  const DeBruijnBounds b = de_bruijn_bounds(sigma, k, exact, limits.node_budget);
  json r = {{"sigma", sigma},
            {"k", k},
            {"n", b.n},
            {"length", b.word.size()},
            {"word", b.word.str()},
            {"lz_phrases", b.lz_count},
            {"lower", b.lower},
            {"epsilon", b.epsilon},
            {"lz_above_lower", b.lz_above_lower()}};
  r["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  if (b.exact) {
    json e = minimize_json(*b.exact);
    e["max_gap"] = max_gap(b.exact->attractor);
    e["gaps_within_k"] = max_gap(b.exact->attractor) <= k;
    r["exact"] = e;
    add_verdict(r, b.word, b.exact->attractor);
  }
  return r;
}

}  // namespace strattr::cli
