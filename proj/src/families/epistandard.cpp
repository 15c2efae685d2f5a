#include <stdexcept>

#include "strattr/families.hpp"

namespace strattr {

EpistandardAttractorResult epistandard_attractor(const Word& directive, char appended,
                                                 std::uint64_t node_budget) {
  const PalTrace trace = pal_closure(directive);
  std::string text = trace.word.str();
  std::vector<std::size_t> pos;
  for (const auto& [letter, p] : trace.insertion_positions) pos.push_back(p);
  if (appended != '\0') {
    text.push_back(appended);
    if (!trace.insertion_positions.contains(appended)) pos.push_back(text.size());
  }

  EpistandardAttractorResult r;
  r.word = Word(text);
  r.candidate = Attractor(std::move(pos), r.word.size());
  r.candidate_valid = is_attractor(r.word, r.candidate);
  if (r.candidate_valid) {
    r.attractor = r.candidate;
  } else {
    r.from_minimizer = true;
    r.attractor = minimal_attractor(r.word, {.node_budget = node_budget}).attractor;
  }
  const std::size_t sigma = r.word.distinct_symbols();
  if (r.attractor.size() != sigma) {
    throw theorem_violation("epistandard word \"" + r.word.str() + "\" has no attractor of size " +
                            std::to_string(sigma) + " (found " +
                            std::to_string(r.attractor.size()) + ")");
  }
  return r;
}

EpistandardAttractorResult epistandard_attractor(const EpistandardSpec& spec,
                                                 std::uint64_t node_budget) {
  return epistandard_attractor(epistandard_directive(spec), epistandard_appended_letter(spec),
                               node_budget);
}

}  // namespace strattr
