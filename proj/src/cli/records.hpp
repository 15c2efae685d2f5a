// JSON records for each command. Each function is a thin composition of
// library calls; nothing here computes anything the library does not.
#ifndef STRATTR_CLI_RECORDS_HPP
#define STRATTR_CLI_RECORDS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"
#include "strattr/attractor.hpp"
#include "strattr/compressors.hpp"
#include "strattr/generators.hpp"
#include "strattr/word.hpp"

namespace strattr::cli {

using nlohmann::json;

struct Limits {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t length_cap = kDefaultLengthCap;
};

json witness_json(const Witness& w);
/// Sets "valid" and, when invalid, "witness" on `record`.
void add_verdict(json& record, const Word& w, const Attractor& gamma);

json verify_record(const Word& w, const Attractor& gamma);
json min_record(const Word& w, const Limits& limits, bool exhaustive);
json bounds_record(const Word& w, const Limits& limits, bool exact);
json bwt_record(const Word& w, char sentinel, RunEndpoint endpoint);
json lz_record(const Word& w, LzVariant variant);
json collage_tm_record(std::size_t n, const Limits& limits);

json sturmian_record(const DirectiveSequence& d, const Limits& limits, bool exact);
json tm_record(std::size_t n, const Limits& limits, bool exact);
json epistandard_spec_record(const EpistandardSpec& spec, const Limits& limits, bool exact);
json epistandard_directive_record(const Word& directive, char appended, const Limits& limits,
                                  bool exact);
json debruijn_record(std::size_t sigma, std::size_t k, const Limits& limits, bool exact);

}  // namespace strattr::cli

#endif  // STRATTR_CLI_RECORDS_HPP
