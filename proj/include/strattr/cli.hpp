#ifndef STRATTR_CLI_HPP
#define STRATTR_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strattr/attractor.hpp"
#include "strattr/errors.hpp"

namespace strattr::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotAttractor = 2;

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  bool mutate = false;  ///< corrupt one golden attractor on purpose
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SuiteCheck {
  std::string anchor;
  std::string claim;
  std::optional<bool> pass;  ///< nullopt for report-only entries
  std::string detail;
};

/// Every golden example and theorem check, in a fixed order.
std::vector<SuiteCheck> golden_suite(const SuiteOptions& options = {});

/// Plain-text rendering of a report: scalars as "key: value", flat object
/// arrays as tables, everything else indented.
std::string render_text(const nlohmann::json& report);

}  // namespace strattr::cli

#endif  // STRATTR_CLI_HPP
