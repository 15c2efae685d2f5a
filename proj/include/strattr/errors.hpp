#ifndef STRATTR_ERRORS_HPP
#define STRATTR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strattr {

// Range errors use std::out_of_range, precondition violations on the shape of
// an input use std::domain_error. The two types below cover what the standard
// hierarchy does not.

/// Thrown when a generated word would exceed the configured length cap, or
/// when an exact search runs out of its node budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction that a theorem guarantees turns out not to
/// verify. This always indicates a bug (or a counterexample) and is never
/// swallowed.
class theorem_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Default cap on generated word lengths (2^24 symbols).
inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 24;

inline void check_length_cap(std::size_t length, std::size_t cap, const std::string& what) {
  if (length > cap) {
    throw resource_error(what + ": length " + std::to_string(length) + " exceeds cap " +
                         std::to_string(cap));
  }
}

}  // namespace strattr

#endif  // STRATTR_ERRORS_HPP
