#pragma once

#include <stdexcept>
#include <string>

namespace apw {

// Input violating an operation's preconditions (CLI exit 2).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A genericity/structure assumption failed (non-generic linear forms,
// degenerate sample, ...). Callers may resample.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounded retries exhausted without reaching a decision (CLI exit 3).
struct undetermined_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariant; indicates a bug (CLI exit 4).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_internal(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace apw
