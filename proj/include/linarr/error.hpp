#pragma once

#include <stdexcept>
#include <string>

namespace linarr {

/// Degenerate geometric input (zero triple, identical lines, ...).
struct degenerate_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structural validation failure (duplicate lines, bad partition, ...).
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A constructive strategy's hypothesis does not hold for the input.
/// Callers are expected to classify first or fall back to the oracle.
struct strategy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal algorithm invariant failed; indicates a bug, not bad input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Search size guard tripped; pass a larger guard to override.
struct size_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed; carries 1-based line/column.
struct parse_error : std::runtime_error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

/// Randomized generation did not produce a valid arrangement in budget.
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linarr
