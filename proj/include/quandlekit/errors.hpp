#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quandlekit {

/// Malformed polynomial, ideal, or table text. `position` is a 0-based
/// character offset into the parsed string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position) +
                           " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// The ideal may be fine mathematically but falls outside the fragment we
/// can enumerate (no integer member, or no generator monic up to a unit).
class UnsupportedPresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotASubquandle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A loaded table, group, or MCQ violates its axioms.
class AxiomViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quandlekit
