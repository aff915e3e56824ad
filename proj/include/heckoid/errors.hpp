#pragma once

#include <stdexcept>
#include <string>

namespace heckoid {

/// Domain error: bad input, violated precondition, malformed data.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An iteration or work budget ran out before the computation finished.
/// Reported distinctly so callers never mistake it for a definite answer.
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

/// Internal invariant broke; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace heckoid
