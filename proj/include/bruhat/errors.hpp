#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bruhat {

// Thrown when an enumeration outgrows its safety cap. CLI maps this to exit 3.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A relation set that is not a pointed graded poset.
class NotGradable : public std::runtime_error {
 public:
  explicit NotGradable(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (pair specs, JSON payloads). Carries the offending
// position when one is known. CLI maps this to exit 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t pos = npos)
      : std::runtime_error(what), pos_(pos) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// A mathematical claim checked at runtime turned out false. CLI maps this to
// exit 1 when a verification command hits one.
class Discrepancy : public std::runtime_error {
 public:
  explicit Discrepancy(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bruhat
