#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqsym {

/// The truncation context has too few x- or y-variables for the request.
class TruncationTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator polynomial has a nonzero constant term.
class NotInMaximalIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial could not be written in the truncated M-basis.
class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  /// Message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

}  // namespace dqsym
