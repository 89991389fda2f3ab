#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termdepth {

/// Raised when an operation's precondition is violated (wrong arity, term not
/// n-ary, mixed-arity signature where a single arity is required, ...).
class TermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Byte range into the original input text, half-open.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error("at bytes " + std::to_string(span.begin) + "-" +
                           std::to_string(span.end) + ": " + message),
        message_(message),
        span_(span) {}

  const std::string& message() const noexcept { return message_; }
  SourceSpan span() const noexcept { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

}  // namespace termdepth
