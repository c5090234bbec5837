#ifndef SPLICERS_ERRORS_HPP
#define SPLICERS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splicers {

/// Precondition violated by the caller (bad size, probability, vertex set...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A randomized construction gave up after its retry or step cap.
class SamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters admit no valid object (e.g. empty non-interacting path set).
class ParametersTooTight : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An iterative solver hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. line() is 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace splicers

#endif  // SPLICERS_ERRORS_HPP
