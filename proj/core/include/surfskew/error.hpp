#pragma once

#include <stdexcept>
#include <string>

namespace surfskew {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad arguments to a generator, formula or construction.
class ParameterError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), message_(what) {}
    int line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

  private:
    int line_;
    std::string message_;
};

// Raised when a surgery precondition or its face-count postcondition fails.
class SurgeryError : public Error {
  public:
    using Error::Error;
};

// A construction, certificate or chain report contradicts itself.
class IntegrityError : public Error {
  public:
    using Error::Error;
};

// Input outside the domain where a quantity is defined (disconnected graph, forest, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

}  // namespace surfskew
