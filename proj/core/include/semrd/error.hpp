#pragma once

#include <stdexcept>
#include <string>

namespace semrd {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in rule/instance/matrix text, with 1-based position.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

/// A stated precondition or instance invariant does not hold.
/// Carries a human-readable witness of the violation.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& what, std::string witness = "")
        : Error(witness.empty() ? what : what + " [witness: " + witness + "]"),
          witness(std::move(witness)) {}
    std::string witness;
};

/// Configured size limit exceeded (universe cap, enumeration cap, ...).
class CapExceeded : public Error {
  public:
    using Error::Error;
};

/// Numerical solver failed to converge or target is infeasible.
class NumericError : public Error {
  public:
    using Error::Error;
};

} // namespace semrd
