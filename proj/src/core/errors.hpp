#pragma once

#include <stdexcept>
#include <string>

namespace ssmthom {

enum class ErrorKind {
  InvalidArgument,  // bad parameters, grammar violations, precondition failures
  Schema,           // malformed input files
  NonDivisible,     // exact polynomial division left a remainder
  Underdetermined,  // linear stage has a nullspace
  Inconsistent,     // linear stage has no solution
  CatalogIncomplete,
  MatherBound,
  NonFinite,        // jet computation did not stabilize
  MissingEntry,     // a required table/catalog entry is absent
  Io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ssmthom
