#pragma once

#include <stdexcept>
#include <string>

namespace dcenter {

enum class ErrorKind {
  EmptyInput,
  Domain,
  Precondition,
  BoundedComputation,
  Ambiguity,
  Boundary,
  SpecialCase,
  Size,
  Solver,
  Census,
  Classification,
  PortraitInvalid,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above; the
/// C API maps them one-to-one onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dcenter
