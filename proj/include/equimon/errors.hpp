#ifndef EQUIMON_ERRORS_HPP
#define EQUIMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equimon {

/// Base class for all input/validation errors raised by the library.
/// The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration or closure would exceed its configured cap.
/// Verification treats this as "skipped", not as a failure.
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace equimon

#endif
