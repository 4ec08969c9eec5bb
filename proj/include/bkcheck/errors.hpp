#pragma once

#include <stdexcept>
#include <string>

namespace bkcheck {

/// Malformed user input: unknown Cartan type, bad flag values, unparsable files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or memory budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bkcheck
