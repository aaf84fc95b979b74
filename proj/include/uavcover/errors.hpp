#pragma once

#include <stdexcept>
#include <string>

namespace uavcover {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad scenario fields, violated preconditions, schema errors.
// CLI exit code 3.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// An operation was called outside its mathematical domain
// (e.g. radius above the turning-point altitude).
class DomainError : public InputError {
public:
  explicit DomainError(const std::string& what) : InputError(what) {}
};

// No altitude achieves the requested coverage radius.
class UncoverableError : public DomainError {
public:
  explicit UncoverableError(const std::string& what) : DomainError(what) {}
};

// The swarm cannot cover the target under the given constraints.
// CLI exit code 2.
class InfeasibleError : public Error {
public:
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

// An iterative method failed to converge within its iteration budget.
// CLI exit code 4.
class ToleranceError : public Error {
public:
  explicit ToleranceError(const std::string& what) : Error(what) {}
};

}  // namespace uavcover
