#pragma once

#include <stdexcept>
#include <string>

namespace logmonoid {

/// Base class of every error raised by the library. All of them are input
/// or precondition failures; the CLI maps them to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data: dimension mismatches, maps that do not respect relations,
/// parse failures.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UngradedMonoid : public Error {
 public:
  explicit UngradedMonoid(const std::string& what = "ungraded monoid")
      : Error(what) {}
};

class NonPointedCone : public Error {
 public:
  explicit NonPointedCone(const std::string& what = "non-pointed cone")
      : Error(what) {}
};

class NotSaturated : public Error {
 public:
  explicit NotSaturated(const std::string& what = "not saturated")
      : Error(what) {}
};

class NotKummer : public Error {
 public:
  explicit NotKummer(const std::string& what = "not Kummer") : Error(what) {}
};

class NotInvertible : public Error {
 public:
  explicit NotInvertible(const std::string& what = "n not invertible")
      : Error(what) {}
};

class InconsistentAction : public Error {
 public:
  explicit InconsistentAction(const std::string& what = "inconsistent action")
      : Error(what) {}
};

class MismatchedBase : public Error {
 public:
  explicit MismatchedBase(const std::string& what = "mismatched base monoid")
      : Error(what) {}
};

}  // namespace logmonoid
