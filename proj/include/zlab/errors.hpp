#pragma once

#include <stdexcept>
#include <string>

namespace zlab {

/// Machine-readable error classes. The CLI maps them onto exit codes.
enum class ErrorClass {
  domain,
  pole,
  precision,
  root,
  tracking,
  ambiguous_branch,
  configuration,
};

const char* to_string(ErrorClass c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorClass::domain, what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorClass::pole, what) {}
};

/// Requested accuracy is out of reach; carries the best bound that was achievable.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, double achievable)
      : Error(ErrorClass::precision, what), achievable_(achievable) {}
  double achievable_bound() const noexcept { return achievable_; }

 private:
  double achievable_;
};

class RootError : public Error {
 public:
  explicit RootError(const std::string& what) : Error(ErrorClass::root, what) {}
};

class TrackingError : public Error {
 public:
  explicit TrackingError(const std::string& what) : Error(ErrorClass::tracking, what) {}
};

class AmbiguousBranchError : public Error {
 public:
  explicit AmbiguousBranchError(const std::string& what)
      : Error(ErrorClass::ambiguous_branch, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorClass::configuration, what) {}
};

}  // namespace zlab
