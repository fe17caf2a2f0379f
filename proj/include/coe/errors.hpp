#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coe {

/// Enumeration and degree caps shared by every module.
struct Limits {
  int n_max = 6;
  std::uint64_t budget = 10'000'000;
};

/// Process-wide defaults; the CLI overrides these from --n-max / --budget
/// before any computation starts.
Limits& default_limits();

/// Base class for all library errors. `code()` is the stable
/// machine-readable tag printed by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept = 0;
};

/// Precondition on values violated (odd degree, weight mismatch, index > N, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "domain_error"; }
};

/// A factorial-size enumeration would exceed the configured budget or n_max.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "resource_error"; }
};

/// Evaluation hit a genuine pole of a reduced rational function.
class PoleError : public Error {
 public:
  PoleError(const std::string& at, const std::string& what)
      : Error(what), at_(at) {}
  const char* code() const noexcept override { return "pole_error"; }
  const std::string& at() const noexcept { return at_; }

 private:
  std::string at_;
};

/// An invariant that the mathematics guarantees was violated. Always a defect.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "internal_error"; }
};

}  // namespace coe
