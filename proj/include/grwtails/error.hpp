// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Gaussian peak is narrower than the grid can resolve.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// An input lies outside the domain covered by the grid (or is otherwise out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyRegionError : public Error {
 public:
  using Error::Error;
};

/// A compact-support kernel was evaluated (log-gradient) where it vanishes.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// A collapse left no probability mass behind.
class AnnihilationError : public Error {
 public:
  using Error::Error;
};

/// An approximation was requested outside its validity domain.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// The explicit event stream would be too large to materialize.
class GuardError : public Error {
 public:
  using Error::Error;
};

class UnmeasurableTailError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Configuration rejected; carries every violation found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out;
    for (const auto& s : issues) {
      if (!out.empty()) out += "\n";
      out += s;
    }
    return out;
  }
  std::vector<std::string> issues_;
};

}  // namespace grw
