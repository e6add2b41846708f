#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cicy::nodelab {

enum class ErrorKind {
  kNotPrime,
  kNoIrreducible,
  kCommonComponent,
  kDegenerateChart,
  kRetryBudgetExhausted,
  kFieldTooLarge,
  kRepeatedPoint,
  kVerificationFailed,
  kBadInput,
};

std::string_view to_string(ErrorKind kind);

/// Failure of a finite-field computation; kind() tells callers which ones are
/// worth a reseed.
class NodeLabError : public std::runtime_error {
 public:
  NodeLabError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cicy::nodelab
