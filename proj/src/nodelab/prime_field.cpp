#include "cicy/nodelab/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "cicy/nodelab/errors.hpp"

namespace cicy::nodelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime:
      return "NOT_PRIME";
    case ErrorKind::kNoIrreducible:
      return "NO_IRREDUCIBLE";
    case ErrorKind::kCommonComponent:
      return "COMMON_COMPONENT";
    case ErrorKind::kDegenerateChart:
      return "DEGENERATE_CHART";
    case ErrorKind::kRetryBudgetExhausted:
      return "RETRY_BUDGET_EXHAUSTED";
    case ErrorKind::kFieldTooLarge:
      return "FIELD_TOO_LARGE";
    case ErrorKind::kRepeatedPoint:
      return "REPEATED_POINT";
    case ErrorKind::kVerificationFailed:
      return "VERIFICATION_FAILED";
    case ErrorKind::kBadInput:
      return "BAD_INPUT";
  }
  return "UNKNOWN";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (!is_prime(p)) {
    throw NodeLabError(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (p == 2 || p >= (1ULL << 31)) {
    throw NodeLabError(ErrorKind::kNotPrime,
                       std::to_string(p) + " is not an odd prime below 2^31");
  }
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

}  // namespace cicy::nodelab
