#pragma once

#include <cstdint>

namespace cicy::nodelab {

bool is_prime(std::uint64_t n);

/// Arithmetic modulo an odd prime p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  /// Throws NodeLabError(kNotPrime) unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace cicy::nodelab
