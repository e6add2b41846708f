#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cicy/nodelab/poly.hpp"
#include "cicy/nodelab/prime_field.hpp"
#include "cicy/nodelab/random.hpp"

namespace cicy::nodelab {

using FpPoly = Poly<PrimeField>;

/// Ben-Or test: no factor of degree <= deg/2, via gcd(f, x^(p^i) - x).
bool is_irreducible(const PrimeField& fp, const FpPoly& f);

/// Element of F_p[y]/(modulus): exactly k canonical coefficients, low to high.
struct Element {
  std::vector<std::uint32_t> c;

  friend bool operator==(const Element&, const Element&) = default;
};

/// The finite field F_(p^k) = F_p[y]/(M) for a monic irreducible M of degree
/// k. For k = 1 the modulus is y itself. Cheap to copy (shared immutable
/// state); safe to share across threads.
class FieldContext {
 public:
  using Elem = Element;

  /// Throws NodeLabError(kNoIrreducible) if the modulus is not monic
  /// irreducible.
  FieldContext(PrimeField fp, FpPoly modulus);

  const PrimeField& prime_field() const { return impl_->fp; }
  std::uint32_t characteristic() const { return impl_->fp.characteristic(); }
  int degree() const { return impl_->k; }
  const FpPoly& modulus() const { return impl_->modulus; }

  Elem zero() const { return Elem{std::vector<std::uint32_t>(impl_->k, 0)}; }
  Elem one() const { return embed(1); }
  Elem from_int(std::int64_t v) const { return embed(impl_->fp.from_int(v)); }
  /// Image of a prime-field residue.
  Elem embed(std::uint32_t v) const;
  /// The class of y; generates the field over F_p.
  Elem generator() const;
  /// Reduces an arbitrary F_p[y] polynomial.
  Elem from_poly(const FpPoly& poly) const;
  FpPoly to_poly(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a.c == b.c; }
  /// Whether a lies in the prime field.
  bool is_prime_element(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::uint32_t s) const;
  /// Fused a*b + c*d, used by elimination kernels.
  Elem mul_sub(const Elem& a, const Elem& b, const Elem& c,
               const Elem& d) const;  // a*b - c*d
  Elem pow(const Elem& a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Elem inv(const Elem& a) const;
  /// a^p, by the precomputed Frobenius matrix.
  Elem frobenius(const Elem& a) const;
  Elem frobenius(const Elem& a, int times) const;

  Elem random(Rng& rng) const;

  std::string to_string(const Elem& a) const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->fp == b.impl_->fp &&
            a.impl_->modulus.c == b.impl_->modulus.c);
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;

  struct Impl {
    PrimeField fp;
    FpPoly modulus;
    int k;
    // Products of k residues can be summed without overflow.
    bool lazy;
    // Row i is y^(i p) reduced; built on construction.
    std::vector<std::uint32_t> frobenius;
  };

  void reduce_into(std::vector<std::uint64_t>& wide, Elem& out) const;
};

/// Finds a monic irreducible modulus of degree k by seeded random search
/// (at most 64 k attempts) and returns the field. Throws
/// NodeLabError(kNotPrime) for a bad p, kNoIrreducible when the budget runs
/// out, std::invalid_argument for k < 1.
FieldContext make_field(std::uint64_t p, int k, std::uint64_t seed = 0);

}  // namespace cicy::nodelab
