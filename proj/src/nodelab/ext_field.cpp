#include "cicy/nodelab/ext_field.hpp"

#include <sstream>
#include <stdexcept>

#include "cicy/nodelab/errors.hpp"

namespace cicy::nodelab {

bool is_irreducible(const PrimeField& fp, const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FpPoly x = poly::x(fp);
  FpPoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = poly::powmod(fp, h, fp.characteristic(), f);
    const FpPoly g = poly::gcd(fp, f, poly::sub(fp, h, x));
    if (g.degree() > 0) return false;
  }
  return true;
}

FieldContext::FieldContext(PrimeField fp, FpPoly modulus) {
  const int k = modulus.degree();
  if (k < 1 || modulus.lead() != 1 || !is_irreducible(fp, modulus)) {
    throw NodeLabError(ErrorKind::kNoIrreducible,
                       "modulus is not monic irreducible");
  }
  const std::uint64_t p = fp.characteristic();
  const bool lazy =
      (p - 1) * (p - 1) <= (UINT64_MAX >> 1) / static_cast<std::uint64_t>(2 * k + 1);
  auto impl = std::make_shared<Impl>(Impl{fp, std::move(modulus), k, lazy, {}});
  impl_ = impl;

  // Frobenius matrix: row i = (y^p)^i mod M.
  std::vector<std::uint32_t> frob(static_cast<std::size_t>(k) * k, 0);
  const Elem yp = pow(generator(), p);
  Elem row = one();
  for (int i = 0; i < k; ++i) {
    std::copy(row.c.begin(), row.c.end(), frob.begin() + static_cast<std::size_t>(i) * k);
    row = mul(row, yp);
  }
  impl->frobenius = std::move(frob);
}

FieldContext::Elem FieldContext::embed(std::uint32_t v) const {
  Elem e = zero();
  e.c[0] = v % impl_->fp.characteristic();
  return e;
}

FieldContext::Elem FieldContext::generator() const {
  if (impl_->k == 1) {
    // y = 0 modulo the identity modulus.
    return zero();
  }
  Elem e = zero();
  e.c[1] = 1;
  return e;
}

FieldContext::Elem FieldContext::from_poly(const FpPoly& poly) const {
  const FpPoly r = poly::rem(impl_->fp, poly, impl_->modulus);
  Elem e = zero();
  std::copy(r.c.begin(), r.c.end(), e.c.begin());
  return e;
}

FpPoly FieldContext::to_poly(const Elem& a) const {
  return poly::trimmed(impl_->fp, a.c);
}

bool FieldContext::is_zero(const Elem& a) const {
  for (auto v : a.c) {
    if (v) return false;
  }
  return true;
}

bool FieldContext::is_prime_element(const Elem& a) const {
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    if (a.c[i]) return false;
  }
  return true;
}

FieldContext::Elem FieldContext::add(const Elem& a, const Elem& b) const {
  const auto& fp = impl_->fp;
  Elem r{std::vector<std::uint32_t>(impl_->k)};
  for (int i = 0; i < impl_->k; ++i) r.c[i] = fp.add(a.c[i], b.c[i]);
  return r;
}

FieldContext::Elem FieldContext::sub(const Elem& a, const Elem& b) const {
  const auto& fp = impl_->fp;
  Elem r{std::vector<std::uint32_t>(impl_->k)};
  for (int i = 0; i < impl_->k; ++i) r.c[i] = fp.sub(a.c[i], b.c[i]);
  return r;
}

FieldContext::Elem FieldContext::neg(const Elem& a) const {
  const auto& fp = impl_->fp;
  Elem r{std::vector<std::uint32_t>(impl_->k)};
  for (int i = 0; i < impl_->k; ++i) r.c[i] = fp.neg(a.c[i]);
  return r;
}

FieldContext::Elem FieldContext::scale(const Elem& a, std::uint32_t s) const {
  const auto& fp = impl_->fp;
  Elem r{std::vector<std::uint32_t>(impl_->k)};
  for (int i = 0; i < impl_->k; ++i) r.c[i] = fp.mul(a.c[i], s);
  return r;
}

void FieldContext::reduce_into(std::vector<std::uint64_t>& wide,
                               Elem& out) const {
  const int k = impl_->k;
  const std::uint64_t p = impl_->fp.characteristic();
  const auto& m = impl_->modulus.c;
  for (int i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t top = wide[i] % p;
    if (top == 0) continue;
    const std::uint64_t t = p - top;
    std::uint64_t* base = wide.data() + (i - k);
    if (impl_->lazy) {
      for (int j = 0; j < k; ++j) base[j] += t * m[j];
    } else {
      for (int j = 0; j < k; ++j) base[j] = (base[j] + t * m[j]) % p;
    }
  }
  out.c.resize(k);
  for (int i = 0; i < k; ++i) out.c[i] = static_cast<std::uint32_t>(wide[i] % p);
}

FieldContext::Elem FieldContext::mul(const Elem& a, const Elem& b) const {
  const int k = impl_->k;
  const std::uint64_t p = impl_->fp.characteristic();
  if (k == 1) {
    return Elem{{static_cast<std::uint32_t>(std::uint64_t{a.c[0]} * b.c[0] % p)}};
  }
  std::vector<std::uint64_t> wide(2 * k - 1, 0);
  if (impl_->lazy) {
    for (int i = 0; i < k; ++i) {
      const std::uint64_t ai = a.c[i];
      if (!ai) continue;
      std::uint64_t* w = wide.data() + i;
      for (int j = 0; j < k; ++j) w[j] += ai * b.c[j];
    }
  } else {
    for (int i = 0; i < k; ++i) {
      const std::uint64_t ai = a.c[i];
      if (!ai) continue;
      for (int j = 0; j < k; ++j) wide[i + j] = (wide[i + j] + ai * b.c[j]) % p;
    }
  }
  Elem out;
  reduce_into(wide, out);
  return out;
}

FieldContext::Elem FieldContext::mul_sub(const Elem& a, const Elem& b,
                                         const Elem& c, const Elem& d) const {
  const int k = impl_->k;
  const std::uint64_t p = impl_->fp.characteristic();
  if (k == 1 || !impl_->lazy) return sub(mul(a, b), mul(c, d));
  // a*b + (p - c)*d accumulated in one pass.
  std::vector<std::uint64_t> wide(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    const std::uint64_t ai = a.c[i];
    const std::uint64_t ci = c.c[i] ? p - c.c[i] : 0;
    std::uint64_t* w = wide.data() + i;
    if (ai) {
      for (int j = 0; j < k; ++j) w[j] += ai * b.c[j];
    }
    if (ci) {
      for (int j = 0; j < k; ++j) w[j] += ci * d.c[j];
    }
  }
  Elem out;
  reduce_into(wide, out);
  return out;
}

FieldContext::Elem FieldContext::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

FieldContext::Elem FieldContext::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  const auto& fp = impl_->fp;
  const auto [g, s, t] = poly::xgcd(fp, to_poly(a), impl_->modulus);
  (void)t;
  if (g.degree() != 0) {
    throw NodeLabError(ErrorKind::kVerificationFailed, "non-invertible element");
  }
  return from_poly(s);
}

FieldContext::Elem FieldContext::frobenius(const Elem& a) const {
  const int k = impl_->k;
  if (k == 1) return a;
  const std::uint64_t p = impl_->fp.characteristic();
  std::vector<std::uint64_t> acc(k, 0);
  const auto& m = impl_->frobenius;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t ai = a.c[i];
    if (!ai) continue;
    const std::uint32_t* row = m.data() + static_cast<std::size_t>(i) * k;
    if (impl_->lazy) {
      for (int j = 0; j < k; ++j) acc[j] += ai * row[j];
    } else {
      for (int j = 0; j < k; ++j) acc[j] = (acc[j] + ai * row[j]) % p;
    }
  }
  Elem out{std::vector<std::uint32_t>(k)};
  for (int j = 0; j < k; ++j) out.c[j] = static_cast<std::uint32_t>(acc[j] % p);
  return out;
}

FieldContext::Elem FieldContext::frobenius(const Elem& a, int times) const {
  Elem r = a;
  for (int i = 0; i < times % impl_->k; ++i) r = frobenius(r);
  return r;
}

FieldContext::Elem FieldContext::random(Rng& rng) const {
  Elem e{std::vector<std::uint32_t>(impl_->k)};
  for (auto& v : e.c) {
    v = static_cast<std::uint32_t>(rng.below(impl_->fp.characteristic()));
  }
  return e;
}

std::string FieldContext::to_string(const Elem& a) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) out << ',';
    out << a.c[i];
  }
  out << ']';
  return out.str();
}

FieldContext make_field(std::uint64_t p, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  const PrimeField fp(p);
  if (k == 1) return FieldContext(fp, poly::x(fp));
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
  const long budget = 64L * k;
  for (long attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::uint32_t> c(k + 1);
    for (int i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(rng.below(p));
    c[k] = 1;
    if (c[0] == 0) continue;
    FpPoly candidate = poly::trimmed(fp, std::move(c));
    if (is_irreducible(fp, candidate)) return FieldContext(fp, std::move(candidate));
  }
  throw NodeLabError(ErrorKind::kNoIrreducible,
                     "no irreducible of degree " + std::to_string(k) +
                         " found within " + std::to_string(budget) + " attempts");
}

}  // namespace cicy::nodelab
