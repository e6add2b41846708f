#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace cicy::nodelab {

/// What the univariate polynomial algorithms need from a coefficient field.
template <class F>
concept Field = requires(const F& f, const typename F::Elem& a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
};

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
template <Field F>
struct Poly {
  using Elem = typename F::Elem;
  std::vector<Elem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lead() const { return c.back(); }
};

namespace poly {

template <Field F>
Poly<F> trimmed(const F& f, std::vector<typename F::Elem> c) {
  while (!c.empty() && f.is_zero(c.back())) c.pop_back();
  return Poly<F>{std::move(c)};
}

template <Field F>
Poly<F> constant(const F& f, const typename F::Elem& a) {
  return trimmed(f, {a});
}

/// x^n
template <Field F>
Poly<F> monomial(const F& f, int n, typename F::Elem a) {
  std::vector<typename F::Elem> c(n + 1, f.zero());
  c[n] = std::move(a);
  return trimmed(f, std::move(c));
}

template <Field F>
Poly<F> x(const F& f) {
  return monomial(f, 1, f.one());
}

template <Field F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!f.equal(a.c[i], b.c[i])) return false;
  }
  return true;
}

template <Field F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::Elem> c(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f.add(c[i], b.c[i]);
  return trimmed(f, std::move(c));
}

template <Field F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::Elem> c(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f.sub(c[i], b.c[i]);
  return trimmed(f, std::move(c));
}

template <Field F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& s) {
  std::vector<typename F::Elem> c;
  c.reserve(a.c.size());
  for (const auto& v : a.c) c.push_back(f.mul(v, s));
  return trimmed(f, std::move(c));
}

template <Field F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename F::Elem> c(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
    }
  }
  return trimmed(f, std::move(c));
}

/// Quotient and remainder; throws std::domain_error on division by zero.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a,
                                   const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>{}, a};
  const auto lead_inv = f.inv(b.lead());
  std::vector<typename F::Elem> r = a.c;
  std::vector<typename F::Elem> q(a.c.size() - b.c.size() + 1, f.zero());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (f.is_zero(r[i])) continue;
    const auto coef = f.mul(r[i], lead_inv);
    q[i - db] = coef;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, b.c[j]));
    }
  }
  r.resize(db);
  return {trimmed(f, std::move(q)), trimmed(f, std::move(r))};
}

template <Field F>
Poly<F> rem(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <Field F>
Poly<F> quo(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).first;
}

template <Field F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.lead()));
}

/// Monic gcd (zero when both inputs are zero).
template <Field F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Returns (g, s, t) with s a + t b = g, g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F& f, Poly<F> a, Poly<F> b) {
  Poly<F> s0 = constant(f, f.one()), s1{};
  Poly<F> t0{}, t1 = constant(f, f.one());
  while (!b.is_zero()) {
    auto [q, r] = divmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
    auto s2 = sub(f, s0, mul(f, q, s1));
    auto t2 = sub(f, t0, mul(f, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  const auto li = f.inv(a.lead());
  return {scale(f, a, li), scale(f, s0, li), scale(f, t0, li)};
}

template <Field F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b,
               const Poly<F>& m) {
  return rem(f, mul(f, a, b), m);
}

template <Field F>
Poly<F> powmod(const F& f, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> result = rem(f, constant(f, f.one()), m);
  base = rem(f, base, m);
  while (e) {
    if (e & 1) result = mulmod(f, result, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return result;
}

template <Field F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.c.size() <= 1) return {};
  std::vector<typename F::Elem> c(a.c.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    c[i - 1] = f.mul(a.c[i], f.from_int(static_cast<std::int64_t>(i)));
  }
  return trimmed(f, std::move(c));
}

template <Field F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto acc = f.zero();
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) {
    acc = f.add(f.mul(acc, x), *it);
  }
  return acc;
}

}  // namespace poly
}  // namespace cicy::nodelab
