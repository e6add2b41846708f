#include "cicy/nodelab/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "cicy/nodelab/errors.hpp"

namespace cicy::nodelab {

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const PrimeField& fp,
                                                             const FpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  if (static_cast<std::uint64_t>(f.degree()) >= fp.characteristic()) {
    throw std::invalid_argument("degree must stay below the characteristic");
  }
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly a = poly::monic(fp, f);
  if (a.degree() == 0) return out;
  const FpPoly da = poly::derivative(fp, a);
  const FpPoly b = poly::gcd(fp, a, da);
  FpPoly c = poly::quo(fp, a, b);
  FpPoly d = poly::sub(fp, poly::quo(fp, da, b), poly::derivative(fp, c));
  for (int i = 1; c.degree() > 0; ++i) {
    const FpPoly s = poly::gcd(fp, c, d);
    c = poly::quo(fp, c, s);
    d = poly::sub(fp, poly::quo(fp, d, s), poly::derivative(fp, c));
    if (s.degree() > 0) out.emplace_back(s, i);
  }
  return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& fp,
                                                    const FpPoly& f) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = poly::monic(fp, f);
  const FpPoly x = poly::x(fp);
  FpPoly h = x;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = poly::powmod(fp, h, fp.characteristic(), rest);
    const FpPoly g = poly::gcd(fp, rest, poly::sub(fp, h, x));
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = poly::quo(fp, rest, g);
      h = poly::rem(fp, h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

std::vector<FpPoly> equal_degree(const PrimeField& fp, const FpPoly& f,
                                 int degree, Rng& rng) {
  const int n = f.degree();
  if (n <= degree) return {poly::monic(fp, f)};
  const std::uint64_t p = fp.characteristic();
  const FpPoly one = poly::constant(fp, fp.one());
  for (;;) {
    std::vector<std::uint32_t> coeffs(n);
    for (auto& v : coeffs) v = static_cast<std::uint32_t>(rng.below(p));
    const FpPoly a = poly::trimmed(fp, std::move(coeffs));
    if (a.degree() < 1) continue;
    // Trace of a down to F_p, in every residue field at once.
    FpPoly t = a;
    FpPoly power = a;
    for (int i = 1; i < degree; ++i) {
      power = poly::powmod(fp, power, p, f);
      t = poly::add(fp, t, power);
    }
    const FpPoly w =
        poly::sub(fp, poly::powmod(fp, t, (p - 1) / 2, f), one);
    const FpPoly g = poly::gcd(fp, f, w);
    if (g.degree() <= 0 || g.degree() >= n) continue;
    auto left = equal_degree(fp, g, degree, rng);
    auto right = equal_degree(fp, poly::quo(fp, f, g), degree, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

std::vector<Factor> factor(const PrimeField& fp, const FpPoly& f,
                           std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(fp, f)) {
    for (const auto& [block, degree] : distinct_degree(fp, part)) {
      for (auto& irr : equal_degree(fp, block, degree, rng)) {
        out.push_back({std::move(irr), mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.c < b.poly.c;
  });
  return out;
}

FqPoly lift(const FieldContext& fq, const FpPoly& f) {
  std::vector<Element> c;
  c.reserve(f.c.size());
  for (auto v : f.c) c.push_back(fq.embed(v));
  return poly::trimmed(fq, std::move(c));
}

Element find_root(const FieldContext& fq, const FpPoly& h, Rng& rng) {
  const PrimeField& fp = fq.prime_field();
  const int k = h.degree();
  const int ext = fq.degree();
  if (k < 1 || ext % k != 0) {
    throw NodeLabError(ErrorKind::kBadInput,
                       "factor degree does not divide the extension degree");
  }
  const FpPoly hm = poly::monic(fp, h);
  if (k == 1) return fq.embed(fp.neg(hm.c[0]));

  // x^(p^j) mod h; x^(p^k) = x since h is irreducible of degree k.
  std::vector<FqPoly> frob_powers;
  {
    FpPoly xp = poly::x(fp);
    for (int j = 0; j < k; ++j) {
      frob_powers.push_back(lift(fq, xp));
      xp = poly::powmod(fp, xp, fp.characteristic(), hm);
    }
  }

  const std::uint64_t half = (fp.characteristic() - 1) / 2;
  FqPoly cur = lift(fq, hm);
  const FqPoly one = poly::constant(fq, fq.one());
  while (cur.degree() > 1) {
    // T(theta) = Tr(a theta) for every root theta of h.
    std::vector<Element> sums(k, fq.zero());
    Element conj = fq.random(rng);
    for (int i = 0; i < ext; ++i) {
      sums[i % k] = fq.add(sums[i % k], conj);
      conj = fq.frobenius(conj);
    }
    FqPoly trace{};
    for (int j = 0; j < k; ++j) {
      trace = poly::add(fq, trace, poly::scale(fq, frob_powers[j], sums[j]));
    }
    trace = poly::rem(fq, trace, cur);
    const Element shift = fq.embed(static_cast<std::uint32_t>(
        rng.below(fp.characteristic())));
    trace = poly::add(fq, trace, poly::constant(fq, shift));
    const FqPoly w = poly::sub(fq, poly::powmod(fq, trace, half, cur), one);
    const FqPoly g = poly::gcd(fq, cur, w);
    if (g.degree() <= 0 || g.degree() >= cur.degree()) continue;
    cur = 2 * g.degree() <= cur.degree() ? g : poly::quo(fq, cur, g);
    cur = poly::monic(fq, cur);
  }
  const Element root = fq.neg(cur.c[0]);
  if (!fq.is_zero(poly::eval(fq, lift(fq, hm), root))) {
    throw NodeLabError(ErrorKind::kVerificationFailed, "root check failed");
  }
  return root;
}

std::vector<Element> all_roots(const FieldContext& fq, const FpPoly& h,
                               Rng& rng) {
  std::vector<Element> roots;
  Element r = find_root(fq, h, rng);
  for (int j = 0; j < h.degree(); ++j) {
    roots.push_back(r);
    r = fq.frobenius(r);
  }
  return roots;
}

}  // namespace cicy::nodelab
