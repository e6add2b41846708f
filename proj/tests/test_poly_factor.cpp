#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/factor.hpp"

using namespace cicy::nodelab;

namespace {

FpPoly from(const PrimeField& fp, std::vector<std::uint32_t> c) {
  return poly::trimmed(fp, std::move(c));
}

FpPoly random_poly(const PrimeField& fp, int degree, Rng& rng) {
  std::vector<std::uint32_t> c(degree + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng.below(fp.characteristic()));
  c.back() = 1;
  return from(fp, std::move(c));
}

FpPoly product(const PrimeField& fp, const std::vector<Factor>& fs) {
  FpPoly out = poly::constant(fp, fp.one());
  for (const auto& f : fs) {
    for (int i = 0; i < f.multiplicity; ++i) out = poly::mul(fp, out, f.poly);
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const PrimeField fp(7);
  const FpPoly a = from(fp, {1, 2, 3});   // 3x^2 + 2x + 1
  const FpPoly b = from(fp, {6, 1});      // x - 1
  const auto [q, r] = poly::divmod(fp, a, b);
  CHECK(poly::equal(fp, poly::add(fp, poly::mul(fp, q, b), r), a));
  CHECK(r.degree() < 1);
  CHECK(poly::eval(fp, a, 1) == 6);
  CHECK(poly::derivative(fp, a).c == std::vector<std::uint32_t>{2, 6});
  const FpPoly g = poly::gcd(fp, poly::mul(fp, a, b), poly::mul(fp, b, b));
  CHECK(poly::equal(fp, g, b));
  const auto [d, s, t] = poly::xgcd(fp, a, b);
  CHECK(poly::equal(fp, poly::add(fp, poly::mul(fp, s, a), poly::mul(fp, t, b)), d));
  CHECK(poly::mul(fp, FpPoly{}, a).is_zero());
  CHECK(FpPoly{}.degree() < 0);
}

TEST_CASE("square-free decomposition") {
  const PrimeField fp(10007);
  const FpPoly x1 = from(fp, {1, 1});
  const FpPoly x2 = from(fp, {2, 0, 1});
  const FpPoly f = poly::mul(fp, poly::mul(fp, x1, x1), poly::mul(fp, x2, poly::mul(fp, x2, x2)));
  const auto parts = squarefree_decomposition(fp, f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == 2);
  CHECK(poly::equal(fp, parts[0].first, x1));
  CHECK(parts[1].second == 3);
  CHECK(poly::equal(fp, parts[1].first, x2));
  CHECK_THROWS_AS(squarefree_decomposition(fp, FpPoly{}), std::invalid_argument);
}

TEST_CASE("factorization reconstructs random polynomials") {
  for (std::uint64_t p : {7ULL, 101ULL, 10007ULL}) {
    const PrimeField fp(p);
    Rng rng(p);
    for (int trial = 0; trial < 30; ++trial) {
      const int deg = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(p - 1, 24)));
      FpPoly f = random_poly(fp, deg, rng);
      if (trial % 3 == 0) f = poly::mul(fp, f, random_poly(fp, 1, rng));
      if (f.degree() >= static_cast<int>(p)) continue;
      const auto fs = factor(fp, f, trial);
      CHECK(poly::equal(fp, product(fp, fs), poly::monic(fp, f)));
      for (const auto& fac : fs) {
        CHECK(fac.poly.lead() == 1);
        CHECK(is_irreducible(fp, fac.poly));
      }
      for (std::size_t i = 1; i < fs.size(); ++i) {
        CHECK(fs[i - 1].poly.degree() <= fs[i].poly.degree());
      }
      // Same seed, same output.
      const auto again = factor(fp, f, trial);
      REQUIRE(again.size() == fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) CHECK(again[i].poly.c == fs[i].poly.c);
    }
  }
}

TEST_CASE("x^(p-1) - 1 splits into p - 1 linear factors") {
  const PrimeField fp(11);
  std::vector<std::uint32_t> c(11, 0);
  c[10] = 1;
  c[0] = 10;
  const auto fs = factor(fp, from(fp, c), 0);
  CHECK(fs.size() == 10);
  for (const auto& f : fs) CHECK(f.poly.degree() == 1);
}

TEST_CASE("degree at or above p is rejected") {
  const PrimeField fp(11);
  std::vector<std::uint32_t> c(12, 0);
  c[11] = 1;
  c[1] = 10;
  CHECK_THROWS_AS(factor(fp, from(fp, c), 0), std::invalid_argument);
}

TEST_CASE("roots in an extension field") {
  const PrimeField fp(10007);
  Rng rng(9);
  for (int k : {1, 2, 3, 5, 8}) {
    // An irreducible of degree k and a field of degree 2k.
    FpPoly h;
    do {
      h = random_poly(fp, k, rng);
    } while (!is_irreducible(fp, h));
    const auto fq = make_field(10007, 2 * k, k);
    const auto roots = all_roots(fq, h, rng);
    REQUIRE(roots.size() == static_cast<std::size_t>(k));
    const FqPoly hq = lift(fq, h);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(fq.is_zero(poly::eval(fq, hq, roots[i])));
      for (std::size_t j = 0; j < i; ++j) CHECK(roots[i] != roots[j]);
    }
  }
  const auto f3 = make_field(10007, 3);
  Rng r2(1);
  try {
    find_root(f3, from(fp, {1, 0, 1}), r2);
    FAIL("degree 2 root in degree 3 field");
  } catch (const NodeLabError& e) {
    CHECK(e.kind() == ErrorKind::kBadInput);
  }
}

TEST_CASE("x^(p^2) - x over F_3 is the product of irreducibles of degree 1 and 2") {
  const PrimeField fp(3);
  std::vector<std::uint32_t> c(10, 0);
  c[9] = 1;
  c[1] = 2;
  // Degree 9 >= p, so build the factorization by distinct-degree directly.
  const auto blocks = distinct_degree(fp, from(fp, c));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].second == 1);
  CHECK(blocks[0].first.degree() == 3);
  CHECK(blocks[1].second == 2);
  CHECK(blocks[1].first.degree() == 6);  // three monic irreducible quadratics
}
