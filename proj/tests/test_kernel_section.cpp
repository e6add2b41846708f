#include "doctest.h"

#include "cicy/catalog.hpp"
#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/kernel_section.hpp"

using namespace cicy::nodelab;

namespace {

// sum_j alpha_ij(P) N_j(P) at random points of F_p^3.
bool vanishes_pointwise(const FormMatrix& alphas, const std::vector<HomogeneousForm>& n,
                        std::uint64_t seed, int samples) {
  const PrimeField& fp = alphas[0][0].field();
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::array<std::uint32_t, 3> pt;
    for (auto& c : pt) c = static_cast<std::uint32_t>(rng.below(fp.characteristic()));
    for (const auto& row : alphas) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        acc = fp.add(acc, fp.mul(row[j].evaluate(pt), n[j].evaluate(pt)));
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closed form for b=(4,2), a=(3,2,1)") {
  const PrimeField fp(10007);
  const std::vector<int> b = {4, 2}, a = {3, 2, 1};
  const auto al = random_alphas(fp, b, a, 3);
  CHECK(al[1][0].is_zero());  // degree 2 - 3 < 0
  const auto n = kernel_section(b, a, al);
  REQUIRE(n.size() == 3);
  CHECK(n[0] == al[0][1] * al[1][2] - al[0][2] * al[1][1]);
  CHECK(n[1] == scale(al[0][0] * al[1][2], fp.neg(1)));
  CHECK(n[2] == al[0][0] * al[1][1]);
  CHECK(n[0].degree() == 3);
  CHECK(n[1].degree() == 2);
  CHECK(n[2].degree() == 1);
}

TEST_CASE("quintic row (5)/(3,2) gives (alpha_12, -alpha_11)") {
  const PrimeField fp(10007);
  const auto& row = cicy::load_catalog()[1];
  const auto al = random_alphas(fp, row, 8);
  const auto n = kernel_section(row, al);
  REQUIRE(n.size() == 2);
  CHECK(n[0] == al[0][1]);
  CHECK(n[1] == scale(al[0][0], fp.neg(1)));
  CHECK(n[0].degree() == 3);
  CHECK(n[1].degree() == 2);
}

TEST_CASE("every table row: alphas * N = 0 and deg N_j = a_j") {
  const PrimeField fp(10007);
  for (const auto& row : cicy::load_catalog()) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto al = random_alphas(fp, row, seed);
      const auto n = kernel_section(row, al);
      REQUIRE(n.size() == row.a.size());
      for (std::size_t j = 0; j < n.size(); ++j) {
        CHECK(n[j].degree() == row.a[j]);
        for (const auto& [m, v] : n[j].terms()) CHECK(m[0] + m[1] + m[2] == row.a[j]);
      }
      CHECK(vanishes_pointwise(al, n, seed, 200));
      bool any_nonzero = false;
      for (const auto& nj : n) any_nonzero = any_nonzero || !nj.is_zero();
      CHECK(any_nonzero);
    }
  }
}

TEST_CASE("form determinant") {
  const PrimeField fp(101);
  const auto x = variable(fp, 0), y = variable(fp, 1);
  const FormMatrix m = {{x, y}, {y, x}};
  CHECK(form_determinant(fp, m) == x * x - y * y);
}

TEST_CASE("input checks") {
  const PrimeField fp(101);
  const std::vector<int> b = {4, 2}, a = {3, 2, 1};
  auto al = random_alphas(fp, b, a, 1);
  try {
    kernel_section(b, {3, 2}, al);
    FAIL("no error");
  } catch (const NodeLabError& e) {
    CHECK(e.kind() == ErrorKind::kBadInput);
  }
  al[0][0] = random_form(fp, 2, 9);
  CHECK_THROWS_AS(kernel_section(b, a, al), NodeLabError);
  CHECK_THROWS_AS(random_alphas(fp, b, {1, 1}, 0), std::invalid_argument);
}

TEST_CASE("alphas are deterministic") {
  const PrimeField fp(10007);
  const auto& row = cicy::load_catalog()[8];
  CHECK(random_alphas(fp, row, 4) == random_alphas(fp, row, 4));
}
