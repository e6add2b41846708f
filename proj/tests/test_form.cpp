#include "doctest.h"

#include <sstream>

#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/form.hpp"

using namespace cicy::nodelab;

TEST_CASE("monomial order and counts") {
  for (int e = 0; e <= 8; ++e) {
    CHECK(monomial_count(e) == (e + 1) * (e + 2) / 2);
    CHECK(static_cast<int>(monomials(e).size()) == monomial_count(e));
  }
  const auto m2 = monomials(2);
  const std::vector<Monomial> expected = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                          {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(m2 == expected);
}

TEST_CASE("random forms") {
  const PrimeField fp(10007);
  const auto q = random_form(fp, 4, 1);
  CHECK(q.coefficient_vector().size() == 15);
  CHECK(q == random_form(fp, 4, 1));
  CHECK_FALSE(q == random_form(fp, 4, 2));
  CHECK(random_form(fp, 1, 99).coefficient_vector().size() == 3);
}

TEST_CASE("form arithmetic") {
  const PrimeField fp(7);
  const auto x = variable(fp, 0), y = variable(fp, 1), z = variable(fp, 2);
  const auto conic = x * x - y * z;
  CHECK(conic.degree() == 2);
  CHECK(conic.coefficient({2, 0, 0}) == 1);
  CHECK(conic.coefficient({0, 1, 1}) == 6);
  CHECK(conic.evaluate({1, 1, 1}) == 0);
  CHECK(conic.evaluate({2, 1, 4}) == 0);
  CHECK((conic - conic).is_zero());
  CHECK_THROWS_AS(x + conic, NodeLabError);
  HomogeneousForm f(fp, 2);
  CHECK_THROWS_AS(f.set({1, 0, 0}, 1), NodeLabError);
  CHECK(format_form(conic) == "x^2 + 6*y*z");
  CHECK(format_form(HomogeneousForm(fp, 3)) == "0");
}

TEST_CASE("substitution agrees with evaluation") {
  const PrimeField fp(10007);
  const auto f = random_form(fp, 4, 5);
  const std::array<std::array<std::uint32_t, 3>, 3> b = {{{1, 2, 3}, {0, 5, 7}, {11, 0, 13}}};
  const auto fb = f.substitute(b);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    std::array<std::uint32_t, 3> v;
    for (auto& c : v) c = static_cast<std::uint32_t>(rng.below(10007));
    std::array<std::uint32_t, 3> bv{};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) bv[r] = fp.add(bv[r], fp.mul(b[r][c], v[c]));
    }
    CHECK(fb.evaluate(v) == f.evaluate(bv));
  }
}

TEST_CASE("extension-field evaluation matches the prime field on embedded points") {
  const PrimeField fp(101);
  const auto ctx = make_field(101, 3, 2);
  const auto f = random_form(fp, 3, 8);
  const std::array<std::uint32_t, 3> v{4, 9, 77};
  const std::array<Element, 3> ve{ctx.embed(4), ctx.embed(9), ctx.embed(77)};
  CHECK(f.evaluate(ctx, ve) == ctx.embed(f.evaluate(v)));
}

TEST_CASE("form files round trip") {
  const PrimeField fp(10007);
  const auto f = random_form(fp, 3, 4);
  std::stringstream io;
  write_form(f, io);
  CHECK(io.str().rfind("p=10007 deg=3\n", 0) == 0);
  CHECK(read_form(io) == f);

  std::istringstream commented("# quartic\np=7 deg=2\n\n2 0 0 1\n0 1 1 -1\n");
  const auto g = read_form(commented);
  CHECK(g.coefficient({0, 1, 1}) == 6);

  std::istringstream bad_header("q=7 deg=2\n");
  CHECK_THROWS_AS(read_form(bad_header), NodeLabError);
  std::istringstream bad_degree("p=7 deg=2\n1 0 0 3\n");
  CHECK_THROWS_AS(read_form(bad_degree), NodeLabError);
  std::istringstream bad_prime("p=9 deg=2\n");
  CHECK_THROWS_AS(read_form(bad_prime), NodeLabError);
  std::istringstream dup("p=7 deg=1\n1 0 0 3\n1 0 0 2\n");
  CHECK_THROWS_AS(read_form(dup), NodeLabError);
}
