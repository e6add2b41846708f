#include "cicy/nodelab/intersect.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/random.hpp"
#include "cicy/nodelab/resultant.hpp"

namespace cicy::nodelab {

ProjPoint normalize(const FieldContext& ctx, std::array<Element, 3> coords,
                    int multiplicity) {
  int last = 2;
  while (last >= 0 && ctx.is_zero(coords[last])) --last;
  if (last < 0) throw NodeLabError(ErrorKind::kBadInput, "zero projective point");
  const Element s = ctx.inv(coords[last]);
  for (auto& c : coords) c = ctx.mul(c, s);
  return {std::move(coords), multiplicity};
}

int Intersection::total_multiplicity() const {
  int total = 0;
  for (const auto& pt : points) total += pt.multiplicity;
  return total;
}

namespace {

using Mat3 = std::array<std::array<std::uint32_t, 3>, 3>;

std::uint32_t det3(const PrimeField& fp, const Mat3& b) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return fp.sub(fp.mul(b[r0][c0], b[r1][c1]), fp.mul(b[r0][c1], b[r1][c0]));
  };
  std::uint32_t d = fp.mul(b[0][0], minor(1, 2, 1, 2));
  d = fp.sub(d, fp.mul(b[0][1], minor(1, 2, 0, 2)));
  return fp.add(d, fp.mul(b[0][2], minor(1, 2, 0, 1)));
}

Mat3 random_invertible(const PrimeField& fp, Rng& rng) {
  for (;;) {
    Mat3 b{};
    for (auto& row : b) {
      for (auto& v : row) v = static_cast<std::uint32_t>(rng.below(fp.characteristic()));
    }
    if (det3(fp, b) != 0) return b;
  }
}

// form(1, t0, w) as a polynomial in w.
FqPoly restrict_to_line(const FieldContext& fq, const HomogeneousForm& form,
                        const Element& t0) {
  std::vector<Element> tpow{fq.one()};
  for (int e = 1; e <= form.degree(); ++e) tpow.push_back(fq.mul(tpow.back(), t0));
  std::vector<Element> c(form.degree() + 1, fq.zero());
  for (const auto& [m, v] : form.terms()) {
    c[m[2]] = fq.add(c[m[2]], fq.scale(tpow[m[1]], v));
  }
  return poly::trimmed(fq, std::move(c));
}

// The single root of a monic (w - w0)^j, or nothing if gcd is not of that shape.
std::optional<Element> sole_root(const FieldContext& fq, const FqPoly& h) {
  const int j = h.degree();
  if (j < 1) return std::nullopt;
  const Element w0 =
      fq.neg(fq.mul(h.c[j - 1], fq.inv(fq.from_int(j))));
  FqPoly power = poly::constant(fq, fq.one());
  const FqPoly lin = poly::trimmed(fq, std::vector<Element>{fq.neg(w0), fq.one()});
  for (int i = 0; i < j; ++i) power = poly::mul(fq, power, lin);
  if (!poly::equal(fq, power, h)) return std::nullopt;
  return w0;
}

}  // namespace

Intersection intersect_plane_curves(const HomogeneousForm& f,
                                    const HomogeneousForm& g,
                                    std::uint64_t seed, int retry_budget) {
  if (!(f.field() == g.field())) {
    throw NodeLabError(ErrorKind::kBadInput, "forms over different fields");
  }
  if (f.degree() < 1 || g.degree() < 1 || f.is_zero() || g.is_zero()) {
    throw NodeLabError(ErrorKind::kBadInput, "curves need nonzero forms of degree >= 1");
  }
  const PrimeField& fp = f.field();
  const int bezout = f.degree() * g.degree();
  if (bezout >= static_cast<int>(fp.characteristic())) {
    throw NodeLabError(ErrorKind::kBadInput, "deg f * deg g must stay below p");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    const Mat3 b = random_invertible(fp, rng);
    const HomogeneousForm fb = f.substitute(b);
    const HomogeneousForm gb = g.substitute(b);
    if (fb.coefficient({0, 0, f.degree()}) == 0 ||
        gb.coefficient({0, 0, g.degree()}) == 0) {
      continue;
    }
    const Resultant res = resultant(fb, gb, 2);
    if (res.poly.degree() != bezout) continue;

    auto factors = factor(fp, res.poly, derive_seed(seed, 2 * attempt));
    std::int64_t ext = 1;
    for (const auto& fac : factors) {
      ext = std::lcm(ext, static_cast<std::int64_t>(fac.poly.degree()));
      if (ext > kMaxExtensionDegree) {
        throw NodeLabError(ErrorKind::kFieldTooLarge,
                           "extension degree exceeds " +
                               std::to_string(kMaxExtensionDegree));
      }
    }
    FieldContext fq = make_field(fp.characteristic(), static_cast<int>(ext),
                                 derive_seed(seed, 2 * attempt + 1));
    Rng root_rng(derive_seed(seed, 1000003 + attempt));
    std::vector<ProjPoint> points;
    bool generic = true;
    for (const auto& fac : factors) {
      for (const auto& t0 : all_roots(fq, fac.poly, root_rng)) {
        const FqPoly common = poly::gcd(fq, restrict_to_line(fq, fb, t0),
                                        restrict_to_line(fq, gb, t0));
        const auto w0 = sole_root(fq, common);
        if (!w0) {
          generic = false;
          break;
        }
        // Original coordinates: B (1, t0, w0).
        std::array<Element, 3> pt;
        for (int i = 0; i < 3; ++i) {
          pt[i] = fq.add(fq.add(fq.embed(b[i][0]), fq.scale(t0, b[i][1])),
                         fq.scale(*w0, b[i][2]));
        }
        points.push_back(normalize(fq, std::move(pt), fac.multiplicity));
      }
      if (!generic) break;
    }
    if (!generic) continue;
    for (const auto& pt : points) {
      const std::array<Element, 3>& c = pt.coords;
      if (!fq.is_zero(f.evaluate(fq, c)) || !fq.is_zero(g.evaluate(fq, c))) {
        throw NodeLabError(ErrorKind::kVerificationFailed,
                           "rebuilt point does not lie on both curves");
      }
    }
    return {std::move(fq), std::move(points), std::move(factors), attempt};
  }
  throw NodeLabError(ErrorKind::kRetryBudgetExhausted,
                     "no generic chart in " + std::to_string(retry_budget) + " attempts");
}

NodeConfiguration sample_node_configuration(const PrimeField& fp, int deg_f,
                                            int deg_g, std::uint64_t seed,
                                            int max_draws) {
  for (int draw = 0; draw < max_draws; ++draw) {
    const std::uint64_t s = derive_seed(seed, draw);
    HomogeneousForm f = random_form(fp, deg_f, derive_seed(s, 0));
    HomogeneousForm g = random_form(fp, deg_g, derive_seed(s, 1));
    try {
      Intersection inter = intersect_plane_curves(f, g, derive_seed(s, 2));
      bool reduced = true;
      for (const auto& pt : inter.points) reduced = reduced && pt.multiplicity == 1;
      if (!reduced) continue;
      return {std::move(f), std::move(g), std::move(inter), draw};
    } catch (const NodeLabError& e) {
      if (e.kind() == ErrorKind::kCommonComponent ||
          e.kind() == ErrorKind::kFieldTooLarge ||
          e.kind() == ErrorKind::kRetryBudgetExhausted) {
        continue;
      }
      throw;
    }
  }
  throw NodeLabError(ErrorKind::kRetryBudgetExhausted,
                     "no reduced configuration in " + std::to_string(max_draws) + " draws");
}

}  // namespace cicy::nodelab
