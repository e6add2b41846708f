#include "cicy/nodelab/spark.hpp"

#include <algorithm>

#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/form.hpp"

namespace cicy::nodelab {

Matrix<FieldContext> evaluation_matrix(const FieldContext& ctx,
                                       const std::vector<ProjPoint>& points,
                                       int d) {
  if (d < 1) throw NodeLabError(ErrorKind::kBadInput, "evaluation degree must be >= 1");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].multiplicity != 1) {
      throw NodeLabError(ErrorKind::kRepeatedPoint,
                         "point " + std::to_string(i) + " has multiplicity " +
                             std::to_string(points[i].multiplicity));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].coords == points[j].coords) {
        throw NodeLabError(ErrorKind::kRepeatedPoint,
                           "points " + std::to_string(j) + " and " +
                               std::to_string(i) + " coincide");
      }
    }
  }
  const auto mons = monomials(d);
  Matrix<FieldContext> m(ctx, points.size(), mons.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::array<std::vector<Element>, 3> powers;
    for (int v = 0; v < 3; ++v) {
      powers[v].push_back(ctx.one());
      for (int e = 1; e <= d; ++e) {
        powers[v].push_back(ctx.mul(powers[v].back(), points[i].coords[v]));
      }
    }
    for (std::size_t c = 0; c < mons.size(); ++c) {
      const auto& e = mons[c];
      m(i, c) = ctx.mul(ctx.mul(powers[0][e[0]], powers[1][e[1]]), powers[2][e[2]]);
    }
  }
  return m;
}

SparkReport independence_check(const FieldContext& ctx,
                               const std::vector<ProjPoint>& points, int d) {
  const auto m = evaluation_matrix(ctx, points, d);
  SparkReport report =
      full_spark(m, std::min<std::size_t>(points.size(), monomial_count(d)));
  report.degree = d;
  return report;
}

}  // namespace cicy::nodelab
