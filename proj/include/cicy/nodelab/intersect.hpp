#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cicy/nodelab/ext_field.hpp"
#include "cicy/nodelab/factor.hpp"
#include "cicy/nodelab/form.hpp"

namespace cicy::nodelab {

/// Point of P^2 over an extension field, scaled so that its last nonzero
/// coordinate is 1.
struct ProjPoint {
  std::array<Element, 3> coords;
  int multiplicity = 1;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Throws NodeLabError(kBadInput) for the zero vector.
ProjPoint normalize(const FieldContext& ctx, std::array<Element, 3> coords,
                    int multiplicity = 1);

/// Largest extension degree the lab will build for one intersection.
inline constexpr int kMaxExtensionDegree = 3000;

struct Intersection {
  FieldContext field;             // F_(p^L) holding every point
  std::vector<ProjPoint> points;  // with intersection multiplicities
  std::vector<Factor> factors;    // of the chart resultant
  int chart_retries = 0;          // coordinate changes rejected

  int extension_degree() const { return field.degree(); }
  int total_multiplicity() const;
};

/// All intersection points of two plane curves over F_p-bar.
///
/// A seeded random change of coordinates is retried until no curve passes
/// through the elimination center, no intersection point lies on the line
/// at infinity of the chart, and no two points share a projection. The
/// resultant is factored, every point is rebuilt in the single field
/// F_(p^L) with L the lcm of the factor degrees, and the multiplicity of a
/// point is the multiplicity of its root in the resultant.
///
/// Errors (NodeLabError): kCommonComponent, kRetryBudgetExhausted,
/// kFieldTooLarge when L > kMaxExtensionDegree, kBadInput for degree 0 or
/// mismatched fields.
Intersection intersect_plane_curves(const HomogeneousForm& f,
                                    const HomogeneousForm& g,
                                    std::uint64_t seed, int retry_budget = 32);

/// Two seeded random forms whose intersection is reduced (every point has
/// multiplicity 1).
struct NodeConfiguration {
  HomogeneousForm f;
  HomogeneousForm g;
  Intersection intersection;
  int resamples = 0;  // draws rejected before this one
};

/// Draws (f, g) from the seed stream, discarding draws with a common
/// component, a non-reduced intersection or an oversized field. Throws
/// NodeLabError(kRetryBudgetExhausted) after max_draws rejected draws.
NodeConfiguration sample_node_configuration(const PrimeField& fp, int deg_f,
                                            int deg_g, std::uint64_t seed,
                                            int max_draws = 16);

}  // namespace cicy::nodelab
