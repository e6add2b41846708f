#pragma once

#include <array>
#include <vector>

#include "cicy/nodelab/ext_field.hpp"
#include "cicy/nodelab/form.hpp"

namespace cicy::nodelab {

/// Homogeneous resultant of two plane curves with one variable eliminated.
///
/// The result is a binary form of degree deg f * deg g in the two remaining
/// variables (u, v), taken in index order. It is stored dehomogenized at
/// u = 1, as a polynomial in t = v/u; a drop in t-degree counts roots at
/// u = 0.
struct Resultant {
  FpPoly poly;
  int formal_degree = 0;
  int eliminated = 2;
  std::array<int, 2> remaining{0, 1};

  int roots_at_infinity() const {
    return poly.is_zero() ? 0 : formal_degree - poly.degree();
  }
};

/// Determinant of a square matrix over F_p[t] by Bareiss fraction-free
/// elimination (every division is exact).
FpPoly bareiss_determinant(const PrimeField& fp,
                           std::vector<std::vector<FpPoly>> m);

/// Sylvester resultant with respect to variable `eliminated` (0, 1, 2 for
/// x, y, z), using formal degrees deg f and deg g.
///
/// Errors: zero input -> kBadInput; both pure powers of the eliminated
/// variable absent -> kDegenerateChart; identically zero resultant ->
/// kCommonComponent.
Resultant resultant(const HomogeneousForm& f, const HomogeneousForm& g,
                    int eliminated);

}  // namespace cicy::nodelab
