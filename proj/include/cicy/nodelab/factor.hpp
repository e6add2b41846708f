#pragma once

#include <cstdint>
#include <vector>

#include "cicy/nodelab/ext_field.hpp"
#include "cicy/nodelab/random.hpp"

namespace cicy::nodelab {

using FqPoly = Poly<FieldContext>;

struct Factor {
  FpPoly poly;       // monic irreducible
  int multiplicity;  // exponent in the factored polynomial
};

/// Yun's square-free decomposition of a nonzero polynomial: pairs (s_i, i)
/// with f = lc * prod s_i^i, each s_i square-free and pairwise coprime.
/// Requires deg f < p.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const PrimeField& fp,
                                                             const FpPoly& f);

/// Splits a square-free monic polynomial into products of the irreducible
/// factors of each degree: pairs (product, degree).
std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& fp,
                                                    const FpPoly& f);

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles that
/// all have the given degree.
std::vector<FpPoly> equal_degree(const PrimeField& fp, const FpPoly& f,
                                 int degree, Rng& rng);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Throws std::invalid_argument for the
/// zero polynomial or deg f >= p.
std::vector<Factor> factor(const PrimeField& fp, const FpPoly& f,
                           std::uint64_t seed);

/// One root in F_q of an irreducible h over F_p whose degree divides
/// [F_q : F_p]. Throws NodeLabError(kBadInput) if the degree does not divide.
Element find_root(const FieldContext& fq, const FpPoly& h, Rng& rng);

/// All deg h roots of h in F_q: a root and its Frobenius conjugates.
std::vector<Element> all_roots(const FieldContext& fq, const FpPoly& h,
                               Rng& rng);

/// Lifts an F_p polynomial into F_q[x].
FqPoly lift(const FieldContext& fq, const FpPoly& f);

}  // namespace cicy::nodelab
