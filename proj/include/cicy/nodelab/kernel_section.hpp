#pragma once

#include <cstdint>
#include <vector>

#include "cicy/catalog.hpp"
#include "cicy/nodelab/form.hpp"

namespace cicy::nodelab {

/// alphas[i][j]: rows indexed by the threefold degrees b_i, columns by the
/// generator degrees a_j.
using FormMatrix = std::vector<std::vector<HomogeneousForm>>;

/// Seeded random coefficient forms with deg alpha_ij = b_i - a_j; entries
/// of negative prescribed degree are zero forms. Throws
/// std::invalid_argument unless a.size() == b.size() + 1.
FormMatrix random_alphas(const PrimeField& fp, const std::vector<int>& b,
                         const std::vector<int>& a, std::uint64_t seed);
FormMatrix random_alphas(const PrimeField& fp, const ConstructionRow& row,
                         std::uint64_t seed);

/// Determinant of a square matrix of forms by cofactor expansion along the
/// first row.
HomogeneousForm form_determinant(const PrimeField& fp, const FormMatrix& m);

/// Generator of the null space of alphas: N_j = (-1)^j det(alphas without
/// column j), j counted from 0. Each N_j is returned with nominal degree a_j.
/// Before returning, checks that every N_j is homogeneous of degree a_j and
/// that sum_j alpha_ij N_j = 0 for every i; a failure throws
/// NodeLabError(kVerificationFailed). Shape or degree mismatches in the
/// input throw NodeLabError(kBadInput).
std::vector<HomogeneousForm> kernel_section(const std::vector<int>& b,
                                            const std::vector<int>& a,
                                            const FormMatrix& alphas);
std::vector<HomogeneousForm> kernel_section(const ConstructionRow& row,
                                            const FormMatrix& alphas);

}  // namespace cicy::nodelab
