#include "cicy/nodelab/kernel_section.hpp"

#include <stdexcept>
#include <string>

#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/random.hpp"

namespace cicy::nodelab {

namespace {

HomogeneousForm zero_form(const PrimeField& fp, int degree) {
  return HomogeneousForm(fp, degree < 0 ? 0 : degree);
}

FormMatrix drop_column(const FormMatrix& m, std::size_t col) {
  FormMatrix out;
  for (const auto& row : m) {
    std::vector<HomogeneousForm> r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != col) r.push_back(row[j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

HomogeneousForm negate(const HomogeneousForm& f) {
  return scale(f, f.field().neg(1));
}

// Drops nominal degrees of zero forms so they can be retagged.
HomogeneousForm with_degree(const PrimeField& fp, const HomogeneousForm& f,
                            int degree) {
  if (f.is_zero()) return zero_form(fp, degree);
  return f;
}

}  // namespace

FormMatrix random_alphas(const PrimeField& fp, const std::vector<int>& b,
                         const std::vector<int>& a, std::uint64_t seed) {
  if (a.size() != b.size() + 1) {
    throw std::invalid_argument("need one more generator degree than threefold degree");
  }
  FormMatrix out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<HomogeneousForm> row;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const int deg = b[i] - a[j];
      row.push_back(deg < 0 ? zero_form(fp, 0)
                            : random_form(fp, deg, derive_seed(seed, i * a.size() + j)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

FormMatrix random_alphas(const PrimeField& fp, const ConstructionRow& row,
                         std::uint64_t seed) {
  return random_alphas(fp, row.b, row.a, seed);
}

HomogeneousForm form_determinant(const PrimeField& fp, const FormMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    HomogeneousForm one(fp, 0);
    one.set({0, 0, 0}, 1);
    return one;
  }
  if (n == 1) return m[0][0];
  HomogeneousForm det(fp, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    FormMatrix minor;
    for (std::size_t i = 1; i < n; ++i) minor.push_back(m[i]);
    minor = drop_column(minor, j);
    HomogeneousForm term = m[0][j] * form_determinant(fp, minor);
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

std::vector<HomogeneousForm> kernel_section(const std::vector<int>& b,
                                            const std::vector<int>& a,
                                            const FormMatrix& alphas) {
  if (a.size() != b.size() + 1 || alphas.size() != b.size()) {
    throw NodeLabError(ErrorKind::kBadInput, "alphas must be (r-3) x (r-2)");
  }
  if (alphas.empty() || alphas[0].empty()) {
    throw NodeLabError(ErrorKind::kBadInput, "empty coefficient matrix");
  }
  const PrimeField fp = alphas[0][0].field();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (alphas[i].size() != a.size()) {
      throw NodeLabError(ErrorKind::kBadInput, "alphas must be (r-3) x (r-2)");
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto& alpha = alphas[i][j];
      if (!(alpha.field() == fp)) {
        throw NodeLabError(ErrorKind::kBadInput, "forms over different fields");
      }
      const int want = b[i] - a[j];
      if (!alpha.is_zero() && alpha.degree() != want) {
        throw NodeLabError(ErrorKind::kBadInput,
                           "alpha_" + std::to_string(i + 1) + std::to_string(j + 1) +
                               " has degree " + std::to_string(alpha.degree()) +
                               ", expected " + std::to_string(want));
      }
    }
  }

  std::vector<HomogeneousForm> n;
  for (std::size_t j = 0; j < a.size(); ++j) {
    HomogeneousForm nj = form_determinant(fp, drop_column(alphas, j));
    if (j % 2 == 1) nj = negate(nj);
    if (!nj.is_zero() && nj.degree() != a[j]) {
      throw NodeLabError(ErrorKind::kVerificationFailed,
                         "N_" + std::to_string(j + 1) + " has degree " +
                             std::to_string(nj.degree()));
    }
    n.push_back(with_degree(fp, nj, a[j]));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    HomogeneousForm sum(fp, 0);
    for (std::size_t j = 0; j < a.size(); ++j) sum = sum + alphas[i][j] * n[j];
    if (!sum.is_zero()) {
      throw NodeLabError(ErrorKind::kVerificationFailed,
                         "row " + std::to_string(i + 1) + " of alphas * N is nonzero");
    }
  }
  return n;
}

std::vector<HomogeneousForm> kernel_section(const ConstructionRow& row,
                                            const FormMatrix& alphas) {
  return kernel_section(row.b, row.a, alphas);
}

}  // namespace cicy::nodelab
