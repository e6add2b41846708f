#include "cicy/nodelab/resultant.hpp"

#include <utility>

#include "cicy/nodelab/errors.hpp"

namespace cicy::nodelab {

FpPoly bareiss_determinant(const PrimeField& fp,
                           std::vector<std::vector<FpPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return poly::constant(fp, fp.one());
  bool negate = false;
  FpPoly prev = poly::constant(fp, fp.one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const FpPoly num = poly::sub(fp, poly::mul(fp, m[k][k], m[i][j]),
                                     poly::mul(fp, m[i][k], m[k][j]));
        m[i][j] = poly::quo(fp, num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  FpPoly det = m[n - 1][n - 1];
  return negate ? poly::scale(fp, det, fp.neg(fp.one())) : det;
}

namespace {

// Coefficients of w^(deg - i), i = 0..deg, each a polynomial in t = v/u.
std::vector<FpPoly> coefficients_in(const HomogeneousForm& form, int w,
                                    int v) {
  const auto& fp = form.field();
  const int e = form.degree();
  std::vector<std::vector<std::uint32_t>> dense(
      e + 1, std::vector<std::uint32_t>(e + 1, 0));
  for (const auto& [m, c] : form.terms()) {
    const int i = e - m[w];
    dense[i][m[v]] = fp.add(dense[i][m[v]], c);
  }
  std::vector<FpPoly> out;
  for (auto& row : dense) out.push_back(poly::trimmed(fp, std::move(row)));
  return out;
}

}  // namespace

Resultant resultant(const HomogeneousForm& f, const HomogeneousForm& g,
                    int eliminated) {
  if (eliminated < 0 || eliminated > 2) {
    throw NodeLabError(ErrorKind::kBadInput, "eliminated variable must be 0, 1 or 2");
  }
  if (f.is_zero() || g.is_zero()) {
    throw NodeLabError(ErrorKind::kBadInput, "resultant of a zero form");
  }
  if (!(f.field() == g.field())) {
    throw NodeLabError(ErrorKind::kBadInput, "forms over different fields");
  }
  const auto& fp = f.field();
  Resultant res;
  res.eliminated = eliminated;
  res.remaining = eliminated == 0   ? std::array<int, 2>{1, 2}
                  : eliminated == 1 ? std::array<int, 2>{0, 2}
                                    : std::array<int, 2>{0, 1};
  const int ef = f.degree();
  const int eg = g.degree();
  res.formal_degree = ef * eg;

  Monomial pure_f{0, 0, 0}, pure_g{0, 0, 0};
  pure_f[eliminated] = ef;
  pure_g[eliminated] = eg;
  if (f.coefficient(pure_f) == 0 && g.coefficient(pure_g) == 0) {
    throw NodeLabError(ErrorKind::kDegenerateChart,
                       "both curves pass through the elimination center");
  }

  const auto a = coefficients_in(f, eliminated, res.remaining[1]);
  const auto b = coefficients_in(g, eliminated, res.remaining[1]);
  const int n = ef + eg;
  std::vector<std::vector<FpPoly>> syl(n, std::vector<FpPoly>(n));
  for (int r = 0; r < eg; ++r) {
    for (int i = 0; i <= ef; ++i) syl[r][r + i] = a[i];
  }
  for (int r = 0; r < ef; ++r) {
    for (int i = 0; i <= eg; ++i) syl[eg + r][r + i] = b[i];
  }
  res.poly = bareiss_determinant(fp, std::move(syl));
  if (res.poly.is_zero()) {
    throw NodeLabError(ErrorKind::kCommonComponent,
                       "resultant vanishes identically");
  }
  return res;
}

}  // namespace cicy::nodelab
