#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cicy/nodelab/ext_field.hpp"
#include "cicy/nodelab/intersect.hpp"
#include "cicy/nodelab/matrix.hpp"

namespace cicy::nodelab {

struct SparkReport {
  std::size_t ell = 0;            // rows (points)
  std::optional<int> degree;      // form degree, when rows are point evaluations
  std::size_t m = 0;              // subset size tested
  bool passed = false;
  std::optional<std::vector<std::size_t>> witness;  // rank-deficient m-subset
  std::uint64_t subsets_checked = 0;                // full m-subsets verified
};

/// Row i holds every degree-d monomial, in canonical order, evaluated at
/// point i (points are used as normalized). Throws
/// NodeLabError(kRepeatedPoint) if a point repeats or has multiplicity > 1,
/// kBadInput for d < 1.
Matrix<FieldContext> evaluation_matrix(const FieldContext& ctx,
                                       const std::vector<ProjPoint>& points,
                                       int d);

namespace detail {

// Depth-first search over row subsets in lexicographic order. Each node
// carries its candidate rows already reduced against the chosen rows, so
// extending the subset costs one elimination step per candidate.
template <Field F>
class SparkSearch {
 public:
  using Elem = typename F::Elem;
  using Rows = std::vector<std::vector<Elem>>;

  SparkSearch(const Matrix<F>& m, std::size_t level) : m_(m), level_(level) {}

  SparkReport run() {
    SparkReport report;
    report.ell = m_.rows();
    report.m = level_;
    if (level_ == 0) {
      report.passed = true;
      report.subsets_checked = 1;
      return report;
    }
    Rows rows;
    for (std::size_t j = 0; j < m_.rows(); ++j) rows.push_back(m_.row(j));
    chosen_.clear();
    descend(0, rows, report);
    report.passed = !report.witness.has_value();
    return report;
  }

 private:
  // reduced[i] is row start + i reduced modulo the span of chosen_.
  void descend(std::size_t start, const Rows& reduced, SparkReport& report) {
    const F& f = m_.field();
    const std::size_t depth = chosen_.size();
    const std::size_t rows = m_.rows();
    const std::size_t cols = m_.cols();
    for (std::size_t j = start; j + (level_ - depth) <= rows; ++j) {
      const auto& v = reduced[j - start];
      std::size_t pivot = 0;
      while (pivot < cols && f.is_zero(v[pivot])) ++pivot;
      if (pivot == cols) {
        std::vector<std::size_t> w = chosen_;
        w.push_back(j);
        for (std::size_t k = j + 1; w.size() < level_; ++k) w.push_back(k);
        report.witness = std::move(w);
        return;
      }
      if (depth + 1 == level_) {
        ++report.subsets_checked;
        continue;
      }
      const Elem inv = f.inv(v[pivot]);
      Rows child;
      child.reserve(rows - j - 1);
      for (std::size_t i = j + 1; i < rows; ++i) {
        std::vector<Elem> r = reduced[i - start];
        if (!f.is_zero(r[pivot])) {
          const Elem c = f.mul(r[pivot], inv);
          for (std::size_t k = pivot + 1; k < cols; ++k) {
            if (!f.is_zero(v[k])) r[k] = f.sub(r[k], f.mul(c, v[k]));
          }
          r[pivot] = f.zero();
        }
        child.push_back(std::move(r));
      }
      chosen_.push_back(j);
      descend(j + 1, child, report);
      chosen_.pop_back();
      if (report.witness) return;
    }
  }

  const Matrix<F>& m_;
  std::size_t level_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// Whether every m-row submatrix of M has rank m, by exhaustive depth-first
/// search over row subsets in lexicographic order. On failure the witness is the lexicographically first
/// rank-deficient m-subset. Throws std::invalid_argument if
/// m > min(rows, cols).
template <Field F>
SparkReport full_spark(const Matrix<F>& m, std::size_t level) {
  if (level > m.rows() || level > m.cols()) {
    throw std::invalid_argument("spark level exceeds matrix dimensions");
  }
  return detail::SparkSearch<F>(m, level).run();
}

/// full_spark of the degree-d evaluation matrix at level min(ell, N_d):
/// whether the points impose independent conditions on plane curves of
/// degree d.
SparkReport independence_check(const FieldContext& ctx,
                               const std::vector<ProjPoint>& points, int d);

}  // namespace cicy::nodelab
