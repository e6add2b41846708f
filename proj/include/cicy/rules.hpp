#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cicy/catalog.hpp"

namespace cicy {

using BigInt = boost::multiprecision::cpp_int;

/// Degree and genus of a smooth curve class L on the K3 surface.
/// h^0(L) = g + 1, so dim|L| = g and L^2 = 2g - 2.
class CurveClass {
 public:
  /// Throws std::invalid_argument unless d >= 1 and g >= 0.
  CurveClass(std::int64_t d, std::int64_t g);

  std::int64_t d() const { return d_; }
  std::int64_t g() const { return g_; }
  std::int64_t dim_linear_system() const { return g_; }
  std::int64_t self_intersection() const { return 2 * g_ - 2; }
  std::int64_t h0() const { return g_ + 1; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  std::int64_t d_;
  std::int64_t g_;
};

/// Why the K3 existence predicate holds or fails.
enum class ExistenceBranch {
  kStrictInequality,  // holds through the strict g < d^2/c inequality
  kEqualityBranch,    // holds through the sporadic equality case
  kExcludedPair,      // inequality holds but (d, g) is the family's exception
  kFail,              // neither the inequality nor the equality case holds
};

std::string_view to_string(ExistenceBranch branch);

struct ExistenceVerdict {
  bool exists = false;
  ExistenceBranch branch = ExistenceBranch::kFail;
};

/// Whether a K3 surface of the given family carries a smooth irreducible curve
/// of class (d, g) independent from the hyperplane class. Integer-only.
ExistenceVerdict k3_exists(K3Family family, const CurveClass& curve);

/// d <= 2 a_last (mu - 1)  or  d a_last > a_last^2 (mu - 1) + g.
bool cond_degree_window(const ConstructionRow& row, const CurveClass& curve);

/// a_last (2 a_penult - a_last)(mu - 1) >= g + 2, relaxed to g + 1 when the
/// two distinguished degrees coincide.
bool cond_node_budget(const ConstructionRow& row, const CurveClass& curve);

/// ell >= g + 2.
bool cond_node_surplus(const ConstructionRow& row, const CurveClass& curve);

/// Number of isolated smooth curves the nodal degeneration deforms to:
/// binomial(ell - 2, g). Throws std::domain_error("theorem hypotheses not
/// met") when ell < g + 2.
BigInt expected_count(const ConstructionRow& row, std::int64_t g);

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

struct Certificate {
  ConstructionRow row;
  CurveClass curve;
  ExistenceVerdict existence;
  bool cond_degree_window = false;
  bool cond_node_budget = false;
  bool cond_node_surplus = false;
  bool admissible = false;
  std::optional<BigInt> expected_count;  // present iff admissible

  /// Fixed note on the hypotheses that hold for general coefficient forms
  /// once the numeric conditions are met; they are not computed.
  static constexpr std::string_view kGenericityNote =
      "remaining hypotheses (trivial canonical bundle, smooth general member, "
      "nodes general on the curves, vanishing normal-bundle H^1, codimension-one "
      "restriction) hold for general coefficient forms";
};

/// Evaluates every numeric condition of the construction for one row and
/// curve class. Pure.
Certificate certify(const ConstructionRow& row, const CurveClass& curve);

}  // namespace cicy
