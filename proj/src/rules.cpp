#include "cicy/rules.hpp"

#include <stdexcept>

namespace cicy {

CurveClass::CurveClass(std::int64_t d, std::int64_t g) : d_(d), g_(g) {
  if (d < 1 || g < 0) {
    throw std::invalid_argument("curve class needs d >= 1 and g >= 0, got d=" +
                                std::to_string(d) + " g=" + std::to_string(g));
  }
}

std::string_view to_string(ExistenceBranch branch) {
  switch (branch) {
    case ExistenceBranch::kStrictInequality:
      return "STRICT_INEQ";
    case ExistenceBranch::kEqualityBranch:
      return "EQUALITY_BRANCH";
    case ExistenceBranch::kExcludedPair:
      return "EXCLUDED_PAIR";
    case ExistenceBranch::kFail:
      return "FAIL";
  }
  return "?";
}

ExistenceVerdict k3_exists(K3Family family, const CurveClass& curve) {
  const BigInt d = curve.d();
  const BigInt g = curve.g();
  const BigInt d2 = d * d;

  bool equality = false;
  BigInt scale;
  std::pair<std::int64_t, std::int64_t> excluded;
  switch (family) {
    case K3Family::kQuartic:
      scale = 8;
      excluded = {5, 3};
      break;
    case K3Family::kTwoThree:
      scale = 12;
      excluded = {7, 4};
      // g = d^2/12 + 1/4
      equality = 12 * g == d2 + 3;
      break;
    case K3Family::kTwoTwoTwo:
      scale = 16;
      excluded = {9, 5};
      equality = 16 * g == d2 && curve.d() % 8 == 4;
      break;
  }

  if (equality) return {true, ExistenceBranch::kEqualityBranch};
  if (scale * g < d2) {
    if (curve.d() == excluded.first && curve.g() == excluded.second) {
      return {false, ExistenceBranch::kExcludedPair};
    }
    return {true, ExistenceBranch::kStrictInequality};
  }
  return {false, ExistenceBranch::kFail};
}

bool cond_degree_window(const ConstructionRow& row, const CurveClass& curve) {
  const BigInt d = curve.d();
  const BigInt g = curve.g();
  const BigInt a = row.a_last;
  const BigInt mu1 = row.mu - 1;
  return d <= 2 * a * mu1 || d * a > a * a * mu1 + g;
}

bool cond_node_budget(const ConstructionRow& row, const CurveClass& curve) {
  const BigInt budget =
      BigInt(row.a_last) * (2 * row.a_penult - row.a_last) * (row.mu - 1);
  const BigInt needed =
      BigInt(curve.g()) + (row.a_penult == row.a_last ? 1 : 2);
  return budget >= needed;
}

bool cond_node_surplus(const ConstructionRow& row, const CurveClass& curve) {
  return BigInt(row.ell) >= BigInt(curve.g()) + 2;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt expected_count(const ConstructionRow& row, std::int64_t g) {
  if (g < 0 || static_cast<std::int64_t>(row.ell) < g + 2) {
    throw std::domain_error("theorem hypotheses not met: ell=" +
                            std::to_string(row.ell) +
                            " < g+2=" + std::to_string(g + 2));
  }
  return binomial(row.ell - 2, g);
}

Certificate certify(const ConstructionRow& row, const CurveClass& curve) {
  Certificate cert{row, curve, {}, false, false, false, false, std::nullopt};
  cert.existence = k3_exists(row.family(), curve);
  cert.cond_degree_window = cicy::cond_degree_window(row, curve);
  cert.cond_node_budget = cicy::cond_node_budget(row, curve);
  cert.cond_node_surplus = cicy::cond_node_surplus(row, curve);
  cert.admissible = cert.existence.exists && cert.cond_degree_window &&
                    cert.cond_node_budget && cert.cond_node_surplus;
  if (cert.admissible) {
    cert.expected_count = cicy::expected_count(row, curve.g());
  }
  return cert;
}

}  // namespace cicy
