#include "cicy/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cicy {

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

const std::vector<std::vector<int>>& valid_multisets() {
  static const std::vector<std::vector<int>> kTypes = {
      {5}, {4, 2}, {3, 3}, {3, 2, 2}, {2, 2, 2, 2}};
  return kTypes;
}

ConstructionRow make_row(int index, std::vector<int> b, std::vector<int> a,
                         int mu, int r, int ell, std::string sing) {
  ConstructionRow row;
  row.table_index = index;
  row.b = std::move(b);
  row.a = std::move(a);
  row.mu = mu;
  row.r = r;
  row.ell = ell;
  row.a_penult = row.a.size() >= 2 ? row.a[row.a.size() - 2] : 0;
  row.a_last = row.a.empty() ? 0 : row.a.back();
  row.sing_desc = std::move(sing);
  return row;
}

const std::vector<ConstructionRow>& table() {
  static const std::vector<ConstructionRow> kRows = {
      make_row(1, {5}, {4, 1}, 3, 4, 16, "X ∩ Z(α11, α12)"),
      make_row(2, {5}, {3, 2}, 4, 4, 36, "X ∩ Z(α11, α12)"),
      make_row(3, {4, 2}, {4, 1, 1}, 3, 5, 4, "X ∩ Z(α22, α23)"),
      make_row(4, {2, 4}, {2, 3, 1}, 4, 5, 18,
               "X ∩ Z(α11, α12α23 − α13α22)"),
      make_row(5, {2, 4}, {2, 2, 2}, 5, 5, 32,
               "X ∩ Z(α21α12 − α22α11, α21α13 − α23α11)"),
      make_row(6, {3, 3}, {3, 2, 1}, 4, 5, 12,
               "X ∩ Z(α21α12 − α22α11, α21α13 − α23α11)"),
      make_row(7, {3, 2, 2}, {3, 2, 1, 1}, 4, 6, 6,
               "X ∩ Z(α22α33 − α23α32, α22α34 − α24α32)"),
      make_row(8, {2, 2, 3}, {2, 2, 2, 1}, 5, 6, 16,
               "X ∩ Z(linear, quadratic)"),
      make_row(9, {2, 2, 2, 2}, {2, 2, 2, 1, 1}, 5, 7, 8,
               "X ∩ Z(linear, quadratic)"),
  };
  return kRows;
}

}  // namespace

K3Family k3_family_for_mu(int mu) {
  switch (mu) {
    case 3:
      return K3Family::kQuartic;
    case 4:
      return K3Family::kTwoThree;
    case 5:
      return K3Family::kTwoTwoTwo;
    default:
      throw std::invalid_argument("no complete-intersection K3 in P^" +
                                  std::to_string(mu));
  }
}

int k3_degree(K3Family family) {
  switch (family) {
    case K3Family::kQuartic:
      return 4;
    case K3Family::kTwoThree:
      return 6;
    case K3Family::kTwoTwoTwo:
      return 8;
  }
  return 0;
}

std::string_view to_string(K3Family family) {
  switch (family) {
    case K3Family::kQuartic:
      return "QUARTIC";
    case K3Family::kTwoThree:
      return "TWO_THREE";
    case K3Family::kTwoTwoTwo:
      return "TWO_TWO_TWO";
  }
  return "?";
}

CicyType::CicyType(std::vector<int> degrees, int ambient)
    : degrees_(sorted_desc(std::move(degrees))), ambient_(ambient) {
  const auto& valid = valid_multisets();
  const bool known =
      std::find(valid.begin(), valid.end(), degrees_) != valid.end();
  const int sum = std::accumulate(degrees_.begin(), degrees_.end(), 0);
  if (!known || sum != ambient_ + 1) {
    throw std::invalid_argument("not a CICY type: (" + join(degrees_) +
                                ") in P^" + std::to_string(ambient_));
  }
}

CicyType CicyType::from_degrees(std::vector<int> degrees) {
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  return CicyType(std::move(degrees), sum - 1);
}

CicyType CicyType::parse(std::string_view text) {
  std::vector<int> degrees;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size()) {
      throw std::invalid_argument("not a CICY type: '" + std::string(text) +
                                  "'");
    }
    degrees.push_back(value);
    pos = comma + 1;
  }
  return from_degrees(std::move(degrees));
}

const std::vector<CicyType>& CicyType::all() {
  static const std::vector<CicyType> kAll = [] {
    std::vector<CicyType> out;
    for (const auto& degrees : valid_multisets()) {
      out.push_back(from_degrees(degrees));
    }
    return out;
  }();
  return kAll;
}

std::string CicyType::label() const { return join(degrees_); }

std::string ConstructionRow::b_label() const { return join(b); }
std::string ConstructionRow::a_label() const { return join(a); }

std::span<const ConstructionRow> load_catalog() { return table(); }

std::vector<std::string> validate_row(const ConstructionRow& row) {
  std::vector<std::string> report;
  const int r = row.r;
  const auto a_size = static_cast<int>(row.a.size());
  const auto b_size = static_cast<int>(row.b.size());

  if (a_size != r - 2 || b_size != r - 3 || r < 4) {
    report.emplace_back("degree list length violated");
  }
  if (row.mu < 3 || row.mu > 5) {
    report.emplace_back("mu out of range");
  }
  if (std::accumulate(row.a.begin(), row.a.end(), 0) !=
      std::accumulate(row.b.begin(), row.b.end(), 0)) {
    report.emplace_back("degree sum mismatch");
  }
  if (a_size >= 2) {
    if (row.a_penult != row.a[a_size - 2]) {
      report.emplace_back("distinguished degree a_{r-3} mismatch");
    }
    if (row.a_last != row.a[a_size - 1]) {
      report.emplace_back("distinguished degree a_{r-2} mismatch");
    }
    bool ordered = row.a[a_size - 2] >= row.a[a_size - 1];
    for (int i = 0; i + 2 < a_size; ++i) ordered = ordered && row.a[i] >= 2;
    if (!ordered) report.emplace_back("degree ordering violated");
  }
  // b_i = a_i below the last slot, which absorbs a_{r-3} + a_{r-2}.
  if (a_size == b_size + 1 && b_size >= 1) {
    bool structured = row.b.back() == row.a[a_size - 2] + row.a[a_size - 1];
    for (int i = 0; i + 1 < b_size; ++i) structured = structured && row.b[i] == row.a[i];
    if (!structured) report.emplace_back("threefold degree structure violated");
  }
  if (row.ell != (2 * row.mu - 2) * row.a_penult * row.a_last) {
    report.emplace_back("node-count formula violated");
  }
  try {
    (void)row.cicy_type();
  } catch (const std::invalid_argument&) {
    report.emplace_back("not a CICY type");
  }
  return report;
}

std::vector<ConstructionRow> rows_for_type(const CicyType& type) {
  std::vector<ConstructionRow> out;
  for (const auto& row : table()) {
    if (sorted_desc(row.b) == type.degrees() && row.r == type.ambient()) {
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace cicy
