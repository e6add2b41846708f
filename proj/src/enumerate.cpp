#include "cicy/enumerate.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cicy {

namespace {

using Clause = TheoremClause;
using Bound = TheoremClause::Bound;

std::vector<Clause> leading(std::int64_t g1_bound) {
  return {{0, 0, Bound::kConstant, 1}, {1, 1, Bound::kConstant, g1_bound}};
}

std::vector<Clause> concat(std::vector<Clause> head,
                           const std::vector<Clause>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote in csv line");
  fields.push_back(std::move(current));
  return fields;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  const long long value = std::stoll(text, &used);
  if (used != text.size()) throw std::runtime_error("bad integer '" + text + "'");
  return value;
}

nlohmann::ordered_json certificate_json(const CicyType& type, std::int64_t d,
                                        std::int64_t g,
                                        const std::optional<Certificate>& cert) {
  nlohmann::ordered_json j;
  j["type"] = type.label();
  j["d"] = d;
  j["g"] = g;
  j["admissible"] = cert.has_value();
  if (!cert) return j;
  j["row"] = cert->row.table_index;
  j["b"] = cert->row.b;
  j["a"] = cert->row.a;
  j["mu"] = cert->row.mu;
  j["ell"] = cert->row.ell;
  j["exists_on_k3"] = cert->existence.exists;
  j["existence_branch"] = std::string(to_string(cert->existence.branch));
  j["cond_degree_window"] = cert->cond_degree_window;
  j["cond_node_budget"] = cert->cond_node_budget;
  j["cond_node_surplus"] = cert->cond_node_surplus;
  j["expected_count"] = cert->expected_count->str();
  return j;
}

std::string format_degrees(const std::vector<std::int64_t>& ds) {
  // Runs of consecutive degrees collapse to "lo-hi".
  std::ostringstream out;
  for (std::size_t i = 0; i < ds.size();) {
    std::size_t j = i;
    while (j + 1 < ds.size() && ds[j + 1] == ds[j] + 1) ++j;
    if (i) out << ' ';
    out << ds[i];
    if (j > i) out << '-' << ds[j];
    i = j + 1;
  }
  return out.str();
}

}  // namespace

std::optional<Certificate> admissible(const CicyType& type, std::int64_t d,
                                      std::int64_t g) {
  const CurveClass curve(d, g);
  for (const auto& row : rows_for_type(type)) {
    Certificate cert = certify(row, curve);
    if (cert.admissible) return cert;
  }
  return std::nullopt;
}

MinDegree min_degree(const CicyType& type, std::int64_t g, std::int64_t d_max) {
  MinDegree result;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    if (admissible(type, d, g)) result.admissible.push_back(d);
  }
  if (!result.admissible.empty()) result.min = result.admissible.front();
  return result;
}

bool quintic_oracle(std::int64_t d, std::int64_t g) {
  const std::int64_t d2 = d * d;
  const bool first_row =
      (8 * g < d2 && d2 <= 16) || g <= std::min<std::int64_t>(12, d - 3);
  const bool second_row =
      (12 * g < d2 && d2 <= 144 && !(d == 7 && g == 4)) ||
      (d == 3 && g == 1) || (d == 9 && g == 7) ||
      g <= std::min<std::int64_t>(22, 2 * d - 13);
  return first_row || second_row;
}

AdmissibilityFn certificate_path() {
  return [](const CicyType& type, std::int64_t d, std::int64_t g) {
    return admissible(type, d, g).has_value();
  };
}

AdmissibleTable build_table(const CicyType& type, std::int64_t d_max,
                            std::int64_t g_max) {
  AdmissibleTable table{.cicy = type, .d_max = d_max, .g_max = g_max, .cells = {}};
  for (std::int64_t d = 1; d <= d_max; ++d) {
    for (std::int64_t g = 0; g <= g_max; ++g) {
      table.cells.emplace(std::pair{d, g}, admissible(type, d, g));
    }
  }
  return table;
}

std::int64_t TheoremClause::min_degree(std::int64_t g) const {
  switch (kind) {
    case Bound::kConstant:
      return k;
    case Bound::kShift:
      return g + k;
    case Bound::kHalfShift:
      return (g + k + 1) / 2;
  }
  return 0;
}

std::string TheoremClause::describe() const {
  std::ostringstream out;
  if (g_lo == g_hi) {
    out << "g=" << g_lo;
  } else {
    out << g_lo << "<=g<=" << g_hi;
  }
  switch (kind) {
    case Bound::kConstant:
      out << " and d>=" << k;
      break;
    case Bound::kShift:
      out << " and d>=g+" << k;
      break;
    case Bound::kHalfShift:
      out << " and d>=(g+" << k << ")/2";
      break;
  }
  return out.str();
}

const std::vector<TheoremClause>& theorem_reference(const CicyType& type) {
  static const std::map<std::string, std::vector<Clause>> kReference = {
      {"5", concat(leading(3), {{2, 6, Bound::kShift, 3},
                                {7, 9, Bound::kShift, 2},
                                {10, 10, Bound::kConstant, 11},
                                {11, 22, Bound::kHalfShift, 13}})},
      {"4,2", concat(leading(3), {{2, 2, Bound::kConstant, 5},
                                  {3, 8, Bound::kShift, 4},
                                  {9, 11, Bound::kShift, 3},
                                  {12, 15, Bound::kHalfShift, 16}})},
      {"3,3", concat(leading(3), {{2, 2, Bound::kConstant, 5},
                                  {3, 7, Bound::kShift, 4}})},
      {"3,2,2", concat(leading(3), {{2, 2, Bound::kConstant, 5},
                                    {3, 3, Bound::kConstant, 7},
                                    {4, 10, Bound::kShift, 5}})},
      {"2,2,2,2", concat(leading(4), {{2, 2, Bound::kConstant, 6},
                                      {3, 3, Bound::kConstant, 7}})},
  };
  return kReference.at(type.label());
}

std::optional<std::int64_t> reference_min_degree(const CicyType& type,
                                                 std::int64_t g) {
  for (const auto& clause : theorem_reference(type)) {
    if (clause.g_lo <= g && g <= clause.g_hi) return clause.min_degree(g);
  }
  return std::nullopt;
}

TheoremReport verify_theorem(const CicyType& type, std::int64_t d_max,
                             std::int64_t g_max,
                             const AdmissibilityFn& predicate) {
  TheoremReport report{.cicy = type, .d_max = d_max, .g_max = g_max,
                       .mismatches = {}, .genera = {}};
  for (std::int64_t g = 0; g <= g_max; ++g) {
    const auto bound = reference_min_degree(type, g);
    GenusSummary summary{.g = g, .expected_min = std::nullopt,
                         .computed_min = std::nullopt};
    for (std::int64_t d = 1; d <= d_max; ++d) {
      const bool expected = bound.has_value() && d >= *bound;
      const bool computed = predicate(type, d, g);
      if (expected && !summary.expected_min) summary.expected_min = d;
      if (computed && !summary.computed_min) summary.computed_min = d;
      if (expected != computed) {
        report.mismatches.push_back({d, g, expected, computed});
      }
    }
    report.genera.push_back(summary);
  }
  return report;
}

std::optional<std::int64_t> max_admissible_genus(const CicyType& type,
                                                 std::int64_t g_max,
                                                 std::int64_t d_max) {
  for (std::int64_t g = g_max; g >= 0; --g) {
    for (std::int64_t d = 1; d <= d_max; ++d) {
      if (admissible(type, d, g)) return g;
    }
  }
  return std::nullopt;
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "human") return TableFormat::kHuman;
  if (text == "csv") return TableFormat::kCsv;
  if (text == "jsonlines") return TableFormat::kJsonLines;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::vector<CsvCell> to_csv_cells(const AdmissibleTable& table,
                                  CellFilter filter) {
  std::vector<CsvCell> cells;
  for (const auto& [key, cert] : table.cells) {
    if (!cert && filter == CellFilter::kAdmissibleOnly) continue;
    CsvCell cell{.type = table.cicy.label(), .d = key.first, .g = key.second,
                 .admissible = cert.has_value(), .row = std::nullopt,
                 .count = std::nullopt};
    if (cert) {
      cell.row = cert->row.table_index;
      cell.count = cert->expected_count->str();
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

void emit_table(const AdmissibleTable& table, TableFormat format,
                std::ostream& out, CellFilter filter) {
  switch (format) {
    case TableFormat::kCsv: {
      out << "type,d,g,admissible,row,count\n";
      for (const auto& cell : to_csv_cells(table, filter)) {
        out << csv_field(cell.type) << ',' << cell.d << ',' << cell.g << ','
            << (cell.admissible ? "true" : "false") << ',';
        if (cell.row) out << *cell.row;
        out << ',';
        if (cell.count) out << *cell.count;
        out << '\n';
      }
      return;
    }
    case TableFormat::kJsonLines: {
      for (const auto& [key, cert] : table.cells) {
        if (!cert && filter == CellFilter::kAdmissibleOnly) continue;
        out << certificate_json(table.cicy, key.first, key.second, cert).dump()
            << '\n';
      }
      return;
    }
    case TableFormat::kHuman: {
      out << "CICY type (" << table.cicy.label() << ") in P^"
          << table.cicy.ambient() << ", d <= " << table.d_max
          << ", g <= " << table.g_max << '\n';
      out << std::setw(4) << "g" << std::setw(8) << "min d" << std::setw(6)
          << "row" << "  admissible d\n";
      for (std::int64_t g = 0; g <= table.g_max; ++g) {
        std::vector<std::int64_t> ds;
        std::optional<int> first_row;
        for (std::int64_t d = 1; d <= table.d_max; ++d) {
          const auto& cert = table.cells.at({d, g});
          if (!cert) continue;
          ds.push_back(d);
          if (!first_row) first_row = cert->row.table_index;
        }
        out << std::setw(4) << g << std::setw(8)
            << (ds.empty() ? std::string("-") : std::to_string(ds.front()))
            << std::setw(6)
            << (first_row ? std::to_string(*first_row) : std::string("-"))
            << "  " << (ds.empty() ? std::string("none") : format_degrees(ds))
            << '\n';
      }
      return;
    }
  }
}

std::vector<CsvCell> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "type,d,g,admissible,row,count") {
    throw std::runtime_error("csv header mismatch");
  }
  std::vector<CsvCell> cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 6) {
      throw std::runtime_error("csv record needs 6 fields: " + line);
    }
    CsvCell cell;
    cell.type = fields[0];
    cell.d = parse_int(fields[1]);
    cell.g = parse_int(fields[2]);
    if (fields[3] != "true" && fields[3] != "false") {
      throw std::runtime_error("bad admissible flag: " + fields[3]);
    }
    cell.admissible = fields[3] == "true";
    if (!fields[4].empty()) cell.row = static_cast<int>(parse_int(fields[4]));
    if (!fields[5].empty()) cell.count = fields[5];
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace cicy
