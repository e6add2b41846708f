#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cicy/catalog.hpp"
#include "cicy/rules.hpp"

namespace cicy {

/// First admissible certificate over the type's rows (table order), if any.
std::optional<Certificate> admissible(const CicyType& type, std::int64_t d,
                                      std::int64_t g);

struct MinDegree {
  std::optional<std::int64_t> min;        // smallest admissible d <= d_max
  std::vector<std::int64_t> admissible;   // every admissible d in [1, d_max]
};

MinDegree min_degree(const CicyType& type, std::int64_t g, std::int64_t d_max);

/// Literal transcription of the quintic admissibility region, written
/// independently of the certificate path and used only as a cross-check:
///   [8g < d^2 <= 16  or  g <= min(12, d-3)]
///   or [12g < d^2 <= 144 and (d,g) != (7,4)]
///   or (d,g) in {(3,1), (9,7)}  or  g <= min(22, 2d-13).
bool quintic_oracle(std::int64_t d, std::int64_t g);

/// A cell-level admissibility predicate; lets the verifier run against the
/// certificate path or an oracle.
using AdmissibilityFn =
    std::function<bool(const CicyType&, std::int64_t d, std::int64_t g)>;

AdmissibilityFn certificate_path();

/// Admissibility grid over 1 <= d <= d_max, 0 <= g <= g_max.
struct AdmissibleTable {
  CicyType cicy;
  std::int64_t d_max = 0;
  std::int64_t g_max = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, std::optional<Certificate>>
      cells;  // key (d, g)
};

AdmissibleTable build_table(const CicyType& type, std::int64_t d_max,
                            std::int64_t g_max);

/// One clause of the published minimal-degree list: for lo <= g <= hi the
/// curve exists exactly when d >= bound(g).
struct TheoremClause {
  enum class Bound {
    kConstant,   // d >= k
    kShift,      // d >= g + k
    kHalfShift,  // d >= ceil((g + k) / 2)
  };
  std::int64_t g_lo;
  std::int64_t g_hi;
  Bound kind;
  std::int64_t k;

  std::int64_t min_degree(std::int64_t g) const;
  std::string describe() const;
};

/// The published clause list for a type.
const std::vector<TheoremClause>& theorem_reference(const CicyType& type);

/// Expected minimal degree for genus g under the reference; empty when g is
/// outside every clause.
std::optional<std::int64_t> reference_min_degree(const CicyType& type,
                                                 std::int64_t g);

struct CellMismatch {
  std::int64_t d;
  std::int64_t g;
  bool expected;
  bool computed;
};

struct GenusSummary {
  std::int64_t g;
  std::optional<std::int64_t> expected_min;
  std::optional<std::int64_t> computed_min;
};

struct TheoremReport {
  CicyType cicy;
  std::int64_t d_max;
  std::int64_t g_max;
  std::vector<CellMismatch> mismatches;
  std::vector<GenusSummary> genera;
  bool passed() const { return mismatches.empty(); }
};

/// Compares the admissible set against the reference over the whole grid.
/// Cells are compared one by one, so a pass implies equal minimal degrees
/// per stated genus and no admissible cell at unstated genera.
TheoremReport verify_theorem(const CicyType& type, std::int64_t d_max = 40,
                             std::int64_t g_max = 30,
                             const AdmissibilityFn& predicate = certificate_path());

/// Largest admissible genus for g <= g_max, scanning d up to d_max.
std::optional<std::int64_t> max_admissible_genus(const CicyType& type,
                                                 std::int64_t g_max,
                                                 std::int64_t d_max);

enum class TableFormat { kHuman, kCsv, kJsonLines };

/// Parses "human", "csv" or "jsonlines"; throws std::invalid_argument.
TableFormat parse_table_format(std::string_view text);

enum class CellFilter { kAdmissibleOnly, kAllCells };

/// Deterministic serialization. csv header: type,d,g,admissible,row,count.
/// The machine formats list admissible cells only unless kAllCells is asked.
void emit_table(const AdmissibleTable& table, TableFormat format,
                std::ostream& out,
                CellFilter filter = CellFilter::kAdmissibleOnly);

/// One parsed csv record.
struct CsvCell {
  std::string type;
  std::int64_t d = 0;
  std::int64_t g = 0;
  bool admissible = false;
  std::optional<int> row;
  std::optional<std::string> count;

  friend bool operator==(const CsvCell&, const CsvCell&) = default;
};

/// Reads back what emit_table(kCsv) writes; throws std::runtime_error on a
/// malformed header or record.
std::vector<CsvCell> parse_csv(std::istream& in);

/// Flattens a table into the records emit_table would write.
std::vector<CsvCell> to_csv_cells(const AdmissibleTable& table,
                                  CellFilter filter);

}  // namespace cicy
