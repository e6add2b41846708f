#include "doctest.h"

#include <sstream>
#include <string>

#include "cicy/enumerate.hpp"
#include "oracles.hpp"

using namespace cicy;

TEST_CASE("admissible examples") {
  const auto quintic = CicyType::parse("5");
  auto c = admissible(quintic, 3, 1);
  REQUIRE(c.has_value());
  CHECK(c->row.table_index == 1);  // 8g < d^2 on the quartic already
  CHECK(c->existence.branch == ExistenceBranch::kStrictInequality);
  CHECK_FALSE(admissible(CicyType::parse("2,2,2,2"), 3, 1).has_value());
  CHECK_FALSE(admissible(CicyType::parse("3,3"), 10, 7).has_value());
  CHECK(admissible(CicyType::parse("3,3"), 11, 7).has_value());
  CHECK(admissible(quintic, 9, 7).has_value());
  CHECK_FALSE(admissible(quintic, 5, 3).has_value());
  CHECK(admissible(CicyType::parse("2,2,2,2"), 4, 1).has_value());
  CHECK(admissible(CicyType::parse("4,2"), 12, 9).has_value());
}

TEST_CASE("min degree") {
  CHECK(min_degree(CicyType::parse("5"), 10, 40).min == 11);
  CHECK(min_degree(CicyType::parse("4,2"), 12, 40).min == 14);
  CHECK_FALSE(min_degree(CicyType::parse("5"), 23, 100).min.has_value());
  const auto m = min_degree(CicyType::parse("3,3"), 7, 15);
  CHECK(m.admissible == std::vector<std::int64_t>{11, 12, 13, 14, 15});
}

TEST_CASE("quintic oracle") {
  CHECK(quintic_oracle(9, 7));
  CHECK(quintic_oracle(4, 1));
  CHECK_FALSE(quintic_oracle(5, 3));
  const auto quintic = CicyType::parse("5");
  const auto path = certificate_path();
  int cells = 0;
  for (std::int64_t d = 1; d <= 40; ++d) {
    for (std::int64_t g = 0; g <= 30; ++g) {
      ++cells;
      CHECK(path(quintic, d, g) == quintic_oracle(d, g));
    }
  }
  CHECK(cells == 1240);
}

TEST_CASE("grid agrees with the transcribed theorem") {
  for (const auto& type : CicyType::all()) {
    for (std::int64_t d = 1; d <= 40; ++d) {
      for (std::int64_t g = 0; g <= 30; ++g) {
        const bool got = admissible(type, d, g).has_value();
        if (got != oracle::theorem_admits(type.label(), d, g)) {
          FAIL("type " << type.label() << " d=" << d << " g=" << g);
        }
        if (g <= 30) {
          const auto ref = reference_min_degree(type, g);
          if (ref) CHECK((d >= *ref) == oracle::theorem_admits(type.label(), d, g));
        }
      }
    }
  }
}

TEST_CASE("verify_theorem passes for every type") {
  for (const auto& type : CicyType::all()) {
    const auto report = verify_theorem(type);
    CHECK(report.passed());
    CHECK(report.mismatches.empty());
  }
  auto oracle_path = [](const CicyType&, std::int64_t d, std::int64_t g) {
    return quintic_oracle(d, g);
  };
  CHECK(verify_theorem(CicyType::parse("5"), 40, 30, oracle_path).passed());
  // A predicate that drops one cell must be caught.
  auto broken = [](const CicyType& t, std::int64_t d, std::int64_t g) {
    if (d == 11 && g == 10) return false;
    return certificate_path()(t, d, g);
  };
  const auto bad = verify_theorem(CicyType::parse("5"), 40, 30, broken);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].d == 11);
  CHECK(bad.mismatches[0].g == 10);
}

TEST_CASE("genus caps") {
  const std::int64_t caps[] = {22, 15, 7, 10, 3};
  const auto& types = CicyType::all();
  for (std::size_t i = 0; i < types.size(); ++i) {
    CHECK(max_admissible_genus(types[i], 100, 200) == caps[i]);
  }
}

TEST_CASE("genus zero is admissible for every degree") {
  for (const auto& type : CicyType::all()) {
    for (std::int64_t d = 1; d <= 100; ++d) CHECK(admissible(type, d, 0).has_value());
  }
}

TEST_CASE("csv output and round trip") {
  const auto table = build_table(CicyType::parse("5"), 6, 2);
  std::ostringstream out;
  emit_table(table, TableFormat::kCsv, out);
  const std::string text = out.str();
  int lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 13);
  CHECK(text.rfind("type,d,g,admissible,row,count\n", 0) == 0);

  for (const auto& type : CicyType::all()) {
    for (auto filter : {CellFilter::kAdmissibleOnly, CellFilter::kAllCells}) {
      const auto t = build_table(type, 25, 20);
      std::ostringstream csv;
      emit_table(t, TableFormat::kCsv, csv, filter);
      std::istringstream in(csv.str());
      CHECK(parse_csv(in) == to_csv_cells(t, filter));
    }
  }

  const auto empty = build_table(CicyType::parse("5"), 0, 2);
  std::ostringstream eo;
  emit_table(empty, TableFormat::kCsv, eo);
  CHECK(eo.str() == "type,d,g,admissible,row,count\n");
}

TEST_CASE("other formats") {
  const auto table = build_table(CicyType::parse("3,3"), 12, 8);
  std::ostringstream human;
  emit_table(table, TableFormat::kHuman, human);
  CHECK(human.str().find("CICY type (3,3)") != std::string::npos);
  CHECK(human.str().find("   7      11     6  11-12") != std::string::npos);

  std::ostringstream json;
  emit_table(table, TableFormat::kJsonLines, json);
  const std::string j = json.str();
  CHECK(j.find("\"expected_count\":\"") != std::string::npos);
  CHECK(j.find("\"type\":\"3,3\"") != std::string::npos);

  CHECK_THROWS(parse_table_format("xml"));
  CHECK(parse_table_format("csv") == TableFormat::kCsv);
}

TEST_CASE("tables are deterministic") {
  for (const auto& type : CicyType::all()) {
    std::ostringstream a, b;
    emit_table(build_table(type, 40, 30), TableFormat::kJsonLines, a, CellFilter::kAllCells);
    emit_table(build_table(type, 40, 30), TableFormat::kJsonLines, b, CellFilter::kAllCells);
    CHECK(a.str() == b.str());
  }
}
