#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cicy/nodelab/form.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cicy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("certify the (9,7) quintic case") {
  const auto r = run({"certify", "--type", "5", "--d", "9", "--g", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EQUALITY_BRANCH") != std::string::npos);
  CHECK(r.out.find("C(34,7) = 5379616") != std::string::npos);
  CHECK(r.out.find("verdict: admissible via row 2") != std::string::npos);
  CHECK(r.out.find("failed: degree-window") != std::string::npos);

  const auto pinned = run({"certify", "--type", "5", "--d", "9", "--g", "7", "--row", "1"});
  CHECK(pinned.code == 0);
  CHECK(pinned.out.find("verdict: not admissible") != std::string::npos);

  const auto js = run({"certify", "--type", "5", "--d", "9", "--g", "7", "--format", "jsonlines"});
  const auto lines = json_lines(js.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1]["admissible"] == true);
  CHECK(lines[1]["expected_count"] == "5379616");
  CHECK(lines[0]["expected_count"].is_null());

  const auto csv = run({"certify", "--type", "5", "--d", "9", "--g", "7", "--format", "csv"});
  CHECK(count_lines(csv.out) == 3);
}

TEST_CASE("verify-theorem") {
  const auto r = run({"verify-theorem", "--type", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("type (5): PASS") != std::string::npos);
  CHECK(r.out.find("max admissible genus 22") != std::string::npos);
  CHECK(r.out.find("type (2,2,2,2): PASS") != std::string::npos);
  const auto js = run({"verify-theorem", "--type", "all", "--format", "jsonlines"});
  const auto lines = json_lines(js.out);
  REQUIRE(lines.size() == 5);
  const int caps[] = {22, 15, 7, 10, 3};
  for (int i = 0; i < 5; ++i) {
    CHECK(lines[i]["passed"] == true);
    CHECK(lines[i]["max_genus"] == caps[i]);
  }
  CHECK(run({"verify-theorem", "--type", "3,3"}).code == 0);
}

TEST_CASE("table") {
  const auto r = run({"table", "--type", "5", "--dmax", "6", "--gmax", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 13);
  const auto all = run({"table", "--type", "5", "--dmax", "6", "--gmax", "2", "--format",
                        "csv", "--all-cells"});
  CHECK(count_lines(all.out) == 19);
  const auto empty = run({"table", "--type", "5", "--dmax", "0", "--format", "csv"});
  CHECK(empty.out == "type,d,g,admissible,row,count\n");
  const auto every = run({"table", "--type", "all", "--dmax", "5", "--gmax", "1", "--format", "csv"});
  CHECK(every.out.find("type,d,g") == 0);
  CHECK(every.out.find("type,d,g", 1) == std::string::npos);
  const auto human = run({"table", "--type", "3,3", "--dmax", "12", "--gmax", "8"});
  CHECK(human.out.find("CICY type (3,3)") != std::string::npos);
}

TEST_CASE("catalog") {
  const auto r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all rows consistent") != std::string::npos);
  const auto js = run({"catalog", "--format", "jsonlines"});
  const auto lines = json_lines(js.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[1]["ell"] == 36);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"certify", "--type", "6", "--d", "1", "--g", "0"}).code == 2);
  CHECK(run({"certify", "--type", "5", "--d", "0", "--g", "0"}).code == 2);
  CHECK(run({"certify", "--type", "5", "--d", "-1", "--g", "0"}).code == 2);
  CHECK(run({"certify", "--type", "5", "--d", "3"}).code == 2);
  CHECK(run({"certify", "--type", "all", "--d", "3", "--g", "1"}).code == 2);
  CHECK(run({"certify", "--type", "5", "--d", "3", "--g", "1", "--row", "3"}).code == 2);
  CHECK(run({"table", "--type", "5", "--format", "xml"}).code == 2);
  CHECK(run({"verify-theorem", "--bogus"}).code == 2);
  CHECK(run({"nodes", "--prime", "4"}).code == 2);
  CHECK(run({"nodes", "--spark", "1,x"}).code == 2);
  CHECK(run({"nodes", "--degrees", "4"}).code == 2);
  CHECK(run({"kernel", "--row", "10"}).code == 2);
  CHECK(run({"kernel", "--b", "4,2", "--a", "3,2"}).code == 2);
  const auto r = run({"certify", "--type", "6", "--d", "1", "--g", "0"});
  CHECK(count_lines(r.err) == 1);
  CHECK(r.out.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("nodes: two quartics") {
  const std::vector<std::string> args = {"nodes", "--degrees", "4,4", "--prime", "10007",
                                         "--seed", "42", "--spark", "1,2,3,4", "--format",
                                         "jsonlines"};
  const auto r = run(args);
  REQUIRE(r.code == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1 + 16 + 4);
  CHECK(lines[0]["kind"] == "field");
  CHECK(lines[0]["points"] == 16);
  const int L = lines[0]["ext_degree"];
  for (int i = 1; i <= 16; ++i) {
    CHECK(lines[i]["kind"] == "point");
    CHECK(lines[i]["multiplicity"] == 1);
    CHECK(lines[i]["coords"].size() == 3);
    CHECK(lines[i]["coords"][0].size() == static_cast<std::size_t>(L));
  }
  CHECK(lines[17]["passed"] == true);
  CHECK(lines[18]["passed"] == true);
  CHECK(lines[19]["passed"] == true);
  CHECK(lines[20]["passed"] == false);
  CHECK(lines[20]["witness"].size() == 15);
  // Byte-identical on rerun, LF only.
  CHECK(run(args).out == r.out);
  CHECK(r.out.find('\r') == std::string::npos);

  const auto human = run({"nodes", "--degrees", "4,4", "--prime", "10007", "--seed", "42",
                          "--spark", "1,2,3,4"});
  CHECK(human.out.find("points: 16") != std::string::npos);
  CHECK(human.out.find("independence d=3: m=10 of 16 points, PASS (8008 subsets)") !=
        std::string::npos);
  CHECK(human.out.find("independence d=4: m=15 of 16 points, FAIL") != std::string::npos);
}

TEST_CASE("nodes from form files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cicy_cli_forms";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "f.txt");
    f << "p=10007 deg=2\n2 0 0 1\n0 0 2 10006\n";  // x^2 - z^2
    std::ofstream g(dir / "g.txt");
    g << "# y^2 - z^2\np=10007 deg=2\n0 2 0 1\n0 0 2 -1\n";
  }
  const auto r = run({"nodes", "--form", (dir / "f.txt").string(), "--form",
                      (dir / "g.txt").string(), "--spark", "1", "--format", "jsonlines"});
  REQUIRE(r.code == 0);
  const auto lines = json_lines(r.out);
  CHECK(lines[0]["points"] == 4);
  CHECK(lines[0]["ext_degree"] == 1);
  CHECK(lines.back()["kind"] == "spark");
  // Four points with no three collinear.
  CHECK(lines.back()["passed"] == true);

  {
    std::ofstream h(dir / "h.txt");
    h << "p=10007 deg=1\n0 0 1 1\n";  // z, tangent-free but a double point with x^2 - yz
    std::ofstream c(dir / "c.txt");
    c << "p=10007 deg=2\n2 0 0 1\n0 1 1 -1\n";
  }
  const auto tangent = run({"nodes", "--form", (dir / "c.txt").string(), "--form",
                            (dir / "h.txt").string(), "--spark", "1"});
  CHECK(tangent.code == 3);
  CHECK(tangent.err.find("REPEATED_POINT") != std::string::npos);

  CHECK(run({"nodes", "--form", (dir / "f.txt").string()}).code == 2);
  CHECK(run({"nodes", "--form", (dir / "missing.txt").string(), "--form",
             (dir / "f.txt").string()})
            .code == 2);
  fs::remove_all(dir);
}

TEST_CASE("kernel") {
  const auto r = run({"kernel", "--row", "4", "--prime", "10007", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N_1 (deg 2)") != std::string::npos);
  CHECK(r.out.find("check: alphas * N = 0") != std::string::npos);
  const auto js = run({"kernel", "--b", "4,2", "--a", "3,2,1", "--format", "jsonlines"});
  CHECK(js.code == 0);
  const auto lines = json_lines(js.out);
  REQUIRE(lines.size() == 6 + 3 + 1);
  CHECK(lines[9]["alphas_times_n_zero"] == true);
  CHECK(lines[6]["degree"] == 3);
  CHECK(run({"kernel", "--row", "4", "--seed", "3"}).out ==
        run({"kernel", "--row", "4", "--seed", "3"}).out);
}
