#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cicy/catalog.hpp"
#include "cicy/enumerate.hpp"
#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/intersect.hpp"
#include "cicy/nodelab/kernel_section.hpp"
#include "cicy/nodelab/spark.hpp"
#include "cicy/rules.hpp"

namespace cicy::cli {

namespace {

using nlohmann::ordered_json;
namespace nl = cicy::nodelab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "human";
  std::string type;
  std::int64_t d = -1;
  std::int64_t g = -1;
  int row = 0;
  std::int64_t d_max = 40;
  std::int64_t g_max = 30;
  bool all_cells = false;
  std::string degrees = "4,4";
  std::uint64_t prime = 10007;
  std::uint64_t seed = 0;
  std::string spark;
  std::vector<std::string> form_files;
  std::string b_list;
  std::string a_list;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string(flag) + ": expected comma-separated integers, got '" +
                       text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

TableFormat format_of(const Options& o) { return parse_table_format(o.format); }

std::vector<CicyType> types_of(const std::string& text, bool allow_all) {
  if (text == "all") {
    if (!allow_all) throw UsageError("--type all is not accepted here");
    return CicyType::all();
  }
  try {
    return {CicyType::parse(text)};
  } catch (const std::invalid_argument& e) {
    throw UsageError("--type: " + std::string(e.what()));
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- catalog

int cmd_catalog(const Options& o, std::ostream& out) {
  const auto rows = load_catalog();
  bool consistent = true;
  switch (format_of(o)) {
    case TableFormat::kHuman:
      out << std::left << std::setw(5) << "row" << std::setw(12) << "b"
          << std::setw(14) << "a" << std::setw(4) << "mu" << std::setw(4) << "r"
          << std::setw(6) << "ell" << "nodes of Y on X\n";
      for (const auto& row : rows) {
        out << std::setw(5) << row.table_index << std::setw(12) << row.b_label()
            << std::setw(14) << row.a_label() << std::setw(4) << row.mu
            << std::setw(4) << row.r << std::setw(6) << row.ell << row.sing_desc
            << '\n';
        for (const auto& msg : validate_row(row)) {
          consistent = false;
          out << "  invalid: " << msg << '\n';
        }
      }
      out << std::right;
      out << (consistent ? "all rows consistent\n" : "inconsistent rows found\n");
      break;
    case TableFormat::kCsv:
      out << "row,b,a,mu,r,ell,valid\n";
      for (const auto& row : rows) {
        const bool ok = validate_row(row).empty();
        consistent = consistent && ok;
        out << row.table_index << ",\"" << row.b_label() << "\",\"" << row.a_label()
            << "\"," << row.mu << ',' << row.r << ',' << row.ell << ','
            << (ok ? "true" : "false") << '\n';
      }
      break;
    case TableFormat::kJsonLines:
      for (const auto& row : rows) {
        const auto problems = validate_row(row);
        consistent = consistent && problems.empty();
        ordered_json j;
        j["row"] = row.table_index;
        j["b"] = row.b;
        j["a"] = row.a;
        j["mu"] = row.mu;
        j["r"] = row.r;
        j["ell"] = row.ell;
        j["k3"] = std::string(to_string(row.family()));
        j["nodes"] = row.sing_desc;
        j["problems"] = problems;
        out << j.dump() << '\n';
      }
      break;
  }
  return consistent ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- certify

ordered_json certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["type"] = c.row.cicy_type().label();
  j["d"] = c.curve.d();
  j["g"] = c.curve.g();
  j["row"] = c.row.table_index;
  j["b"] = c.row.b;
  j["a"] = c.row.a;
  j["mu"] = c.row.mu;
  j["ell"] = c.row.ell;
  j["exists_on_k3"] = c.existence.exists;
  j["existence_branch"] = std::string(to_string(c.existence.branch));
  j["cond_degree_window"] = c.cond_degree_window;
  j["cond_node_budget"] = c.cond_node_budget;
  j["cond_node_surplus"] = c.cond_node_surplus;
  j["admissible"] = c.admissible;
  if (c.expected_count) {
    j["expected_count"] = c.expected_count->str();
  } else {
    j["expected_count"] = nullptr;
  }
  return j;
}

std::vector<std::string> failed_conditions(const Certificate& c) {
  std::vector<std::string> out;
  if (!c.existence.exists) out.push_back("existence");
  if (!c.cond_degree_window) out.push_back("degree-window");
  if (!c.cond_node_budget) out.push_back("node-budget");
  if (!c.cond_node_surplus) out.push_back("node-surplus");
  return out;
}

int cmd_certify(const Options& o, std::ostream& out) {
  if (o.d < 0 || o.g < 0) throw UsageError("certify needs --d and --g");
  const CicyType type = types_of(o.type, false).front();
  std::optional<CurveClass> curve;
  try {
    curve.emplace(o.d, o.g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<ConstructionRow> rows = rows_for_type(type);
  if (o.row != 0) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
      return r.table_index == o.row;
    });
    if (it == rows.end()) {
      throw UsageError("--row " + std::to_string(o.row) + " does not build type " +
                       type.label());
    }
    rows = {*it};
  }
  std::vector<Certificate> certs;
  for (const auto& row : rows) certs.push_back(certify(row, *curve));
  const auto winner = std::find_if(certs.begin(), certs.end(),
                                   [](const Certificate& c) { return c.admissible; });

  switch (format_of(o)) {
    case TableFormat::kHuman: {
      out << "type (" << type.label() << "), d=" << o.d << ", g=" << o.g << '\n';
      for (const auto& c : certs) {
        out << "row " << c.row.table_index << ": b=" << c.row.b_label()
            << " a=" << c.row.a_label() << " mu=" << c.row.mu
            << " ell=" << c.row.ell << '\n';
        out << "  existence      " << yes_no(c.existence.exists) << " ("
            << to_string(c.existence.branch) << ")\n";
        out << "  degree-window  " << yes_no(c.cond_degree_window) << '\n';
        out << "  node-budget    " << yes_no(c.cond_node_budget) << '\n';
        out << "  node-surplus   " << yes_no(c.cond_node_surplus) << '\n';
        if (c.admissible) {
          out << "  admissible; expected count C(" << c.row.ell - 2 << "," << o.g
              << ") = " << c.expected_count->str() << '\n';
        } else {
          out << "  not admissible; failed:";
          for (const auto& name : failed_conditions(c)) out << ' ' << name;
          out << '\n';
        }
      }
      if (winner != certs.end()) {
        out << "verdict: admissible via row " << winner->row.table_index << '\n';
        out << "note: " << Certificate::kGenericityNote << '\n';
      } else {
        out << "verdict: not admissible\n";
      }
      break;
    }
    case TableFormat::kCsv:
      out << "type,d,g,row,exists_on_k3,existence_branch,degree_window,node_budget,"
             "node_surplus,admissible,count\n";
      for (const auto& c : certs) {
        out << '"' << type.label() << "\"," << o.d << ',' << o.g << ','
            << c.row.table_index << ',' << (c.existence.exists ? "true" : "false")
            << ',' << to_string(c.existence.branch) << ','
            << (c.cond_degree_window ? "true" : "false") << ','
            << (c.cond_node_budget ? "true" : "false") << ','
            << (c.cond_node_surplus ? "true" : "false") << ','
            << (c.admissible ? "true" : "false") << ',';
        if (c.expected_count) out << c.expected_count->str();
        out << '\n';
      }
      break;
    case TableFormat::kJsonLines:
      for (const auto& c : certs) out << certificate_to_json(c).dump() << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- table

int cmd_table(const Options& o, std::ostream& out) {
  const auto types = types_of(o.type, true);
  const auto filter = o.all_cells ? CellFilter::kAllCells : CellFilter::kAdmissibleOnly;
  bool header_done = false;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto table = build_table(types[i], o.d_max, o.g_max);
    if (format_of(o) == TableFormat::kCsv && header_done) {
      std::ostringstream buf;
      emit_table(table, TableFormat::kCsv, buf, filter);
      const std::string text = buf.str();
      out << text.substr(text.find('\n') + 1);
      continue;
    }
    if (format_of(o) == TableFormat::kHuman && i > 0) out << '\n';
    emit_table(table, format_of(o), out, filter);
    header_done = true;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify-theorem

int cmd_verify(const Options& o, std::ostream& out) {
  const auto types = types_of(o.type.empty() ? "all" : o.type, true);
  bool all_passed = true;
  if (format_of(o) == TableFormat::kCsv) {
    out << "type,d_max,g_max,passed,mismatches,max_genus\n";
  }
  for (const auto& type : types) {
    const TheoremReport report = verify_theorem(type, o.d_max, o.g_max);
    all_passed = all_passed && report.passed();
    const auto max_g = max_admissible_genus(type, o.g_max, o.d_max);
    switch (format_of(o)) {
      case TableFormat::kHuman: {
        out << "type (" << type.label() << "): "
            << (report.passed() ? "PASS" : "FAIL") << ", d <= " << o.d_max
            << ", g <= " << o.g_max << ", max admissible genus "
            << (max_g ? std::to_string(*max_g) : std::string("none")) << '\n';
        for (const auto& clause : theorem_reference(type)) {
          out << "  " << clause.describe() << '\n';
        }
        for (const auto& m : report.mismatches) {
          out << "  mismatch at d=" << m.d << " g=" << m.g << ": expected "
              << (m.expected ? "admissible" : "not admissible") << ", computed "
              << (m.computed ? "admissible" : "not admissible") << '\n';
        }
        break;
      }
      case TableFormat::kCsv:
        out << '"' << type.label() << "\"," << o.d_max << ',' << o.g_max << ','
            << (report.passed() ? "true" : "false") << ','
            << report.mismatches.size() << ',';
        if (max_g) out << *max_g;
        out << '\n';
        break;
      case TableFormat::kJsonLines: {
        ordered_json j;
        j["type"] = type.label();
        j["d_max"] = o.d_max;
        j["g_max"] = o.g_max;
        j["passed"] = report.passed();
        j["mismatches"] = ordered_json::array();
        for (const auto& m : report.mismatches) {
          j["mismatches"].push_back(
              {{"d", m.d}, {"g", m.g}, {"expected", m.expected}, {"computed", m.computed}});
        }
        j["max_genus"] = max_g ? ordered_json(*max_g) : ordered_json(nullptr);
        ordered_json mins = ordered_json::array();
        for (const auto& s : report.genera) {
          mins.push_back(s.computed_min ? ordered_json(*s.computed_min)
                                        : ordered_json(nullptr));
        }
        j["min_degree_by_genus"] = mins;
        out << j.dump() << '\n';
        break;
      }
    }
  }
  if (format_of(o) == TableFormat::kHuman) {
    out << (all_passed ? "all types match the reference tables\n"
                       : "reference mismatch\n");
  }
  return all_passed ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- nodes

ordered_json element_json(const nl::Element& e) { return e.c; }

ordered_json spark_json(const nl::SparkReport& r) {
  ordered_json j;
  j["kind"] = "spark";
  j["d"] = r.degree ? ordered_json(*r.degree) : ordered_json(nullptr);
  j["ell"] = r.ell;
  j["m"] = r.m;
  j["passed"] = r.passed;
  j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
  j["subsets_checked"] = r.subsets_checked;
  return j;
}

nl::HomogeneousForm load_form(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open form file '" + path + "'");
  return nl::read_form(in);
}

std::string modulus_string(const nl::FieldContext& ctx) {
  std::ostringstream out;
  out << '[';
  const auto& c = ctx.modulus().c;
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << ']';
  return out.str();
}

int cmd_nodes(const Options& o, std::ostream& out, bool degrees_given,
              bool prime_given) {
  if (format_of(o) == TableFormat::kCsv) {
    throw UsageError("nodes supports --format human or jsonlines");
  }
  std::vector<int> spark_degrees;
  if (!o.spark.empty()) spark_degrees = parse_int_list(o.spark, "--spark");
  for (int d : spark_degrees) {
    if (d < 1) throw UsageError("--spark degrees must be >= 1");
  }

  std::optional<nl::HomogeneousForm> f, g;
  int resamples = 0;
  std::optional<nl::Intersection> inter;
  if (!o.form_files.empty()) {
    if (o.form_files.size() != 2) throw UsageError("--form must be given exactly twice");
    if (degrees_given) throw UsageError("--degrees conflicts with --form");
    f = load_form(o.form_files[0]);
    g = load_form(o.form_files[1]);
    if (!(f->field() == g->field())) {
      throw UsageError("form files use different primes");
    }
    if (prime_given && f->field().characteristic() != o.prime) {
      throw UsageError("--prime disagrees with the form files");
    }
    inter = nl::intersect_plane_curves(*f, *g, o.seed);
  } else {
    const auto degs = parse_int_list(o.degrees, "--degrees");
    if (degs.size() != 2 || degs[0] < 1 || degs[1] < 1) {
      throw UsageError("--degrees needs two positive degrees, e.g. 4,4");
    }
    const nl::PrimeField fp(o.prime);
    auto cfg = nl::sample_node_configuration(fp, degs[0], degs[1], o.seed);
    f = cfg.f;
    g = cfg.g;
    resamples = cfg.resamples;
    inter = std::move(cfg.intersection);
  }

  const auto& ctx = inter->field;
  std::vector<nl::SparkReport> reports;
  for (int d : spark_degrees) reports.push_back(nl::independence_check(ctx, inter->points, d));

  if (format_of(o) == TableFormat::kJsonLines) {
    ordered_json head;
    head["kind"] = "field";
    head["p"] = ctx.characteristic();
    head["ext_degree"] = ctx.degree();
    head["modulus"] = ctx.modulus().c;
    head["degrees"] = {f->degree(), g->degree()};
    head["seed"] = o.seed;
    head["resamples"] = resamples;
    head["chart_retries"] = inter->chart_retries;
    head["points"] = inter->points.size();
    head["total_multiplicity"] = inter->total_multiplicity();
    out << head.dump() << '\n';
    for (std::size_t i = 0; i < inter->points.size(); ++i) {
      const auto& pt = inter->points[i];
      ordered_json j;
      j["kind"] = "point";
      j["index"] = i;
      j["coords"] = {element_json(pt.coords[0]), element_json(pt.coords[1]),
                     element_json(pt.coords[2])};
      j["multiplicity"] = pt.multiplicity;
      out << j.dump() << '\n';
    }
    for (const auto& r : reports) out << spark_json(r).dump() << '\n';
    return kExitOk;
  }

  out << "curves of degrees " << f->degree() << " and " << g->degree() << " over F_"
      << ctx.characteristic() << " (seed " << o.seed << ", resamples " << resamples
      << ", chart retries " << inter->chart_retries << ")\n";
  out << "points: " << inter->points.size() << ", total multiplicity "
      << inter->total_multiplicity() << '\n';
  out << "field: F_" << ctx.characteristic() << "^" << ctx.degree() << ", modulus "
      << modulus_string(ctx) << '\n';
  out << "resultant factor degrees:";
  for (const auto& fac : inter->factors) {
    out << ' ' << fac.poly.degree();
    if (fac.multiplicity > 1) out << '^' << fac.multiplicity;
  }
  out << '\n';
  for (const auto& r : reports) {
    out << "independence d=" << *r.degree << ": m=" << r.m << " of " << r.ell
        << " points, " << (r.passed ? "PASS" : "FAIL");
    if (r.passed) {
      out << " (" << r.subsets_checked << " subsets)";
    } else {
      out << ", dependent subset {";
      for (std::size_t i = 0; i < r.witness->size(); ++i) {
        out << (i ? "," : "") << (*r.witness)[i];
      }
      out << '}';
    }
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- kernel

ordered_json form_json(const nl::HomogeneousForm& form) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, v] : form.terms()) terms.push_back({m[0], m[1], m[2], v});
  return terms;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  if (format_of(o) == TableFormat::kCsv) {
    throw UsageError("kernel supports --format human or jsonlines");
  }
  std::vector<int> b, a;
  std::string label;
  if (o.row != 0) {
    if (!o.b_list.empty() || !o.a_list.empty()) {
      throw UsageError("--row conflicts with --b/--a");
    }
    const auto rows = load_catalog();
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
      return r.table_index == o.row;
    });
    if (it == rows.end()) throw UsageError("--row must be between 1 and 9");
    b = it->b;
    a = it->a;
    label = "row " + std::to_string(o.row);
  } else {
    if (o.b_list.empty() || o.a_list.empty()) {
      throw UsageError("kernel needs --row or both --b and --a");
    }
    b = parse_int_list(o.b_list, "--b");
    a = parse_int_list(o.a_list, "--a");
    if (a.size() != b.size() + 1) {
      throw UsageError("--a needs exactly one more entry than --b");
    }
    label = "custom";
  }
  const nl::PrimeField fp(o.prime);
  const auto alphas = nl::random_alphas(fp, b, a, o.seed);
  const auto n = nl::kernel_section(b, a, alphas);

  if (format_of(o) == TableFormat::kJsonLines) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        ordered_json e;
        e["kind"] = "alpha";
        e["i"] = i + 1;
        e["j"] = j + 1;
        e["degree"] = b[i] - a[j];
        e["terms"] = form_json(alphas[i][j]);
        out << e.dump() << '\n';
      }
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
      ordered_json e;
      e["kind"] = "section";
      e["j"] = j + 1;
      e["degree"] = a[j];
      e["terms"] = form_json(n[j]);
      out << e.dump() << '\n';
    }
    out << ordered_json{{"kind", "check"}, {"alphas_times_n_zero", true}}.dump() << '\n';
    return kExitOk;
  }

  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  out << label << ": b=" << list(b) << " a=" << list(a) << " over F_"
      << fp.characteristic() << ", seed " << o.seed << '\n';
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out << "alpha_" << i + 1 << j + 1 << " (deg " << b[i] - a[j]
          << "): " << nl::format_form(alphas[i][j]) << '\n';
    }
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    out << "N_" << j + 1 << " (deg " << a[j] << "): " << nl::format_form(n[j]) << '\n';
  }
  out << "check: alphas * N = 0\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certification tables for curves on nodal complete-intersection "
               "Calabi-Yau threefolds, with a finite-field node lab"};
  app.name("cicy");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "human | csv | jsonlines")
      ->check(CLI::IsMember({"human", "csv", "jsonlines"}));

  auto* catalog = app.add_subcommand("catalog", "Print the construction table");

  auto* certify = app.add_subcommand("certify", "Certify one (d, g) for a CICY type");
  certify->add_option("--type", o.type, "5 | 4,2 | 3,3 | 3,2,2 | 2,2,2,2")->required();
  certify->add_option("--d", o.d, "curve degree")->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--g", o.g, "curve genus")->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--row", o.row, "pin one table row")->check(CLI::Range(1, 9));

  auto* table = app.add_subcommand("table", "Admissibility table over a (d, g) grid");
  table->add_option("--type", o.type, "type or all")->required();
  table->add_option("--dmax", o.d_max, "largest degree")->check(CLI::NonNegativeNumber);
  table->add_option("--gmax", o.g_max, "largest genus")->check(CLI::NonNegativeNumber);
  table->add_flag("--all-cells", o.all_cells, "also list non-admissible cells");

  auto* verify = app.add_subcommand("verify-theorem", "Compare with the reference tables");
  verify->add_option("--type", o.type, "type or all");
  verify->add_option("--dmax", o.d_max, "largest degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--gmax", o.g_max, "largest genus")->check(CLI::NonNegativeNumber);

  auto* nodes = app.add_subcommand("nodes", "Intersect two plane curves and test independence");
  auto* degrees_opt = nodes->add_option("--degrees", o.degrees, "e1,e2 (default 4,4)");
  auto* prime_opt = nodes->add_option("--prime", o.prime, "odd prime below 2^31");
  nodes->add_option("--seed", o.seed, "random seed (default 0)");
  nodes->add_option("--spark", o.spark, "comma-separated degrees d to test");
  nodes->add_option("--form", o.form_files, "form file (give twice)");

  auto* kernel = app.add_subcommand("kernel", "Null-space section of random coefficient forms");
  kernel->add_option("--row", o.row, "table row 1..9");
  kernel->add_option("--b", o.b_list, "threefold degrees, e.g. 4,2");
  kernel->add_option("--a", o.a_list, "generator degrees, e.g. 3,2,1");
  kernel->add_option("--prime", o.prime, "odd prime below 2^31");
  kernel->add_option("--seed", o.seed, "random seed (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (nodes->parsed()) {
      return cmd_nodes(o, out, degrees_opt->count() > 0, prime_opt->count() > 0);
    }
    if (kernel->parsed()) return cmd_kernel(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nl::NodeLabError& e) {
    if (e.kind() == nl::ErrorKind::kNotPrime || e.kind() == nl::ErrorKind::kBadInput) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace cicy::cli
