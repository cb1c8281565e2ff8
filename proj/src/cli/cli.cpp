#include "hypersolid/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "hypersolid/kernel.hpp"
#include "hypersolid/search.hpp"
#include "hypersolid/sums.hpp"
#include "hypersolid/triangle.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace hypersolid::cli {

namespace {

// Argument problems found after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string str(const Nat& x) { return x.str(); }
std::string str(Index x) { return std::to_string(x); }

Nat parse_nat(const std::string& text, std::string_view what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(what) + " must be a nonnegative decimal integer, got '" + text + "'");
  }
  return Nat(text);
}

Json triple_json(const IndexTriple& t, const Nat& value) {
  return Json{{"v", t.v}, {"d", t.d}, {"n", t.n}, {"value", json_value(value)}};
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  Index v = 0, d = 0, n = 0;
  std::string method = "closed";
};

int cmd_eval(const EvalArgs& a, OutputFormat format, std::ostream& out) {
  const IndexTriple t{a.v, a.d, a.n};
  std::vector<std::pair<std::string, Nat>> values;
  if (a.method == "closed" || a.method == "both") values.emplace_back("closed", hypersolid(t, EvalMethod::kClosed));
  if (a.method == "summation" || a.method == "both") {
    values.emplace_back("summation", hypersolid(t, EvalMethod::kSummation));
  }
  const bool agree = values.size() < 2 || values[0].second == values[1].second;

  switch (format) {
    case OutputFormat::kText:
      if (values.size() == 1) {
        out << str(values[0].second) << '\n';
      } else {
        for (const auto& [name, value] : values) out << name << ": " << str(value) << '\n';
        out << (agree ? "methods agree" : "MISMATCH") << '\n';
      }
      break;
    case OutputFormat::kCsv: {
      Grid rows{{"v", "d", "n", "method", "value"}};
      for (const auto& [name, value] : values) rows.push_back({str(a.v), str(a.d), str(a.n), name, str(value)});
      write_csv(out, rows);
      break;
    }
    case OutputFormat::kJson: {
      Json result = Json::object();
      for (const auto& [name, value] : values) result[name] = json_value(value);
      write_json(out, Json{{"v", a.v}, {"d", a.d}, {"n", a.n}, {"method", a.method}}, result, agree);
      break;
    }
  }
  return agree ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  Index v = 2, d_max = 10, n_max = 10;
  bool gnomons = false;
};

int cmd_table(const TableArgs& a, OutputFormat format, std::ostream& out) {
  if (a.v < 2) throw UsageError("table: --v must be >= 2");
  if (a.d_max < 1 || a.n_max < 1) throw UsageError("table: --dmax and --nmax must be >= 1");

  // values[d-1][n-1] = S(v, d, n); the (n) column is S(v-1, d, n_max) and
  // the (d) row is S(v, 1, n-1).
  std::vector<std::vector<Nat>> values;
  std::vector<Nat> n_gnomons, d_gnomons;
  for (Index d = 1; d <= a.d_max; ++d) {
    auto row = compiled_row(a.v, d, a.n_max);
    values.emplace_back(row.begin() + 1, row.end());
    n_gnomons.push_back(n_gnomon({a.v, d, a.n_max}));
  }
  for (Index n = 1; n <= a.n_max; ++n) d_gnomons.push_back(d_gnomon({a.v, 1, n}));

  if (format == OutputFormat::kJson) {
    Json rows = Json::array();
    for (Index d = 1; d <= a.d_max; ++d) {
      Json cells = Json::array();
      for (const auto& x : values[d - 1]) cells.push_back(json_value(x));
      Json row{{"d", d}, {"values", cells}};
      if (a.gnomons) row["n_gnomon"] = json_value(n_gnomons[d - 1]);
      rows.push_back(row);
    }
    Json result{{"rows", rows}};
    if (a.gnomons) {
      Json dg = Json::array();
      for (const auto& x : d_gnomons) dg.push_back(json_value(x));
      result["d_gnomons"] = dg;
    }
    write_json(out, Json{{"v", a.v}, {"dmax", a.d_max}, {"nmax", a.n_max}, {"gnomons", a.gnomons}}, result, true);
    return kExitOk;
  }

  Grid grid;
  std::vector<std::string> header{"d/n"};
  for (Index n = 1; n <= a.n_max; ++n) header.push_back(str(n));
  if (a.gnomons) header.push_back("(n)");
  grid.push_back(header);
  for (Index d = 1; d <= a.d_max; ++d) {
    std::vector<std::string> row{str(d)};
    for (const auto& x : values[d - 1]) row.push_back(str(x));
    if (a.gnomons) row.push_back(str(n_gnomons[d - 1]));
    grid.push_back(row);
  }
  if (a.gnomons) {
    std::vector<std::string> row{"(d)"};
    for (const auto& x : d_gnomons) row.push_back(str(x));
    row.emplace_back();
    grid.push_back(row);
  }
  if (format == OutputFormat::kCsv) {
    write_csv(out, grid);
  } else {
    write_aligned(out, grid);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// triangle

struct TriangleArgs {
  Index d = 0, rows = 6;
  std::optional<Index> diagonals;
};

int cmd_triangle(const TriangleArgs& a, OutputFormat format, std::ostream& out) {
  if (a.diagonals && *a.diagonals < 2) throw UsageError("triangle: --diagonals must be >= 2");
  const Triangle tri = build_triangle(a.d, a.rows);
  std::vector<Nat> diagonal_terms;
  if (a.diagonals) {
    for (Index k = 2; k <= a.rows; ++k) diagonal_terms.push_back(diagonal_sum({a.d, *a.diagonals, k}));
  }

  switch (format) {
    case OutputFormat::kText: {
      std::size_t width = 1;
      for (Index c = 0; c <= a.rows; ++c) {
        for (const auto& e : tri.row(c)) width = std::max(width, str(e).size());
      }
      for (Index c = 0; c <= a.rows; ++c) {
        std::string line;
        for (const auto& e : tri.row(c)) {
          const auto cell = str(e);
          if (!line.empty()) line += ' ';
          line += std::string(width - cell.size(), ' ') + cell;
        }
        out << line << " | " << str(row_sum(a.d, c)) << '\n';
      }
      if (a.diagonals) {
        out << "diagonals (m=" << *a.diagonals << "):";
        for (const auto& x : diagonal_terms) out << ' ' << str(x);
        out << '\n';
      }
      break;
    }
    case OutputFormat::kCsv: {
      // entry rows: i = c, j = v; row_sum rows: i = c; diagonal rows: i = k, j = m.
      Grid rows{{"kind", "i", "j", "value"}};
      for (Index c = 0; c <= a.rows; ++c) {
        const auto row = tri.row(c);
        for (Index v = 0; v <= c; ++v) rows.push_back({"entry", str(c), str(v), str(row[v])});
      }
      for (Index c = 0; c <= a.rows; ++c) rows.push_back({"row_sum", str(c), "", str(row_sum(a.d, c))});
      for (std::size_t i = 0; i < diagonal_terms.size(); ++i) {
        rows.push_back({"diagonal", std::to_string(i + 2), str(*a.diagonals), str(diagonal_terms[i])});
      }
      write_csv(out, rows);
      break;
    }
    case OutputFormat::kJson: {
      Json rows = Json::array(), sums = Json::array();
      for (Index c = 0; c <= a.rows; ++c) {
        Json row = Json::array();
        for (const auto& e : tri.row(c)) row.push_back(json_value(e));
        rows.push_back(row);
        sums.push_back(json_value(row_sum(a.d, c)));
      }
      Json result{{"rows", rows}, {"row_sums", sums}};
      Json query{{"d", a.d}, {"rows", a.rows}};
      if (a.diagonals) {
        Json diag = Json::array();
        for (const auto& x : diagonal_terms) diag.push_back(json_value(x));
        result["diagonals"] = diag;
        query["diagonals"] = *a.diagonals;
      }
      write_json(out, query, result, true);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sums

struct SumsArgs {
  Index s = 0;
  std::string fix = "none";
  bool list = false;
};

SumQuery parse_fix(Index s, const std::string& fix) {
  if (fix == "none") return {s, FixedCoordinate::kNone, 0};
  if (fix.size() < 3 || fix[1] != '=') throw UsageError("sums: --fix expects v=N, d=N, n=N or none");
  FixedCoordinate which;
  switch (fix[0]) {
    case 'v':
      which = FixedCoordinate::kV;
      break;
    case 'd':
      which = FixedCoordinate::kD;
      break;
    case 'n':
      which = FixedCoordinate::kN;
      break;
    default:
      throw UsageError("sums: --fix coordinate must be v, d or n");
  }
  const Nat value = parse_nat(fix.substr(2), "sums: --fix value");
  if (value > s) throw UsageError("sums: fixed " + fix + " exceeds s=" + std::to_string(s));
  return {s, which, static_cast<Index>(value)};
}

int cmd_sums(const SumsArgs& a, OutputFormat format, std::ostream& out) {
  const SumQuery query = parse_fix(a.s, a.fix);
  const SumReport r = sum_report(query, a.list);
  const std::string formula_sum = r.formula_sum ? str(*r.formula_sum) : "no-closed-form";
  const std::string formula_multitude =
      r.formula_multitude ? std::to_string(*r.formula_multitude) : "no-closed-form";

  switch (format) {
    case OutputFormat::kText: {
      out << "s=" << a.s << " fixed " << a.fix << '\n';
      Grid grid{{"formula sum:", formula_sum},
                {"enumerated sum:", str(r.enumerated_sum)},
                {"formula multitude:", formula_multitude},
                {"enumerated multitude:", std::to_string(r.enumerated_multitude)},
                {"consistent:", r.has_formula() ? (r.consistent ? "yes" : "NO") : "n/a"}};
      write_aligned(out, grid);
      if (r.triples) {
        for (const auto& tv : *r.triples) {
          out << "S" << to_string(tv.triple) << " = " << str(tv.value) << '\n';
        }
      }
      break;
    }
    case OutputFormat::kCsv: {
      Grid rows{{"s", "fix", "formula_sum", "enumerated_sum", "formula_multitude", "enumerated_multitude",
                 "consistent"},
                {str(a.s), a.fix, formula_sum, str(r.enumerated_sum), formula_multitude,
                 std::to_string(r.enumerated_multitude), r.consistent ? "true" : "false"}};
      write_csv(out, rows);
      if (r.triples) {
        Grid list{{"v", "d", "n", "value"}};
        for (const auto& tv : *r.triples) {
          list.push_back({str(tv.triple.v), str(tv.triple.d), str(tv.triple.n), str(tv.value)});
        }
        out << '\n';
        write_csv(out, list);
      }
      break;
    }
    case OutputFormat::kJson: {
      Json result{{"formula_sum", r.formula_sum ? Json(json_value(*r.formula_sum)) : Json(nullptr)},
                  {"enumerated_sum", json_value(r.enumerated_sum)},
                  {"formula_multitude", r.formula_multitude ? Json(*r.formula_multitude) : Json(nullptr)},
                  {"enumerated_multitude", r.enumerated_multitude}};
      if (r.triples) {
        Json list = Json::array();
        for (const auto& tv : *r.triples) list.push_back(triple_json(tv.triple, tv.value));
        result["triples"] = list;
      }
      write_json(out, Json{{"s", a.s}, {"fix", a.fix}}, result, r.consistent);
      break;
    }
  }
  return exit_code(r);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  VerifyBounds bounds;
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& a, OutputFormat format, std::ostream& out) {
  if (a.jobs == 0) throw UsageError("verify: --jobs must be >= 1");
  const auto outcomes = run_verify(a.suite, a.bounds, a.jobs);
  const int status = exit_code(outcomes);
  const bool clean = status == kExitOk;

  switch (format) {
    case OutputFormat::kText:
      for (const auto& o : outcomes) {
        out << o.suite << ": " << o.cases_run << " cases, " << o.failures.size() << " failures\n";
        for (const auto& f : o.failures) {
          out << "  FAIL " << f.key << ": expected " << f.expected << ", actual " << f.actual << '\n';
        }
      }
      break;
    case OutputFormat::kCsv: {
      Grid rows{{"suite", "cases_run", "failures"}};
      for (const auto& o : outcomes) rows.push_back({o.suite, std::to_string(o.cases_run), std::to_string(o.failures.size())});
      write_csv(out, rows);
      bool any = false;
      Grid fails{{"suite", "key", "expected", "actual"}};
      for (const auto& o : outcomes) {
        for (const auto& f : o.failures) {
          fails.push_back({o.suite, f.key, f.expected, f.actual});
          any = true;
        }
      }
      if (any) {
        out << '\n';
        write_csv(out, fails);
      }
      break;
    }
    case OutputFormat::kJson: {
      Json suites = Json::array();
      for (const auto& o : outcomes) {
        Json fails = Json::array();
        for (const auto& f : o.failures) {
          fails.push_back(Json{{"key", f.key}, {"expected", f.expected}, {"actual", f.actual}});
        }
        suites.push_back(Json{{"suite", o.suite}, {"cases_run", o.cases_run}, {"failures", fails}});
      }
      Json query{{"suite", a.suite}};
      const auto put = [&](const char* name, const std::optional<Index>& bound) {
        if (bound) query[name] = *bound;
      };
      put("vmax", a.bounds.vmax);
      put("dmax", a.bounds.dmax);
      put("nmax", a.bounds.nmax);
      put("cmax", a.bounds.cmax);
      put("kmax", a.bounds.kmax);
      put("smax", a.bounds.smax);
      put("mmax", a.bounds.mmax);
      write_json(out, query, Json{{"suites", suites}}, clean);
      break;
    }
  }
  return status;
}

// ---------------------------------------------------------------------------
// represent

struct RepresentArgs {
  std::string value;
  Index v_min = 2, v_max = 8, d_min = 0, n_min = 3;
  std::optional<Index> d_max, n_max;
};

int cmd_represent(const RepresentArgs& a, OutputFormat format, std::ostream& out) {
  RepresentationQuery q;
  q.target = parse_nat(a.value, "represent: --value");
  if (q.target < 1) throw UsageError("represent: --value must be >= 1");
  if (a.v_min > a.v_max) throw UsageError("represent: --vmin exceeds --vmax");
  q.v_range = {a.v_min, a.v_max};
  if (a.d_max) {
    if (a.d_min > *a.d_max) throw UsageError("represent: --dmin exceeds --dmax");
    q.d_range = IndexRange{a.d_min, *a.d_max};
  } else if (a.d_min > 0) {
    const Index cap = q.target > std::numeric_limits<Index>::max() ? std::numeric_limits<Index>::max()
                                                                    : static_cast<Index>(q.target);
    q.d_range = IndexRange{a.d_min, std::max(a.d_min, cap)};
  }
  q.n_min = a.n_min;
  q.n_max = a.n_max;
  const auto hits = representations(q);

  switch (format) {
    case OutputFormat::kText:
      for (const auto& h : hits) out << "S" << to_string(h.triple) << " = " << str(h.value) << '\n';
      out << hits.size() << (hits.size() == 1 ? " representation" : " representations") << '\n';
      break;
    case OutputFormat::kCsv: {
      Grid rows{{"v", "d", "n", "value"}};
      for (const auto& h : hits) rows.push_back({str(h.triple.v), str(h.triple.d), str(h.triple.n), str(h.value)});
      write_csv(out, rows);
      break;
    }
    case OutputFormat::kJson: {
      Json list = Json::array();
      for (const auto& h : hits) list.push_back(triple_json(h.triple, h.value));
      Json query{{"value", a.value}, {"vmin", a.v_min}, {"vmax", a.v_max}, {"dmin", a.d_min}, {"nmin", a.n_min}};
      if (a.d_max) query["dmax"] = *a.d_max;
      if (a.n_max) query["nmax"] = *a.n_max;
      write_json(out, query, Json{{"hits", list}}, true);
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypersolid (multidimensional figurate) numbers: evaluation, tables, sums and verification"};
  app.name(args.empty() ? "hypersolid" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output_path, "Write output to this file instead of stdout");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate S(v,d,n)");
  eval_cmd->add_option("--v", eval.v, "Dimension")->required();
  eval_cmd->add_option("--d", eval.d, "Common difference")->required();
  eval_cmd->add_option("--n", eval.n, "Rank")->required();
  eval_cmd->add_option("--method", eval.method, "Evaluation method")
      ->check(CLI::IsMember({"closed", "summation", "both"}))
      ->capture_default_str();

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Grid of S(v,d,n) for d in [1,dmax], n in [1,nmax]");
  table_cmd->add_option("--v", table.v, "Dimension (>= 2)")->required();
  table_cmd->add_option("--dmax", table.d_max, "Largest common difference")->capture_default_str();
  table_cmd->add_option("--nmax", table.n_max, "Largest rank")->capture_default_str();
  table_cmd->add_flag("--gnomons", table.gnomons, "Append the (n) gnomon column and the (d) gnomon row");

  TriangleArgs triangle;
  auto* triangle_cmd = app.add_subcommand("triangle", "Arithmetic triangle of hypersolids with a fixed d");
  triangle_cmd->add_option("--d", triangle.d, "Common difference")->required();
  triangle_cmd->add_option("--rows", triangle.rows, "Deepest row index c")->capture_default_str();
  triangle_cmd->add_option("--diagonals", triangle.diagonals, "Also print sums along the lines m*v + n = k");

  SumsArgs sums;
  auto* sums_cmd = app.add_subcommand("sums", "Sums of hypersolids with fixed s = v + d + n");
  sums_cmd->add_option("--s", sums.s, "Total weight s")->required();
  sums_cmd->add_option("--fix", sums.fix, "Fixed coordinate: v=N, d=N, n=N or none")->capture_default_str();
  sums_cmd->add_flag("--list", sums.list, "List the contributing nonzero numbers");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant sweeps");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  verify_cmd->add_option("--vmax", verify.bounds.vmax, "Largest v");
  verify_cmd->add_option("--dmax", verify.bounds.dmax, "Largest d");
  verify_cmd->add_option("--nmax", verify.bounds.nmax, "Largest n");
  verify_cmd->add_option("--cmax", verify.bounds.cmax, "Deepest triangle row");
  verify_cmd->add_option("--kmax", verify.bounds.kmax, "Largest diagonal index");
  verify_cmd->add_option("--smax", verify.bounds.smax, "Largest s for the sum theorems");
  verify_cmd->add_option("--mmax", verify.bounds.mmax, "Largest M, R or n for the identities");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->capture_default_str();

  RepresentArgs represent;
  auto* represent_cmd = app.add_subcommand("represent", "Find every S(v,d,n) equal to a value");
  represent_cmd->add_option("--value", represent.value, "Target value (>= 1)")->required();
  represent_cmd->add_option("--vmin", represent.v_min, "Smallest v")->capture_default_str();
  represent_cmd->add_option("--vmax", represent.v_max, "Largest v")->capture_default_str();
  represent_cmd->add_option("--dmin", represent.d_min, "Smallest d")->capture_default_str();
  represent_cmd->add_option("--dmax", represent.d_max, "Largest d (default: the value)");
  represent_cmd->add_option("--nmin", represent.n_min, "Smallest n")->capture_default_str();
  represent_cmd->add_option("--nmax", represent.n_max, "Largest n (default: derived from the value)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = parse_format(format_name);
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (eval_cmd->parsed()) code = cmd_eval(eval, format, buffer);
    if (table_cmd->parsed()) code = cmd_table(table, format, buffer);
    if (triangle_cmd->parsed()) code = cmd_triangle(triangle, format, buffer);
    if (sums_cmd->parsed()) code = cmd_sums(sums, format, buffer);
    if (verify_cmd->parsed()) code = cmd_verify(verify, format, buffer);
    if (represent_cmd->parsed()) code = cmd_represent(represent, format, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << output_path << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace hypersolid::cli
