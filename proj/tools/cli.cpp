#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghpoly/ghpoly.hpp"

namespace ghpoly::cli {

namespace {

using nlohmann::json;

constexpr double kAgreementTol = 1e-9;

// Thrown for anything that should end in exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int parse_polygon_size(const std::string& text) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw InputError("not an integer: '" + text + "'");
  return n;
}

FiniteMetricSpace load_space(const std::string& descriptor, bool allow_pseudo = false) {
  constexpr std::string_view prefix = "polygon:";
  if (descriptor.rfind(prefix, 0) == 0) return regular_polygon(parse_polygon_size(descriptor.substr(prefix.size())));
  return read_space(std::filesystem::path(descriptor), allow_pseudo);
}

std::optional<MatrixFormat> parse_format(const std::string& s) {
  if (s == "csv") return MatrixFormat::csv;
  if (s == "json") return MatrixFormat::json;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// gh

struct MethodRun {
  std::string method;
  bool applicable = true;
  std::string note;
  GHResult result;
  double ms = 0.0;
};

struct Verdict {
  std::string a;
  std::string b;
  std::string relation;  // "equal" or "lower" (a bounds b from below)
  double discrepancy = 0.0;
  bool pass = true;
};

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// The simplex side of a pair, which must be no larger than the other space.
const FiniteMetricSpace* simplex_side(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.size() >= 2 && x.is_simplex() && x.size() <= y.size()) return &x;
  if (y.size() >= 2 && y.is_simplex() && y.size() <= x.size()) return &y;
  return nullptr;
}

MethodRun run_method(const std::string& method, const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                     const SearchOptions& options) {
  MethodRun run;
  run.method = method;
  if (method == "exact") {
    run.ms = timed([&] { run.result = gh_bruteforce(x, y, options); });
  } else if (method == "diam-lower") {
    run.ms = timed([&] { run.result = gh_lower_diameter(x, y); });
  } else if (method == "ultra-lower") {
    run.ms = timed([&] { run.result = gh_lower_ultrametric(x, y, options); });
  } else if (method == "simplex") {
    const FiniteMetricSpace* simplex = simplex_side(x, y);
    const FiniteMetricSpace* other = simplex == &x ? &y : &x;
    if (!simplex) {
      run.applicable = false;
      run.note = "neither input is a simplex no larger than the other";
      return run;
    }
    SimplexOptions sopts;
    sopts.budget = options.budget;
    run.ms = timed([&] {
      run.result = simplex_distance(SimplexSpec(simplex->size(), (*simplex)(0, 1)), *other, sopts);
    });
  } else if (method == "closed-form") {
    run.result.method = "closed-form";
    if (!x.polygon_order() || !y.polygon_order()) {
      run.applicable = false;
      run.note = "inputs are not both regular polygons";
      return run;
    }
    ClosedFormAnswer answer;
    run.ms = timed([&] { answer = closed_form(*x.polygon_order(), *y.polygon_order()); });
    if (!answer.applicable()) {
      run.applicable = false;
      run.note = "no closed form";
      return run;
    }
    run.result.value = answer.value->value();
    run.result.exact = answer.value;
    run.result.bound = BoundKind::exact;
    run.note = to_string(*answer.rule);
  } else {
    throw InputError("unknown method '" + method + "'");
  }
  return run;
}

std::vector<Verdict> cross_check(const std::vector<MethodRun>& runs) {
  auto find = [&](const std::string& m) -> const MethodRun* {
    for (const auto& r : runs)
      if (r.method == m && r.applicable && !r.result.exhausted) return &r;
    return nullptr;
  };
  std::vector<Verdict> verdicts;
  auto equal = [&](const std::string& a, const std::string& b) {
    const MethodRun* ra = find(a);
    const MethodRun* rb = find(b);
    if (!ra || !rb) return;
    const double gap = std::abs(ra->result.value - rb->result.value);
    verdicts.push_back({a, b, "equal", gap, gap <= kAgreementTol});
  };
  auto lower = [&](const std::string& a, const std::string& b) {
    const MethodRun* ra = find(a);
    const MethodRun* rb = find(b);
    if (!ra || !rb) return;
    const double gap = std::abs(ra->result.value - rb->result.value);
    verdicts.push_back({a, b, "lower", gap, ra->result.value <= rb->result.value + kAgreementTol});
  };
  equal("exact", "closed-form");
  equal("exact", "simplex");
  equal("closed-form", "simplex");
  for (const char* lb : {"ultra-lower", "diam-lower"}) {
    lower(lb, "exact");
    if (!find("exact")) lower(lb, "closed-form");
  }
  return verdicts;
}

json witness_json(const GHResult& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (const auto* c = r.correspondence()) {
    json pairs = json::array();
    // Witnesses from the ultrametric bound live on quotients; print indices there.
    const bool labeled = c->x_size() == x.size() && c->y_size() == y.size();
    for (const auto& [i, j] : c->pairs()) {
      if (labeled) pairs.push_back({x.labels()[static_cast<std::size_t>(i)], y.labels()[static_cast<std::size_t>(j)]});
      else pairs.push_back({i, j});
    }
    return {{"correspondence", pairs}};
  }
  if (const auto* p = r.partition()) {
    // Blocks partition the non-simplex side.
    const FiniteMetricSpace& target = simplex_side(x, y) == &x ? y : x;
    json blocks = json::array();
    for (const auto& block : p->members()) {
      json names = json::array();
      for (Index i : block) names.push_back(target.labels()[static_cast<std::size_t>(i)]);
      blocks.push_back(names);
    }
    return {{"partition", blocks}};
  }
  return nullptr;
}

std::string witness_text(const GHResult& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const json w = witness_json(r, x, y);
  if (w.is_null()) return "";
  return w.dump();
}

int cmd_gh(const std::string& xs, const std::string& ys, const std::string& method, std::uint64_t budget,
           unsigned threads, bool witness, bool as_json, std::ostream& out) {
  const FiniteMetricSpace x = load_space(xs);
  const FiniteMetricSpace y = load_space(ys);
  SearchOptions options;
  options.budget = budget;
  options.threads = threads;

  std::vector<std::string> methods;
  if (method == "all") methods = {"exact", "closed-form", "simplex", "ultra-lower", "diam-lower"};
  else methods = {method};

  std::vector<MethodRun> runs;
  for (const auto& m : methods) runs.push_back(run_method(m, x, y, options));
  const std::vector<Verdict> verdicts = cross_check(runs);
  const bool exhausted = std::any_of(runs.begin(), runs.end(), [](const MethodRun& r) { return r.result.exhausted; });
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });

  if (as_json) {
    json doc;
    doc["inputs"] = json::array();
    for (const auto* s : {&x, &y}) {
      json in = {{"name", s == &x ? xs : ys}, {"points", s->size()}};
      in["polygon"] = s->polygon_order() ? json(*s->polygon_order()) : json(nullptr);
      doc["inputs"].push_back(in);
    }
    doc["results"] = json::array();
    for (const auto& r : runs) {
      json e = {{"method", r.method}, {"applicable", r.applicable}, {"time_ms", r.ms}};
      if (!r.note.empty()) e["note"] = r.note;
      if (r.applicable) {
        e["value"] = r.result.value;
        e["bound"] = to_string(r.result.bound);
        e["exact"] = r.result.exact ? json(r.result.exact->to_string()) : json(nullptr);
        e["budget_exhausted"] = r.result.exhausted;
        if (r.result.lower_bound) e["lower_bound"] = *r.result.lower_bound;
        if (r.result.nodes) e["nodes"] = r.result.nodes;
        if (witness) e["witness"] = witness_json(r.result, x, y);
      }
      doc["results"].push_back(e);
    }
    doc["agreement"] = json::array();
    for (const auto& v : verdicts)
      doc["agreement"].push_back({{"methods", {v.a, v.b}}, {"relation", v.relation},
                                  {"discrepancy", v.discrepancy}, {"pass", v.pass}});
    doc["ok"] = agree && !exhausted;
    out << doc.dump(2) << '\n';
  } else {
    out << "X: " << xs << " (" << x.size() << " points)   Y: " << ys << " (" << y.size() << " points)\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-16s %-10s %-6s %s\n", "method", "value", "exact", "bound", "time");
    out << line;
    for (const auto& r : runs) {
      if (!r.applicable) {
        std::snprintf(line, sizeof line, "%-12s not applicable (%s)\n", r.method.c_str(), r.note.c_str());
        out << line;
        continue;
      }
      const std::string exact = r.result.exact ? r.result.exact->to_string() : "-";
      std::snprintf(line, sizeof line, "%-12s %-16s %-10s %-6s %.3f ms\n", r.method.c_str(),
                    decimal(r.result.value).c_str(), exact.c_str(), to_string(r.result.bound).c_str(), r.ms);
      out << line;
      if (r.result.exhausted)
        out << "  budget exhausted after " << r.result.nodes << " nodes; lower bound "
            << decimal(r.result.lower_bound.value_or(0.0)) << '\n';
      if (witness) {
        const std::string w = witness_text(r.result, x, y);
        if (!w.empty()) out << "  witness " << w << '\n';
      }
    }
    for (const auto& v : verdicts)
      out << "agreement: " << v.a << (v.relation == "equal" ? " = " : " <= ") << v.b << "  |Δ| = "
          << decimal(v.discrepancy) << "  " << (v.pass ? "pass" : "FAIL") << '\n';
  }
  return exhausted ? kExitBudget : kExitOk;
}

// ---------------------------------------------------------------------------
// table

struct Cell {
  std::optional<double> value;
  std::optional<PiRational> exact;
  std::string source;
  bool exhausted = false;
};

int cmd_table(int n_max, const std::string& method, std::uint64_t budget, bool as_json, std::ostream& out) {
  if (n_max < 2) throw InputError("--nmax must be at least 2");
  if (method != "closed-form" && method != "exact" && method != "all")
    throw InputError("table method must be closed-form, exact or all");
  SearchOptions options;
  options.budget = budget;
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(n_max + 1),
                                       std::vector<Cell>(static_cast<std::size_t>(n_max + 1)));
  bool exhausted = false;
  for (int n = 2; n <= n_max; ++n) {
    for (int m = n; m <= n_max; ++m) {
      Cell& cell = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
      if (method != "exact") {
        const ClosedFormAnswer a = closed_form(n, m);
        if (a.applicable()) {
          cell.exact = a.value;
          cell.value = a.value->value();
          cell.source = "closed-form";
          continue;
        }
        if (method == "closed-form") continue;
      }
      const GHResult r = gh_bruteforce(regular_polygon(n), regular_polygon(m), options);
      cell.value = r.value;
      cell.source = "exact";
      cell.exhausted = r.exhausted;
      exhausted = exhausted || r.exhausted;
    }
  }

  auto text = [](const Cell& c) -> std::string {
    if (c.exact) return c.exact->to_string();
    if (c.value) return decimal(*c.value) + (c.exhausted ? "?" : "");
    return "—";
  };

  if (as_json) {
    json doc = {{"n_max", n_max}, {"method", method}, {"cells", json::array()}};
    for (int n = 2; n <= n_max; ++n)
      for (int m = n; m <= n_max; ++m) {
        const Cell& c = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
        json e = {{"n", n}, {"m", m}, {"text", text(c)}};
        e["value"] = c.value ? json(*c.value) : json(nullptr);
        e["exact"] = c.exact ? json(c.exact->to_string()) : json(nullptr);
        e["source"] = c.source.empty() ? json(nullptr) : json(c.source);
        if (c.exhausted) e["budget_exhausted"] = true;
        doc["cells"].push_back(e);
      }
    out << doc.dump(2) << '\n';
    return exhausted ? kExitBudget : kExitOk;
  }

  // Column width in display characters; "π" and "—" are one column but several bytes.
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
    return w;
  };
  std::size_t col = 4;
  for (int n = 2; n <= n_max; ++n)
    for (int m = n; m <= n_max; ++m)
      col = std::max(col, width(text(cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)])));
  auto pad = [&](const std::string& s) { return s + std::string(col + 2 - width(s), ' '); };

  out << pad("n\\m");
  for (int m = 2; m <= n_max; ++m) out << pad(std::to_string(m));
  out << '\n';
  bool decimals = false;
  for (int n = 2; n <= n_max; ++n) {
    out << pad(std::to_string(n));
    for (int m = 2; m <= n_max; ++m) {
      if (m < n) {
        out << pad("");
        continue;
      }
      const Cell& c = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
      decimals = decimals || (c.value && !c.exact);
      out << pad(text(c));
    }
    out << '\n';
  }
  if (method == "all" && decimals) out << "decimal cells: no closed form, value from exhaustive search\n";
  if (exhausted) out << "?: budget exhausted, upper bound only\n";
  return exhausted ? kExitBudget : kExitOk;
}

// ---------------------------------------------------------------------------
// dis, validate, gen, ultra

int cmd_dis(const std::string& xs, const std::string& ys, const std::string& corr_path, bool as_json,
            std::ostream& out) {
  const FiniteMetricSpace x = load_space(xs);
  const FiniteMetricSpace y = load_space(ys);
  std::ifstream is(corr_path);
  if (!is) throw InputError("cannot open '" + corr_path + "'");
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("correspondence file: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("correspondence file: expected a JSON list of label pairs");
  std::vector<IndexPair> pairs;
  for (const auto& p : doc) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError("correspondence file: each entry must be a pair of labels");
    try {
      pairs.emplace_back(x.index_of(p[0].get<std::string>()), y.index_of(p[1].get<std::string>()));
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    }
  }
  Correspondence r(x.size(), y.size(), std::move(pairs));
  const double value = distortion(r, x, y);
  const auto exact = exact_distortion(r, x, y);
  if (as_json) {
    json o = {{"distortion", value}, {"half", value / 2}};
    o["exact"] = exact ? json(exact->to_string()) : json(nullptr);
    out << o.dump(2) << '\n';
  } else {
    out << "dis R = " << decimal(value);
    if (exact) out << " (" << exact->to_string() << ")";
    out << "\nupper bound on d_GH: " << decimal(value / 2) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const std::string& path, bool allow_pseudo, std::ostream& out) {
  // Loading validates; a failure surfaces as InvalidMetricError.
  const FiniteMetricSpace x = load_space(path, allow_pseudo);
  out << "valid (" << x.size() << " points";
  if (x.polygon_order()) out << ", regular polygon P_" << *x.polygon_order();
  out << ")\n";
  return kExitOk;
}

int cmd_gen(const std::string& kind, int n, const std::string& fmt, const std::string& out_path,
            std::ostream& out) {
  if (kind != "polygon") throw InputError("unknown space kind '" + kind + "' (expected polygon)");
  // Without --format, an output file's extension decides.
  const auto format = fmt.empty() ? std::optional(out_path.empty() ? MatrixFormat::csv : format_for(out_path))
                                  : parse_format(fmt);
  if (!format) throw InputError("unknown format '" + fmt + "'");
  const FiniteMetricSpace p = regular_polygon(n);
  if (out_path.empty()) {
    write_space(out, p, *format);
  } else {
    try {
      write_space(std::filesystem::path(out_path), p, *format);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
  }
  return kExitOk;
}

int cmd_ultra(const std::string& path, const std::string& fmt, std::ostream& out) {
  const auto format = parse_format(fmt.empty() ? "csv" : fmt);
  if (!format) throw InputError("unknown format '" + fmt + "'");
  const FiniteMetricSpace x = load_space(path, true);
  const UltrametricQuotient q = quotient(x);
  if (*format == MatrixFormat::csv) {
    write_space(out, q.space, MatrixFormat::csv);
    return kExitOk;
  }
  std::ostringstream body;
  write_space(body, q.space, MatrixFormat::json);
  json doc = json::parse(body.str());
  json classes = json::object();
  for (std::size_t i = 0; i < q.class_of.size(); ++i)
    classes[x.labels()[i]] = q.space.labels()[static_cast<std::size_t>(q.class_of[i])];
  doc["class_of"] = classes;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gromov–Hausdorff distances between finite metric spaces", "ghpoly"};
  app.require_subcommand(1);

  std::string kind, fmt, out_path;
  int n = 0;
  auto* gen = app.add_subcommand("gen", "Write the distance matrix of a generated space");
  gen->add_option("kind", kind, "Space kind (polygon)")->required();
  gen->add_option("n", n, "Number of points")->required();
  gen->add_option("--format", fmt, "csv or json (default: from the -o extension, else csv)");
  gen->add_option("-o,--out", out_path, "Output path (default stdout)");

  std::string path;
  bool pseudo = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check the metric axioms of a distance file");
  validate_cmd->add_option("space", path, "File path or polygon:N")->required();
  validate_cmd->add_flag("--pseudo", pseudo, "Allow zero distances between distinct points");

  std::string xs, ys, method = "exact";
  std::uint64_t budget = SearchOptions{}.budget;
  unsigned threads = 1;
  bool witness = false, as_json = false;
  auto* gh = app.add_subcommand("gh", "Gromov–Hausdorff distance between two spaces");
  gh->add_option("x", xs, "File path or polygon:N")->required();
  gh->add_option("y", ys, "File path or polygon:N")->required();
  gh->add_option("-m,--method", method, "exact|ultra-lower|diam-lower|simplex|closed-form|all")
      ->check(CLI::IsMember({"exact", "ultra-lower", "diam-lower", "simplex", "closed-form", "all"}));
  gh->add_option("--budget", budget, "Search node limit");
  gh->add_option("--threads", threads, "Worker threads for the exact search");
  gh->add_flag("--witness", witness, "Print optimal correspondences / partitions");
  gh->add_flag("--json", as_json, "Machine-readable output");

  std::string corr_path;
  auto* dis = app.add_subcommand("dis", "Distortion of a correspondence given as label pairs");
  dis->add_option("x", xs, "File path or polygon:N")->required();
  dis->add_option("y", ys, "File path or polygon:N")->required();
  dis->add_option("correspondence", corr_path, "JSON list of [x_label, y_label] pairs")->required();
  dis->add_flag("--json", as_json, "Machine-readable output");

  auto* ultra = app.add_subcommand("ultra", "Print the min-max ultrametric quotient U(X)");
  ultra->add_option("space", path, "File path or polygon:N")->required();
  ultra->add_option("--format", fmt, "csv or json");

  int n_max = 0;
  std::string table_method = "closed-form";
  auto* table = app.add_subcommand("table", "Table of d_GH(P_n, P_m) for 2 <= n <= m <= nmax");
  table->add_option("--nmax", n_max, "Largest polygon size")->required();
  table->add_option("-m,--method", table_method, "closed-form|exact|all");
  table->add_option("--budget", budget, "Search node limit per cell");
  table->add_flag("--json", as_json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*gen) return cmd_gen(kind, n, fmt, out_path, out);
    if (*validate_cmd) return cmd_validate(path, pseudo, out);
    if (*gh) return cmd_gh(xs, ys, method, budget, threads, witness, as_json, out);
    if (*dis) return cmd_dis(xs, ys, corr_path, as_json, out);
    if (*ultra) return cmd_ultra(path, fmt, out);
    if (*table) return cmd_table(n_max, table_method, budget, as_json, out);
  } catch (const InvalidMetricError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    // ParseError, InputError and IO failures.
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

} // namespace ghpoly::cli
