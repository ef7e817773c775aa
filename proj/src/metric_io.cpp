#include "ghpoly/metric_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ghpoly {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& s, std::size_t row, std::size_t col) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    // from_chars rejects "nan"/"inf" spellings on some libstdc++ versions.
    if (s == "nan" || s == "NaN") return std::numeric_limits<double>::quiet_NaN();
    throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                     ": not a number: '" + s + "'");
  }
  return v;
}

FiniteMetricSpace finish(std::vector<std::string> labels, DistanceMatrix d, bool allow_pseudo) {
  FiniteMetricSpace space(std::move(labels), std::move(d), allow_pseudo);
  if (auto poly = as_polygon(space)) return *poly;
  return space;
}

FiniteMetricSpace read_csv(std::istream& is, bool allow_pseudo) {
  std::string line;
  std::vector<std::string> labels;
  while (std::getline(is, line)) {
    if (!trim(line).empty()) {
      labels = split_csv_line(trim(line));
      break;
    }
  }
  if (labels.empty()) throw ParseError("csv: missing label row");
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::vector<double> row;
    const auto cells = split_csv_line(line);
    for (std::size_t c = 0; c < cells.size(); ++c)
      row.push_back(parse_double(cells[c], rows.size() + 1, c + 1));
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Index>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<Index>(r.size()) != n) {
      ValidationReport report;
      report.violations.push_back({Axiom::non_square});
      throw InvalidMetricError(std::move(report));
    }
  }
  DistanceMatrix d(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return finish(std::move(labels), std::move(d), allow_pseudo);
}

FiniteMetricSpace read_json(std::istream& is, bool allow_pseudo) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("dist"))
    throw ParseError("json: expected an object with \"labels\" and \"dist\"");
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  try {
    labels = doc.at("labels").get<std::vector<std::string>>();
    for (const auto& r : doc.at("dist")) {
      std::vector<double> row;
      for (const auto& v : r) {
        if (v.is_null()) row.push_back(std::numeric_limits<double>::quiet_NaN());
        else row.push_back(v.get<double>());
      }
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  const auto n = static_cast<Index>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<Index>(r.size()) != n) {
      ValidationReport report;
      report.violations.push_back({Axiom::non_square});
      throw InvalidMetricError(std::move(report));
    }
  }
  DistanceMatrix d(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return finish(std::move(labels), std::move(d), allow_pseudo);
}

} // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

MatrixFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? MatrixFormat::json : MatrixFormat::csv;
}

void write_space(std::ostream& os, const FiniteMetricSpace& space, MatrixFormat format) {
  const Index n = space.size();
  if (format == MatrixFormat::csv) {
    for (Index i = 0; i < n; ++i) os << (i ? "," : "") << space.labels()[static_cast<std::size_t>(i)];
    os << '\n';
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) os << (j ? "," : "") << format_double(space(i, j));
      os << '\n';
    }
    return;
  }
  // Hand-written so the numbers keep their shortest round-trip spelling.
  os << "{\n  \"labels\": [";
  for (Index i = 0; i < n; ++i)
    os << (i ? ", " : "") << nlohmann::json(space.labels()[static_cast<std::size_t>(i)]).dump();
  os << "],\n  \"dist\": [\n";
  for (Index i = 0; i < n; ++i) {
    os << "    [";
    for (Index j = 0; j < n; ++j) os << (j ? ", " : "") << format_double(space(i, j));
    os << (i + 1 < n ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
}

void write_space(const std::filesystem::path& path, const FiniteMetricSpace& space,
                 MatrixFormat format) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_space(os, space, format);
  if (!os) throw std::runtime_error("write to '" + path.string() + "' failed");
}

FiniteMetricSpace read_space(std::istream& is, MatrixFormat format, bool allow_pseudo) {
  return format == MatrixFormat::json ? read_json(is, allow_pseudo) : read_csv(is, allow_pseudo);
}

FiniteMetricSpace read_space(const std::filesystem::path& path, bool allow_pseudo) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_space(is, format_for(path), allow_pseudo);
}

} // namespace ghpoly
