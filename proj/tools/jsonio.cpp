#include "jsonio.hpp"

#include <bit>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace isospectra::cli {

namespace {

Json complex_to_json(const std::complex<double>& c) {
  return Json{{"re", c.real()}, {"im", c.imag()}};
}

std::complex<double> complex_from_json(const Json& j, const char* where) {
  if (!j.is_object() || !j.contains("re") || !j.at("re").is_number())
    throw argument_error(std::string(where) + ": expected an object with \"re\" and \"im\"");
  double re = j.at("re").get<double>();
  double im = 0.0;
  if (j.contains("im")) {
    if (!j.at("im").is_number())
      throw argument_error(std::string(where) + ": \"im\" must be a number");
    im = j.at("im").get<double>();
  }
  return {re, im};
}

// Entries arrive as rational strings or JSON integers; non-integer numbers
// have no exact reading, so they are refused rather than rounded.
Rational entry_to_rational(const Json& j, const char* where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    mpz_class num(j.dump(), 10);
    return Rational(num);
  }
  throw argument_error(std::string(where) +
                       ": entries must be rational strings or integers (write 0.5 as \"0.5\")");
}

const char* mode_name(SolveMode mode) {
  return mode == SolveMode::NewtonMultistart ? "newton-multistart" : "total-degree-homotopy";
}

SolveMode mode_value(const std::string& name) {
  if (name == "newton-multistart") return SolveMode::NewtonMultistart;
  if (name == "total-degree-homotopy") return SolveMode::TotalDegreeHomotopy;
  throw argument_error("witness: unknown mode \"" + name + "\"");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw argument_error("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw argument_error(path + ": " + e.what());
  }
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n}, {"a", std::move(rows)}};
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("a"))
    throw argument_error("matrix: expected {\"n\": ..., \"a\": [[...], ...]}");
  if (!j.at("n").is_number_integer()) throw argument_error("matrix: \"n\" must be an integer");
  int n = j.at("n").get<int>();
  if (n < 1) throw argument_error("matrix: size must be at least 1");
  const Json& a = j.at("a");
  if (!a.is_array() || static_cast<int>(a.size()) != n)
    throw argument_error("matrix: \"a\" must hold exactly n rows");
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = a[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw argument_error("matrix: every row must hold exactly n entries");
    for (int k = 0; k < n; ++k) m.at(i, k) = entry_to_rational(row[k], "matrix");
  }
  return m;
}

RationalMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw argument_error("matrix: empty CSV input");
  int n = static_cast<int>(rows.size());
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw argument_error("matrix: CSV must be square, row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries for " + std::to_string(n) +
                           " rows");
    for (int k = 0; k < n; ++k) m.at(i, k) = std::move(rows[i][k]);
  }
  return m;
}

RationalMatrix load_matrix(const std::string& path) {
  bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (!json && !(path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)) {
    std::ifstream probe(path);
    if (!probe) throw argument_error("cannot open " + path);
    char c = 0;
    while (probe.get(c) && std::isspace(static_cast<unsigned char>(c))) {
    }
    json = c == '{';
  }
  if (json) return matrix_from_json(load_json_file(path));
  std::ifstream f(path);
  if (!f) throw argument_error("cannot open " + path);
  std::ostringstream text;
  text << f.rdbuf();
  return matrix_from_csv(text.str());
}

Json witness_to_json(const Witness& w) {
  Json d = Json::array();
  for (const Complex& c : w.d) d.push_back(complex_to_json(c));
  return Json{{"D", std::move(d)},
              {"residual", w.residual},
              {"seed", w.seed},
              {"mode", mode_name(w.method)}};
}

Witness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("D") || !j.at("D").is_array())
    throw argument_error("witness: expected {\"D\": [...], \"residual\", \"seed\", \"mode\"}");
  Witness w;
  for (const Json& c : j.at("D")) w.d.push_back(complex_from_json(c, "witness"));
  if (!j.contains("residual") || !j.at("residual").is_number())
    throw argument_error("witness: \"residual\" must be a number");
  w.residual = j.at("residual").get<double>();
  if (!j.contains("seed") || !j.at("seed").is_number_integer())
    throw argument_error("witness: \"seed\" must be an integer");
  w.seed = j.at("seed").get<std::uint64_t>();
  if (!j.contains("mode") || !j.at("mode").is_string())
    throw argument_error("witness: \"mode\" must be a string");
  w.method = mode_value(j.at("mode").get<std::string>());
  return w;
}

Json potential_to_json(const Potential& v) {
  Json values = Json::array();
  long total = v.periods.total();
  for (long idx = 0; idx < total; ++idx) {
    Json site = Json::object();
    site["n"] = v.periods.point(idx);
    site["re"] = v.values[idx].real();
    site["im"] = v.values[idx].imag();
    values.push_back(std::move(site));
  }
  return Json{{"periods", v.periods.q}, {"values", std::move(values)}};
}

Potential potential_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("periods") || !j.contains("values"))
    throw argument_error("potential: expected {\"periods\": [...], \"values\": [...]}");
  const Json& pj = j.at("periods");
  if (!pj.is_array() || pj.empty())
    throw argument_error("potential: \"periods\" must be a nonempty list");
  Periods p;
  for (const Json& q : pj) {
    if (!q.is_number_integer()) throw argument_error("potential: periods must be integers");
    p.q.push_back(q.get<int>());
  }
  p.validate();
  long total = p.total();
  const Json& values = j.at("values");
  if (!values.is_array() || static_cast<long>(values.size()) != total)
    throw argument_error("potential: expected one value per fundamental-domain site (" +
                         std::to_string(total) + ")");
  std::vector<std::complex<double>> vals(total);
  std::vector<char> seen(total, 0);
  for (const Json& site : values) {
    if (!site.is_object() || !site.contains("n") || !site.at("n").is_array())
      throw argument_error("potential: every value needs a site list \"n\"");
    std::vector<int> point;
    for (const Json& c : site.at("n")) {
      if (!c.is_number_integer())
        throw argument_error("potential: site coordinates must be integers");
      point.push_back(c.get<int>());
    }
    long idx = p.index(point);
    if (seen[idx]) throw argument_error("potential: duplicate site in \"values\"");
    seen[idx] = 1;
    vals[idx] = complex_from_json(site, "potential");
  }
  return Potential::from_values(p, std::move(vals));
}

Potential load_potential(const std::string& path) {
  return potential_from_json(load_json_file(path));
}

Json table_to_json(const PerturbationTable& t) {
  Json cells = Json::array();
  for (const auto& [key, a] : t.cells) {
    Json subset = Json::array();
    for (std::uint32_t mask = key.second; mask != 0; mask &= mask - 1)
      subset.push_back(std::countr_zero(mask) + 1);
    cells.push_back(Json{{"i", key.first}, {"J", std::move(subset)}, {"a", to_string(a)}});
  }
  return Json{{"n", t.n}, {"cells", std::move(cells)}};
}

PerturbationTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("cells"))
    throw argument_error("table: expected {\"n\": ..., \"cells\": [...]}");
  if (!j.at("n").is_number_integer()) throw argument_error("table: \"n\" must be an integer");
  PerturbationTable t;
  t.n = j.at("n").get<int>();
  if (!j.at("cells").is_array()) throw argument_error("table: \"cells\" must be a list");
  for (const Json& cell : j.at("cells")) {
    if (!cell.is_object() || !cell.contains("i") || !cell.contains("J") || !cell.contains("a"))
      throw argument_error("table: every cell needs \"i\", \"J\", and \"a\"");
    if (!cell.at("i").is_number_integer())
      throw argument_error("table: cell slot \"i\" must be an integer");
    int slot = cell.at("i").get<int>();
    std::uint32_t mask = 0;
    if (!cell.at("J").is_array()) throw argument_error("table: \"J\" must be a list of indices");
    for (const Json& v : cell.at("J")) {
      if (!v.is_number_integer()) throw argument_error("table: \"J\" must hold integers");
      int var = v.get<int>();
      if (var < 1 || var > t.n) throw argument_error("table: variable index out of range");
      if (mask & (1u << (var - 1))) throw argument_error("table: repeated variable in \"J\"");
      mask |= 1u << (var - 1);
    }
    if (t.cells.count({slot, mask})) throw argument_error("table: duplicate cell");
    t.cells[{slot, mask}] = entry_to_rational(cell.at("a"), "table");
  }
  t.validate();
  return t;
}

std::string band_samples_csv(const std::vector<BandSample>& rows) {
  std::ostringstream csv;
  csv << std::setprecision(17);
  if (rows.empty()) return "";
  for (std::size_t j = 0; j < rows[0].z.size(); ++j)
    csv << (j ? "," : "") << 'z' << j + 1 << "_re,z" << j + 1 << "_im";
  for (std::size_t j = 0; j < rows[0].eigenvalues.size(); ++j)
    csv << ",ev" << j + 1 << "_re,ev" << j + 1 << "_im";
  csv << '\n';
  for (const BandSample& row : rows) {
    for (std::size_t j = 0; j < row.z.size(); ++j)
      csv << (j ? "," : "") << row.z[j].real() << ',' << row.z[j].imag();
    for (const std::complex<double>& ev : row.eigenvalues)
      csv << ',' << ev.real() << ',' << ev.imag();
    csv << '\n';
  }
  return csv.str();
}

Json report_to_json(const Report& r) {
  return Json{{"command", r.command}, {"inputs", r.inputs},       {"verdict", r.verdict},
              {"certificates", r.certificates}, {"timing_ms", r.timing_ms}, {"seed", r.seed}};
}

}  // namespace isospectra::cli
