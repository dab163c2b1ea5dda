#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "isospectra/floquet.hpp"
#include "isospectra/minors.hpp"
#include "isospectra/rational.hpp"
#include "isospectra/solver.hpp"
#include "jsonio.hpp"

using namespace isospectra;
using cli::CommonOptions;
using cli::FloquetRequest;
using cli::Json;
using std::complex;

namespace {

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "isospectra-cli-tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream f(path);
  f << text;
  f.close();
  return path.string();
}

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Json run_report(int& exit_code, const FloquetRequest& req, const CommonOptions& opt) {
  std::ostringstream os;
  exit_code = cli::run_floquet(req, opt, os);
  return Json::parse(os.str());
}

Json rigidity_report(int& exit_code, const std::string& path, const std::string& mode) {
  std::ostringstream os;
  exit_code = cli::run_rigidity(path, mode, CommonOptions{}, os);
  return Json::parse(os.str());
}

Json find_cert(const Json& report, const std::string& type) {
  for (const auto& c : report.at("certificates"))
    if (c.at("type") == type) return c;
  return Json();
}

std::vector<std::vector<double>> parse_csv_numbers(const std::string& csv) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(csv);
  std::string line;
  bool header = true;
  while (std::getline(lines, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("rational matrix JSON round-trips exactly") {
  RationalMatrix m(2);
  m.at(0, 0) = frac(1, 4);
  m.at(0, 1) = frac(-3, 2);
  m.at(1, 0) = 2;
  m.at(1, 1) = 0;
  Json j = cli::matrix_to_json(m);
  CHECK(j.at("n") == 2);
  CHECK(j.at("a")[0][0] == "1/4");
  RationalMatrix back = cli::matrix_from_json(j);
  REQUIRE(back.n == 2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) CHECK(back.at(i, k) == m.at(i, k));

  // JSON integers are exact and accepted as entries.
  RationalMatrix ints = cli::matrix_from_json(Json::parse(R"({"n":1,"a":[[7]]})"));
  CHECK(ints.at(0, 0) == 7);
}

TEST_CASE("matrix JSON parsing rejects malformed input") {
  CHECK_THROWS_AS(cli::matrix_from_json(Json::parse(R"({"n":2,"a":[["1","2"],["3"]]})")),
                  argument_error);
  CHECK_THROWS_AS(cli::matrix_from_json(Json::parse(R"({"n":2,"a":[["1","2"]]})")),
                  argument_error);
  CHECK_THROWS_AS(cli::matrix_from_json(Json::parse(R"({"n":1,"a":[[0.5]]})")), argument_error);
  CHECK_THROWS_AS(cli::matrix_from_json(Json::parse(R"({"n":1,"a":[["1/0"]]})")), argument_error);
  CHECK_THROWS_AS(cli::matrix_from_json(Json::parse(R"({"n":0,"a":[]})")), argument_error);
}

TEST_CASE("matrix CSV parses decimal literals exactly") {
  RationalMatrix m = cli::matrix_from_csv("0.25,-1.5\n2,3\n");
  REQUIRE(m.n == 2);
  CHECK(m.at(0, 0) == frac(1, 4));
  CHECK(m.at(0, 1) == frac(-3, 2));
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(1, 1) == 3);
  CHECK_THROWS_AS(cli::matrix_from_csv("1,2\n3\n"), argument_error);
  CHECK_THROWS_AS(cli::matrix_from_csv(""), argument_error);
}

TEST_CASE("witness JSON round-trips") {
  Witness w;
  w.d = {complex<double>(0.5, -1.25), complex<double>(3.0, 4.0)};
  w.residual = 1e-12;
  w.method = SolveMode::TotalDegreeHomotopy;
  w.seed = 42;
  Json j = cli::witness_to_json(w);
  CHECK(j.at("mode") == "total-degree-homotopy");
  CHECK(j.at("D").size() == 2);
  Witness back = cli::witness_from_json(j);
  CHECK(back.d == w.d);
  CHECK(back.residual == w.residual);
  CHECK(back.seed == 42);
  CHECK(back.method == SolveMode::TotalDegreeHomotopy);

  j["mode"] = "oracle";
  CHECK_THROWS_AS(cli::witness_from_json(j), argument_error);
}

TEST_CASE("potential JSON round-trips and validates sites") {
  Periods p{std::vector<int>{2, 2}};
  Potential v = Potential::from_values(
      p, {complex<double>(1, 0), complex<double>(0, -2), complex<double>(0.5, 0.5),
          complex<double>(-3, 1)});
  Json j = cli::potential_to_json(v);
  REQUIRE(j.at("values").size() == 4);
  Potential back = cli::potential_from_json(j);
  CHECK(back.periods == p);
  CHECK(back.values == v.values);

  Json missing = j;
  missing["values"].erase(3);
  CHECK_THROWS_AS(cli::potential_from_json(missing), argument_error);
  Json dup = j;
  dup["values"][3] = dup["values"][0];
  CHECK_THROWS_AS(cli::potential_from_json(dup), argument_error);
  Json bad_site = j;
  bad_site["values"][0]["n"] = Json::array({5, 0});
  CHECK_THROWS_AS(cli::potential_from_json(bad_site), argument_error);
}

TEST_CASE("perturbation table JSON round-trips") {
  PerturbationTable t;
  t.n = 3;
  t.cells[{2, 0b001}] = -1;
  t.cells[{2, 0b010}] = -1;
  t.cells[{3, 0b011}] = 1;
  t.cells[{3, 0b001}] = -1;
  t.cells[{3, 0b010}] = -1;
  Json j = cli::table_to_json(t);
  CHECK(j.at("cells").size() == 5);
  CHECK(j.at("cells")[0].at("J") == Json::array({1}));
  PerturbationTable back = cli::table_from_json(j);
  CHECK(back == t);

  Json dup = j;
  dup["cells"].push_back(dup["cells"][0]);
  CHECK_THROWS_AS(cli::table_from_json(dup), argument_error);
}

TEST_CASE("band sample CSV lists coordinates then eigenvalues") {
  Periods p{std::vector<int>{2}};
  std::string csv = cli::band_samples_csv(band_spectrum_sample(p, Potential::zero(p), 1));
  auto rows = parse_csv_numbers(csv);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].size() == 6);  // one z pair, two eigenvalue pairs
  CHECK(rows[0][0] == doctest::Approx(1.0));
  CHECK(rows[0][1] == doctest::Approx(0.0));
  CHECK(rows[0][2] == doctest::Approx(-2.0));
  CHECK(rows[0][4] == doctest::Approx(2.0));
}

TEST_CASE("rigidity command on the 3-path reports a minor violation") {
  std::string file = write_file("p3.csv", "0,1,0\n1,0,1\n0,1,0\n");
  int code = -1;
  Json rep = rigidity_report(code, file, "both");
  CHECK(code == 0);
  CHECK(rep.at("command") == "rigidity");
  CHECK(rep.at("verdict") == "witness");
  CHECK(rep.at("inputs").at("matrix").at("n") == 3);

  Json minor = find_cert(rep, "minor-criterion");
  REQUIRE(!minor.is_null());
  CHECK(minor.at("verdict") == "witness");
  CHECK(minor.at("k") == 2);
  CHECK(minor.at("subset_a").size() == 2);
  CHECK(minor.at("subset_b").size() == 2);
  CHECK(minor.at("minor_a") != minor.at("minor_b"));

  Json groebner = find_cert(rep, "groebner");
  REQUIRE(!groebner.is_null());
  CHECK(groebner.at("verdict") == "witness");

  Json numeric = find_cert(rep, "numeric-witness");
  REQUIRE(!numeric.is_null());
  CHECK(numeric.at("verdict") == "witness");
  CHECK(numeric.at("witness").at("D").size() == 3);
  CHECK(numeric.at("witness").at("residual").get<double>() <= 1e-10);
  CHECK(numeric.at("sup_norm").get<double>() > 1e-6);
  CHECK(find_cert(rep, "disagreement").is_null());
}

TEST_CASE("rigidity command certifies a triangular matrix exactly") {
  std::string file = write_file(
      "tri.json", R"({"n":3,"a":[["2","5","-1"],["0","2","7"],["0","0","2"]]})");
  int code = -1;
  Json rep = rigidity_report(code, file, "exact");
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "rigid");
  CHECK(find_cert(rep, "groebner").at("verdict") == "rigid");
  CHECK(find_cert(rep, "numeric-witness").is_null());
}

TEST_CASE("rigidity command agrees across modes on a rigid graph matrix") {
  std::string file = write_file("j4.csv", "0,1,1,1\n1,0,1,1\n1,1,0,1\n1,1,1,0\n");
  int code = -1;
  Json rep = rigidity_report(code, file, "both");
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "rigid");
  CHECK(find_cert(rep, "groebner").at("verdict") == "rigid");
  CHECK(find_cert(rep, "numeric-witness").at("verdict") == "rigid");
  CHECK(find_cert(rep, "disagreement").is_null());
}

TEST_CASE("floquet search finds a five-cycle witness and is seed-deterministic") {
  FloquetRequest req;
  req.periods = {5};
  req.search = true;
  CommonOptions opt;
  opt.seed = 11;
  int code = -1;
  Json rep = run_report(code, req, opt);
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "witness");
  CHECK(rep.at("seed") == 11);

  Json pot = find_cert(rep, "potential");
  REQUIRE(!pot.is_null());
  CHECK(pot.at("potential").at("periods") == Json::array({5}));
  CHECK(pot.at("potential").at("values").size() == 5);
  CHECK(pot.at("sup_norm").get<double>() > 1e-6);
  CHECK(find_cert(rep, "isospectral-check").at("verdict") == "witness");

  int code2 = -1;
  Json rep2 = run_report(code2, req, opt);
  CHECK(code2 == 0);
  CHECK(rep2.at("certificates") == rep.at("certificates"));
}

TEST_CASE("floquet search certifies mixed periods rigid") {
  FloquetRequest req;
  req.periods = {3, 2};
  req.search = true;
  int code = -1;
  Json rep = run_report(code, req, CommonOptions{});
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "rigid");
  CHECK(!find_cert(rep, "rigidity-certificate").at("detail").get<std::string>().empty());
}

TEST_CASE("floquet search reports three threes inconclusive") {
  FloquetRequest req;
  req.periods = {3, 3, 3};
  req.search = true;
  int code = -1;
  Json rep = run_report(code, req, CommonOptions{});
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "inconclusive");
  CHECK(!find_cert(rep, "note").at("detail").get<std::string>().empty());
}

TEST_CASE("floquet check compares potential files") {
  Periods p{std::vector<int>{2}};
  std::string zero_file =
      write_file("zero2.json", cli::potential_to_json(Potential::zero(p)).dump());
  std::string ones_file = write_file(
      "ones2.json",
      cli::potential_to_json(
          Potential::from_values(p, {complex<double>(1, 0), complex<double>(1, 0)}))
          .dump());

  FloquetRequest same;
  same.periods = {2};
  same.check = {zero_file, zero_file};
  int code = -1;
  Json rep = run_report(code, same, CommonOptions{});
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "witness");
  CHECK(find_cert(rep, "isospectral-check").at("deviation").get<double>() <= 1e-12);

  FloquetRequest differ = same;
  differ.check = {zero_file, ones_file};
  Json rep2 = run_report(code, differ, CommonOptions{});
  CHECK(code == 1);
  CHECK(rep2.at("verdict") == "inconclusive");
  CHECK(find_cert(rep2, "isospectral-check").at("deviation").get<double>() > 0.5);
}

TEST_CASE("floquet bands embeds the sample grid") {
  FloquetRequest req;
  req.periods = {2};
  req.bands = 1;
  int code = -1;
  Json rep = run_report(code, req, CommonOptions{});
  CHECK(code == 0);
  CHECK(rep.at("verdict") == "inconclusive");
  Json cert = find_cert(rep, "band-sample");
  REQUIRE(!cert.is_null());
  CHECK(cert.at("rows") == 1);
  auto rows = parse_csv_numbers(cert.at("csv").get<std::string>());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][2] == doctest::Approx(-2.0));
  CHECK(rows[0][4] == doctest::Approx(2.0));
}

TEST_CASE("lambda table for two variables is frozen") {
  std::ostringstream os;
  int code = cli::run_lambda_table(2, CommonOptions{}, os);
  CHECK(code == 0);
  CHECK(os.str() ==
        "n,m,k,j,value,trace,equal\n"
        "2,1,0,0,-1,-1,true\n"
        "2,1,1,0,-1,-1,true\n"
        "2,1,1,1,1,1,true\n"
        "2,2,0,0,-2,-2,true\n");
}

TEST_CASE("lambda table caps the arity") {
  std::ostringstream os;
  CHECK_THROWS_AS(cli::run_lambda_table(7, CommonOptions{}, os), argument_error);
  CHECK_THROWS_AS(cli::run_lambda_table(0, CommonOptions{}, os), argument_error);
}

TEST_CASE("seed resolution order") {
  unsetenv("ISOSPECTRA_SEED");
  CHECK(cli::resolve_seed(std::nullopt) == 1);
  setenv("ISOSPECTRA_SEED", "777", 1);
  CHECK(cli::resolve_seed(std::nullopt) == 777);
  CHECK(cli::resolve_seed(std::uint64_t{5}) == 5);
  unsetenv("ISOSPECTRA_SEED");
}

TEST_CASE("report artifacts can be redirected to a file") {
  std::string out = (scratch_dir() / "report.json").string();
  FloquetRequest req;
  req.periods = {3, 3, 3};
  req.search = true;
  CommonOptions opt;
  opt.out = out;
  std::ostringstream os;
  int code = cli::run_floquet(req, opt, os);
  CHECK(code == 0);
  CHECK(os.str().empty());
  std::ifstream f(out);
  REQUIRE(f.good());
  Json rep = Json::parse(f);
  CHECK(rep.at("verdict") == "inconclusive");
}
