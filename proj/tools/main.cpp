#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "isospectra/rational.hpp"

namespace {

std::vector<int> parse_periods(const std::string& s) {
  std::vector<int> q;
  std::istringstream parts(s);
  std::string tok;
  while (std::getline(parts, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      q.push_back(v);
    } catch (const std::exception&) {
      throw isospectra::argument_error("--periods expects comma-separated integers, got \"" + s +
                                       "\"");
    }
  }
  if (q.empty()) throw isospectra::argument_error("--periods expects at least one period");
  return q;
}

void add_common(CLI::App* cmd, isospectra::cli::CommonOptions& opt) {
  cmd->add_option("--tol", opt.tol, "numeric tolerance override");
  cmd->add_option("--seed", opt.seed, "random seed (default: ISOSPECTRA_SEED, then 1)");
  cmd->add_option("--threads", opt.threads, "solver threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", opt.budget, "step budget for exact certificates")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opt.out, "write the report or table to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral rigidity of matrices under diagonal perturbation"};
  app.require_subcommand(1);

  isospectra::cli::CommonOptions common;

  std::string matrix_file;
  std::string mode = "both";
  CLI::App* rigidity =
      app.add_subcommand("rigidity", "decide whether a matrix is spectrally rigid");
  rigidity->add_option("matrix", matrix_file, "matrix file, JSON or CSV")->required();
  rigidity->add_option("--mode", mode, "exact, numeric, or both (default both)")
      ->check(CLI::IsMember({"exact", "numeric", "both"}));
  add_common(rigidity, common);

  std::string periods_str;
  bool do_search = false;
  std::vector<std::string> check_files;
  int bands_grid = 0;
  std::string potential_file;
  CLI::App* floquet =
      app.add_subcommand("floquet", "periodic potentials: search, compare, band-sample");
  floquet->add_option("--periods", periods_str, "comma-separated periods, e.g. 3,2")->required();
  floquet->add_flag("--search", do_search, "search for a nonzero potential isospectral to zero");
  floquet->add_option("--check", check_files, "two potential files to compare")->expected(2);
  CLI::Option* bands_opt =
      floquet->add_option("--bands", bands_grid, "sample band functions on an NxN phase grid");
  floquet->add_option("potential", potential_file,
                      "potential file for --bands (defaults to the zero potential)");
  add_common(floquet, common);

  int lambda_n = 0;
  CLI::App* lambda =
      app.add_subcommand("lambda-table", "trace coefficients against the multiplication oracle");
  lambda->add_option("--n", lambda_n, "arity, between 1 and 6")->required();
  lambda->add_option("--out", common.out, "write the CSV to this file");

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in acceptance matrix");
  selftest->add_option("--seed", common.seed, "random seed for the search rows");
  selftest->add_option("--threads", common.threads, "solver threads")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--out", common.out, "write the report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rigidity->parsed())
      return isospectra::cli::run_rigidity(matrix_file, mode, common, std::cout);
    if (floquet->parsed()) {
      isospectra::cli::FloquetRequest req;
      req.periods = parse_periods(periods_str);
      req.search = do_search;
      req.check = check_files;
      if (bands_opt->count() > 0) req.bands = bands_grid;
      req.potential_file = potential_file;
      return isospectra::cli::run_floquet(req, common, std::cout);
    }
    if (lambda->parsed()) return isospectra::cli::run_lambda_table(lambda_n, common, std::cout);
    if (selftest->parsed()) return isospectra::cli::run_selftest(common, std::cout);
  } catch (const isospectra::argument_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const isospectra::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
