#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isospectra::cli {

// Flags shared across subcommands. `tol` falls back to a per-command
// default when unset; `out` redirects the report or CSV artifact to a file
// (the stream then stays quiet apart from selftest progress lines).
struct CommonOptions {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::optional<long long> budget;  // Groebner step cap
  std::string out;
};

// Explicit flag, then the ISOSPECTRA_SEED environment variable, then 1.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& from_flag);

// Each runner emits its artifact and returns the process exit code:
// 0 when every requested check passed, 1 when one failed. Malformed
// inputs throw argument_error; blown resource caps throw resource_error.
int run_rigidity(const std::string& matrix_path, const std::string& mode,
                 const CommonOptions& opt, std::ostream& os);

struct FloquetRequest {
  std::vector<int> periods;
  bool search = false;
  std::vector<std::string> check;  // two potential files
  std::optional<int> bands;        // grid points per axis
  std::string potential_file;      // optional potential for --bands
};

int run_floquet(const FloquetRequest& req, const CommonOptions& opt, std::ostream& os);

int run_lambda_table(int n, const CommonOptions& opt, std::ostream& os);

int run_selftest(const CommonOptions& opt, std::ostream& os);

}  // namespace isospectra::cli
