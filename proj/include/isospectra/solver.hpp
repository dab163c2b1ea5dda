#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isospectra/invariants.hpp"
#include "isospectra/minors.hpp"

namespace isospectra {

using Complex = std::complex<double>;

enum class SolveMode { NewtonMultistart, TotalDegreeHomotopy };

struct SolveConfig {
  double residual_tol = 1e-10;
  double zero_threshold = 1e-6;
  // 0 picks 200 * n! once the arity is known.
  long max_restarts = 0;
  int newton_max_iter = 100;
  std::uint64_t seed = 1;
  SolveMode mode = SolveMode::NewtonMultistart;
  int threads = 1;
  // Restrict the search to real diagonal shifts.
  bool real_only = false;
  // Sharpen an accepted witness with software floats (~77 digits).
  bool polish = false;

  void validate() const;
};

struct Witness {
  std::vector<Complex> d;
  // Largest characteristic-polynomial coefficient deviation at d.
  double residual = 0.0;
  SolveMode method = SolveMode::NewtonMultistart;
  bool certified_nonzero = false;
  std::uint64_t seed = 0;
  long restarts_used = 0;
};

// Values (S_1(D), ..., S_n(D)) of the generators at the complex point D.
std::vector<Complex> evaluate_system(const SpectralIdeal& e, std::span<const Complex> d);

// Row-major n x n matrix with entry (i, j) = dS_i/dv_j at D.
std::vector<Complex> jacobian(const SpectralIdeal& e, std::span<const Complex> d);

// Searches for a nonzero diagonal shift D making A + D isospectral to A.
// Newton multistart draws starts from a complex ball scaled by the largest
// matrix entry and rejects convergence to the origin; the homotopy mode
// tracks every Bezout path of the start system {v_i^i - c_i} and filters
// nonzero endpoints. Returns the lowest-index verified witness, so results
// are reproducible for a fixed seed regardless of thread count.
std::optional<Witness> find_nonzero_witness(const RationalMatrix& a, const SolveConfig& cfg = {});

// Max over i of |S_i(D)|, with exact rational coefficients evaluated in
// complex arithmetic; equals the characteristic-polynomial deviation.
double verify_witness(const RationalMatrix& a, std::span<const Complex> d);

enum class CertifyStatus { Rigid, NotRigid, Inconclusive };

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Inconclusive;
  // The minor-pairing criterion, reported alongside for cross-checking;
  // the two verdicts agree whenever status is conclusive.
  bool minor_criterion = false;
  std::string detail;
};

// Exact rigidity certificate: the generators vanish only at the origin,
// decided through a Groebner basis. Budget exhaustion yields Inconclusive.
CertifyResult certify_rigid(const RationalMatrix& a, const GroebnerOptions& opts = {});

// Diagnostic surface for the path tracker: every converged endpoint of the
// total-degree homotopy toward the system of E, including the origin.
struct HomotopyRun {
  std::vector<std::vector<Complex>> endpoints;
  long paths_tracked = 0;
  long paths_failed = 0;
};

HomotopyRun homotopy_endpoints(const SpectralIdeal& e, std::uint64_t seed, int threads = 1);

}  // namespace isospectra
