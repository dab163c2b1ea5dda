#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isospectra/invariants.hpp"
#include "isospectra/laurent.hpp"
#include "isospectra/solver.hpp"

namespace isospectra {

// Period tuple (q_1, ..., q_d). The fundamental domain has total() points,
// indexed row-major with n_1 varying fastest and n_d slowest.
struct Periods {
  std::vector<int> q;

  int dim() const { return static_cast<int>(q.size()); }
  long total() const;
  void validate() const;  // dim >= 1, every q_i >= 1, total bounded

  long index(std::span<const int> n) const;
  std::vector<int> point(long idx) const;

  bool operator==(const Periods& o) const { return q == o.q; }
};

// Periodic potential as its values on the fundamental domain. Numeric
// values are always present; exact values are carried alongside when the
// potential was given over Q, and exact-mode operations require them.
struct Potential {
  Periods periods;
  std::vector<std::complex<double>> values;
  std::optional<std::vector<Rational>> exact;

  static Potential zero(const Periods& p);
  static Potential from_exact(const Periods& p, std::vector<Rational> vals);
  static Potential from_values(const Periods& p, std::vector<std::complex<double>> vals);

  bool is_exact() const { return exact.has_value(); }
  void validate() const;
};

// Finite matrix of the Laplacian-plus-potential eigenproblem on the
// fundamental domain, with boundary multipliers z_1..z_d. The hop table
// holds the potential-independent Laurent structure; the potential sits on
// the diagonal, so entry (i, j) = hop[i*size+j] + (i == j ? V(i) : 0).
// Satisfies L_V(z) = L_V^T(z^{-1}) coefficientwise.
struct FloquetMatrix {
  Periods periods;
  int size = 0;
  std::vector<LaurentPoly> hop;  // row-major size x size, nvars = dim
  Potential v;

  // Exact symbolic entry; requires an exact potential.
  LaurentPoly entry(int i, int j) const;
  // Dense numeric instantiation at a point of the torus, row-major.
  std::vector<std::complex<double>> at(std::span<const std::complex<double>> z) const;
};

FloquetMatrix build_floquet_matrix(const Periods& p, const Potential& v);

// det(L_V(z) - lambda I) as a Laurent polynomial in z_1..z_d and lambda.
// Keys of the numeric map are exponent vectors of length dim+1 with the
// lambda degree last (always >= 0). The z-support along axis j is bounded
// by total/q_j in absolute value.
struct DispersionPoly {
  Periods periods;
  bool exact_mode = false;
  LaurentPoly exact;  // nvars = dim+1, valid iff exact_mode
  std::map<LaurentPoly::Exp, std::complex<double>> approx;
};

enum class DispersionMode { Auto, Exact, Numeric };

// Exact mode expands the determinant by fraction-free elimination over the
// Laurent ring (requires an exact potential, total <= 12). Numeric mode
// samples determinants on a tensor grid of roots of unity in z and scaled
// roots of unity in lambda, then inverts the discrete Fourier transform
// axis by axis (total <= 64 and a bounded evaluation budget). Auto picks
// exact when the potential is exact and total <= 8.
DispersionPoly dispersion_poly(const Periods& p, const Potential& v,
                               DispersionMode mode = DispersionMode::Auto);

// Coefficientwise equality of the two dispersion polynomials: exact mode
// compares exactly, numeric mode within tol on the union of supports.
bool floquet_isospectral(const Potential& v, const Potential& w,
                         DispersionMode mode = DispersionMode::Auto, double tol = 1e-9);

// The system of polynomial conditions on the potential values under which
// a potential is isospectral to zero: one generator per monomial z^a
// lambda^b whose coefficient in the dispersion polynomial depends on the
// potential. Generators are polynomials in the total() fundamental-domain
// values, ordered by lambda degree descending, then z-exponent; the sign
// normalization makes the one-axis system literally equal the generator
// list of spectral_invariants(cycle_adjacency(q)).
struct FloquetIdeal {
  Periods periods;
  int nvars = 0;
  std::vector<LaurentPoly::Exp> keys;  // parallel to generators, length dim+1
  std::vector<ExactPoly> generators;
};

FloquetIdeal spectral_invariant_system(const Periods& p);

// Same conditions around a fixed exact base potential: generators are the
// coefficients of the dispersion gap between base-plus-v and base. The
// base holds one rational per fundamental-domain site; the plain overload
// is the zero base.
FloquetIdeal spectral_invariant_system(const Periods& p, std::span<const Rational> base);

// Adjacency matrix of the q-cycle: 1 at distance +-1 mod q, with the
// degenerate doublings at q <= 2 ([2] and [[0,2],[2,0]]). This is the
// one-axis Floquet matrix with z fixed to 1 and zero potential.
RationalMatrix cycle_adjacency(int q);

// V_P(n) = V(n mod Q) on the finer period lattice; every q_i must divide
// the matching p_i.
Potential lift_potential(const Potential& v, const Periods& target);

// Eigenvalues of the numeric Floquet matrix on a uniform roots-of-unity
// grid (grid points per axis, k_1 fastest), each list sorted by real part
// then imaginary part.
struct BandSample {
  std::vector<std::complex<double>> z;
  std::vector<std::complex<double>> eigenvalues;
};

std::vector<BandSample> band_spectrum_sample(const Periods& p, const Potential& v, int grid);

// Multiset comparison after sorting by (real, imaginary): greedily matches
// each value to the nearest unused partner within tol.
bool eigenvalue_multisets_match(std::span<const std::complex<double>> a,
                                std::span<const std::complex<double>> b, double tol);

enum class FloquetOutcome { WitnessFound, Rigid, Inconclusive };

// Search for a nonzero potential isospectral to zero. Axes with period 1
// or 2 reduce away; an axis with period >= 4 is solved through its cycle
// matrix and the solution lifted back to the full period lattice; what
// remains is all threes, certified rigid exactly when at most two axes
// survive and left inconclusive otherwise.
struct FloquetSearch {
  FloquetOutcome outcome = FloquetOutcome::Inconclusive;
  std::optional<Potential> potential;  // present iff outcome == WitnessFound
  std::optional<Witness> witness;      // the underlying one-axis solver witness
  int axis = -1;                       // axis whose cycle system was solved
  std::string detail;
};

FloquetSearch find_isospectral_potential(const Periods& p, const SolveConfig& cfg = {},
                                         const GroebnerOptions& gopts = {});

}  // namespace isospectra
