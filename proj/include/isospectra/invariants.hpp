#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "isospectra/groebner.hpp"
#include "isospectra/minors.hpp"
#include "isospectra/poly.hpp"

namespace isospectra {

// Multilinear polynomial: every variable appears to power at most one, so
// terms are just subsets of [n]. Bit i-1 of a mask stands for v_i.
struct SquareFreePoly {
  int n = 0;
  std::map<std::uint32_t, Rational> terms;

  ExactPoly to_exact(OrderKind ord = OrderKind::GrevLex) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;
  bool is_zero() const { return terms.empty(); }
};

// Coefficient table for a family of square-free perturbations: cell
// ((i, J) -> a) contributes a * v^J to the i-th generator. Constraint:
// |J| <= i - 1, so every perturbation has degree strictly below its slot.
struct PerturbationTable {
  int n = 0;
  std::map<std::pair<int, std::uint32_t>, Rational> cells;

  void validate() const;
  bool operator==(const PerturbationTable& o) const { return n == o.n && cells == o.cells; }
};

// Ideal (e_1 + g_1, ..., e_n + g_n) with deg(g_i) < i. The degree bound
// makes the top-degree parts a regular sequence, so the quotient always has
// vector-space dimension n!; degenerate ideals are unrepresentable.
class SpectralIdeal {
 public:
  static SpectralIdeal from_table(const PerturbationTable& table);
  // General perturbations, not necessarily square-free. g may be shorter
  // than n; missing tail entries are zero.
  static SpectralIdeal from_perturbations(int n, std::vector<ExactPoly> g);

  int n() const { return n_; }
  // Generator i (0-based slot i-1) equals e_i + g_i, in grevlex.
  const std::vector<ExactPoly>& generators() const { return gens_; }
  const std::vector<ExactPoly>& perturbations() const { return perts_; }
  bool square_free() const { return square_free_; }
  // Present iff every perturbation is square-free.
  const std::optional<PerturbationTable>& table() const { return table_; }

 private:
  SpectralIdeal() = default;
  int n_ = 0;
  std::vector<ExactPoly> gens_;
  std::vector<ExactPoly> perts_;
  bool square_free_ = false;
  std::optional<PerturbationTable> table_;
};

// The ideal of spectral invariants of A: generator i collects the degree-i
// coefficient of det(A + diag(v) - lambda I) minus its value at v = 0.
// Coefficient of v^J is the sum of principal minors of A over subsets of
// the complement of J of size i - |J|.
SpectralIdeal spectral_invariants(const RationalMatrix& a);

SpectralIdeal ideal_from_table(const PerturbationTable& table);

// True iff the ideal equals (e_1, ..., e_n); decided by comparing reduced
// Groebner bases in grevlex.
bool equals_elementary_ideal(const SpectralIdeal& e, const GroebnerOptions& opts = {});

// Scaling action: the coefficient on a degree-k term of g_i picks up t^(i-k).
// Substituting t = eigenvalue-scaling corresponds to dilating the spectrum.
SpectralIdeal scale_ideal(const SpectralIdeal& e, const Rational& t);

}  // namespace isospectra
