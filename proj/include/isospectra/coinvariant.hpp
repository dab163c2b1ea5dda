#pragma once

#include <cstdint>
#include <vector>

#include "isospectra/invariants.hpp"
#include "isospectra/poly.hpp"

namespace isospectra {

// The staircase basis of the quotient modulo (e_1..e_n): monomials with
// exponent of v_i at most n - i. There are exactly n! of them. Basis order
// is ascending (total degree, lex) and is the coordinate convention for
// every matrix built here.
std::vector<Monomial> artin_basis(int n);

// Remainder of p after rewriting modulo the triangular basis
// {H_(n-j+1)(v_1..v_j)} of the symmetric ideal, lex order v1 < ... < vn.
// Every surviving monomial lies on the staircase.
ExactPoly artin_reduction(const ExactPoly& p);

// Same reduction, also expressing the removed part over e_1..e_n:
// p = remainder + sum_s e_cofactors[s-1] * e_s, an exact identity.
struct ArtinReduction {
  ExactPoly remainder;
  std::vector<ExactPoly> e_cofactors;
};

ArtinReduction artin_reduction_with_cofactors(const ExactPoly& p);

// Normal form of p in the quotient by a perturbed ideal: repeatedly Artin-
// reduce and substitute e_s -> -g_s into the cofactors. Each pass strictly
// drops total degree, so the recursion is finite. The result is supported
// on the staircase and represents p modulo the ideal.
ExactPoly normal_form_mod_ideal(const ExactPoly& p, const SpectralIdeal& e);

// Matrix of multiplication by u on the quotient, in artin_basis coordinates
// (column b holds the coordinates of u * b).
struct MultMatrix {
  int n = 0;
  long long dim = 0;
  ExactPoly u;
  std::vector<Monomial> basis;
  std::vector<Rational> entries;  // row-major dim x dim

  const Rational& at(long long r, long long c) const { return entries[r * dim + c]; }
  Rational trace() const;
  // Coefficients c_0..c_dim of det(lambda I - M) = sum_i c_i lambda^(dim-i),
  // by the Faddeev-LeVerrier recurrence (exact over Q).
  std::vector<Rational> charpoly() const;
};

MultMatrix mult_matrix(const ExactPoly& u, const SpectralIdeal& e);

// Trace of multiplication by u without materializing the matrix.
Rational mult_trace(const ExactPoly& u, const SpectralIdeal& e);

// Trace obstruction attached to the square-free monomial v^J (bit i-1 of
// mask = v_i). Vanishes identically on the unperturbed ideal.
Rational hc_obstruction(const SpectralIdeal& e, std::uint32_t mask_j);

// Closed-form coefficient of the top obstruction: for u = v_1..v_m and a
// single cell in slot m+k meeting [m] in j letters,
//   lambda(n,m,k,j) = m * (-1)^(j+1) * (m+k-j-1)! * (n-m-k+j)!.
struct LambdaKey {
  int n = 0, m = 0, k = 0, j = 0;
};

Rational lambda_closed_form(const LambdaKey& key);

// Independent oracle: the same number computed as an actual trace on the
// quotient by (e_1, .., e_(m+k) + v^J, .., e_n) with |J| = k.
Rational lambda_via_trace(int n, int m, int k, std::uint32_t mask_j);

// m!(n-m)! * (sum of all m x m principal minors) - n! * det(A_[m]).
// Equals hc_obstruction(spectral_invariants(A), [m]) whenever all principal
// minors of sizes below m are sizewise equal.
Rational top_obstruction_value(const RationalMatrix& a, int m);

// Every valid key for a given arity, row-major over (m, k, j).
std::vector<LambdaKey> lambda_keys(int n);

}  // namespace isospectra
