#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "isospectra/rational.hpp"

namespace isospectra {

// Sparse Laurent polynomial over Q in z_1..z_k: exponents may be negative.
// Terms are kept in a map ordered lexicographically on the exponent vector,
// which is a translation-invariant total order on Z^k, so leading terms
// multiply and exact division works term by term.
// Invariant: no zero coefficients stored; all keys have size nvars().
class LaurentPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, const Rational& c);
  // z_i^power, 1-based variable index, any integer power.
  static LaurentPoly variable(int nvars, int i, int power = 1);
  static LaurentPoly term(Exp e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exp& e, const Rational& c);
  Rational coeff(const Exp& e) const;

  // Largest exponent vector in lex order; poly must be nonzero.
  const Exp& leading_exp() const;
  const Rational& leading_coeff() const;

  LaurentPoly& operator+=(const LaurentPoly& p);
  LaurentPoly& operator-=(const LaurentPoly& p);
  LaurentPoly operator+(const LaurentPoly& p) const;
  LaurentPoly operator-(const LaurentPoly& p) const;
  LaurentPoly operator*(const LaurentPoly& p) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const Rational& c) const;
  bool operator==(const LaurentPoly& p) const;

  // this -= c * z^e * p, the division inner step.
  void sub_mul(const Rational& c, const Exp& e, const LaurentPoly& p);

  // Substitutes z_i -> z_i^{-1} for every variable.
  LaurentPoly invert_vars() const;

  // Widens to `nvars` variables, appending zero exponents.
  LaurentPoly embedded(int nvars) const;

  // All z_i must be nonzero.
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  std::string str(const std::string& stem = "z") const;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

// Exact quotient f / g. Every leading-term cancellation discovers one term
// of the quotient in decreasing order, so the loop is bounded by the size
// of the quotient's exponent box. Throws argument_error when g = 0 or f is
// not a multiple of g.
LaurentPoly laurent_divide_exact(const LaurentPoly& f, const LaurentPoly& g);

// Determinant of a k x k matrix given row-major, by fraction-free (Bareiss)
// elimination with row-swap pivoting; all interior divisions are exact.
LaurentPoly laurent_determinant(std::vector<LaurentPoly> m, int k);

}  // namespace isospectra
